#pragma once

#include "sepclust/algorithms.hpp"
#include "sepclust/colored.hpp"
#include "sepclust/errors.hpp"
#include "sepclust/generators.hpp"
#include "sepclust/geometry.hpp"
#include "sepclust/io.hpp"
#include "sepclust/oracle.hpp"
#include "sepclust/quorum.hpp"
#include "sepclust/separation.hpp"
#include "sepclust/version.hpp"
