#pragma once

namespace sepclust {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sepclust
