#pragma once

#include "sepclust/geometry.hpp"

#include <algorithm>
#include <vector>

namespace sepclust {

/// k point sets P_0..P_{k-1} stored as one point set plus a color per point.
/// Indices into `points()` are the stable identifiers; colors are 0..k-1, each used at least once.
class ColoredInstance {
  public:
    ColoredInstance(PointSet points, std::vector<std::size_t> colors)
      : points_(std::move(points))
      , colors_(std::move(colors)) {
        if (colors_.size() != points_.size()) {
            throw InvalidArgument("one color per point required");
        }
        if (points_.empty()) {
            throw EmptySet("ColoredInstance");
        }
        num_colors_ = *std::max_element(colors_.begin(), colors_.end()) + 1;
        members_.assign(num_colors_, {});
        for (std::size_t i = 0; i < colors_.size(); ++i) {
            members_[colors_[i]].push_back(i);
        }
        for (std::size_t c = 0; c < num_colors_; ++c) {
            if (members_[c].empty()) {
                throw InvalidArgument("colors must form a contiguous range; color " + std::to_string(c) +
                                      " is unused");
            }
        }
    }

    /// Concatenates `sets`; set i becomes color i.
    static ColoredInstance from_sets(const std::vector<PointSet>& sets) {
        if (sets.empty()) {
            throw EmptySet("ColoredInstance::from_sets");
        }
        PointSet all(sets.front().dim());
        std::vector<std::size_t> colors;
        for (std::size_t c = 0; c < sets.size(); ++c) {
            if (sets[c].dim() != all.dim()) {
                throw DimensionMismatch(all.dim(), sets[c].dim());
            }
            for (std::size_t i = 0; i < sets[c].size(); ++i) {
                all.push_back(sets[c][i]);
                colors.push_back(c);
            }
        }
        return ColoredInstance(std::move(all), std::move(colors));
    }

    const PointSet& points() const noexcept { return points_; }
    const std::vector<std::size_t>& colors() const noexcept { return colors_; }
    std::size_t num_colors() const noexcept { return num_colors_; }
    std::size_t dim() const noexcept { return points_.dim(); }
    std::size_t color_of(std::size_t i) const { return colors_.at(i); }

    /// Ascending indices of the points of color `c`.
    const std::vector<std::size_t>& members(std::size_t c) const { return members_.at(c); }

    PointSet color_set(std::size_t c) const { return points_.subset(members(c)); }

  private:
    PointSet points_;
    std::vector<std::size_t> colors_;
    std::size_t num_colors_ = 0;
    std::vector<std::vector<std::size_t>> members_;
};

}  // namespace sepclust
