#pragma once

#include "sepclust/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sepclust {

/// Relative slack applied to every point-in-ball and separation comparison.
inline constexpr double kRelativeTolerance = 1e-9;

using Coords = std::span<const double>;

/// A point of R^d with finite coordinates.
class Point {
  public:
    explicit Point(std::vector<double> coords)
      : coords_(std::move(coords)) {
        if (coords_.empty()) {
            throw InvalidArgument("point must have dimension >= 1");
        }
        for (double c : coords_) {
            if (!std::isfinite(c)) {
                throw InvalidArgument("point coordinates must be finite");
            }
        }
    }

    Point(std::initializer_list<double> coords)
      : Point(std::vector<double>(coords)) {}

    explicit Point(Coords coords)
      : Point(std::vector<double>(coords.begin(), coords.end())) {}

    std::size_t dim() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    Coords coords() const noexcept { return coords_; }
    operator Coords() const noexcept { return coords_; }

    friend bool operator==(const Point&, const Point&) = default;

  private:
    std::vector<double> coords_;
};

/// Ordered points of one common dimension, stored row-major. Indices are stable identifiers.
class PointSet {
  public:
    explicit PointSet(std::size_t dim)
      : dim_(dim) {
        if (dim == 0) {
            throw InvalidArgument("point set dimension must be >= 1");
        }
    }

    PointSet(std::size_t dim, std::vector<double> flat)
      : PointSet(dim) {
        if (flat.size() % dim != 0) {
            throw InvalidArgument("coordinate buffer is not a multiple of the dimension");
        }
        for (double c : flat) {
            if (!std::isfinite(c)) {
                throw InvalidArgument("point coordinates must be finite");
            }
        }
        data_ = std::move(flat);
    }

    static PointSet from_points(const std::vector<Point>& points) {
        if (points.empty()) {
            throw EmptySet("PointSet::from_points");
        }
        PointSet out(points.front().dim());
        for (const auto& p : points) {
            out.push_back(p);
        }
        return out;
    }

    /// Convenience for one-dimensional sets.
    static PointSet line(std::initializer_list<double> xs) {
        return PointSet(1, std::vector<double>(xs));
    }

    void push_back(Coords p) {
        if (p.size() != dim_) {
            throw DimensionMismatch(dim_, p.size());
        }
        for (double c : p) {
            if (!std::isfinite(c)) {
                throw InvalidArgument("point coordinates must be finite");
            }
        }
        data_.insert(data_.end(), p.begin(), p.end());
    }

    void reserve(std::size_t n) { data_.reserve(n * dim_); }

    std::size_t size() const noexcept { return data_.size() / dim_; }
    bool empty() const noexcept { return data_.empty(); }
    std::size_t dim() const noexcept { return dim_; }

    Coords operator[](std::size_t i) const noexcept { return Coords(data_.data() + i * dim_, dim_); }
    Point point(std::size_t i) const { return Point((*this)[i]); }

    const std::vector<double>& flat() const noexcept { return data_; }

    PointSet subset(std::span<const std::size_t> indices) const {
        PointSet out(dim_);
        out.reserve(indices.size());
        for (auto i : indices) {
            out.push_back((*this)[i]);
        }
        return out;
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;

  private:
    std::size_t dim_;
    std::vector<double> data_;
};

inline double squared_distance(Coords p, Coords q) {
    if (p.size() != q.size()) {
        throw DimensionMismatch(p.size(), q.size());
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double diff = p[i] - q[i];
        acc += diff * diff;
    }
    return acc;
}

/// Euclidean distance.
inline double distance(Coords p, Coords q) {
    return std::sqrt(squared_distance(p, q));
}

struct Ball {
    Point center;
    double radius = 0.0;

    Ball(Point c, double r)
      : center(std::move(c))
      , radius(r) {
        if (!(r >= 0.0) || !std::isfinite(r)) {
            throw InvalidArgument("ball radius must be finite and >= 0");
        }
    }

    std::size_t dim() const noexcept { return center.dim(); }

    /// Same center, radius multiplied by `factor`.
    Ball scaled(double factor) const { return Ball(center, radius * factor); }

    bool contains(Coords q) const { return distance(center, q) <= radius * (1.0 + kRelativeTolerance); }
};

inline std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return idx;
}

/// Minimum distance between the index subsets `xs` and `ys` of `P`.
inline double set_distance(const PointSet& P, std::span<const std::size_t> xs, std::span<const std::size_t> ys) {
    if (xs.empty() || ys.empty()) {
        throw EmptySet("set_distance");
    }
    double best = std::numeric_limits<double>::infinity();
    for (auto i : xs) {
        for (auto j : ys) {
            best = std::min(best, squared_distance(P[i], P[j]));
        }
    }
    return std::sqrt(best);
}

inline double set_distance(const PointSet& X, const PointSet& Y) {
    if (X.empty() || Y.empty()) {
        throw EmptySet("set_distance");
    }
    if (X.dim() != Y.dim()) {
        throw DimensionMismatch(X.dim(), Y.dim());
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < X.size(); ++i) {
        for (std::size_t j = 0; j < Y.size(); ++j) {
            best = std::min(best, squared_distance(X[i], Y[j]));
        }
    }
    return std::sqrt(best);
}

inline double diameter(const PointSet& P, std::span<const std::size_t> xs) {
    if (xs.empty()) {
        throw EmptySet("diameter");
    }
    double best = 0.0;
    for (std::size_t a = 0; a < xs.size(); ++a) {
        for (std::size_t b = a + 1; b < xs.size(); ++b) {
            best = std::max(best, squared_distance(P[xs[a]], P[xs[b]]));
        }
    }
    return std::sqrt(best);
}

inline double diameter(const PointSet& P) {
    if (P.empty()) {
        throw EmptySet("diameter");
    }
    const auto idx = all_indices(P.size());
    return diameter(P, idx);
}

inline double closest_pair(const PointSet& P, std::span<const std::size_t> xs) {
    if (xs.size() < 2) {
        throw InvalidArgument("closest_pair needs at least two points");
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < xs.size(); ++a) {
        for (std::size_t b = a + 1; b < xs.size(); ++b) {
            best = std::min(best, squared_distance(P[xs[a]], P[xs[b]]));
        }
    }
    return std::sqrt(best);
}

inline double closest_pair(const PointSet& P) {
    const auto idx = all_indices(P.size());
    return closest_pair(P, idx);
}

/// diameter / closest pair. Throws InfiniteSpread when duplicates are present.
inline double spread(const PointSet& P) {
    const double cp = closest_pair(P);
    if (cp == 0.0) {
        throw InfiniteSpread();
    }
    return diameter(P) / cp;
}

/// Ball returned by the alpha-ball search, with the input index it is centered at.
struct AlphaBall {
    Ball ball;
    std::size_t center_index;
};

namespace detail {

/// alpha-th smallest distance from `center` to the points of `active` (the center itself counts).
inline double kth_distance(const PointSet& P, std::span<const std::size_t> active, std::size_t center,
                           std::size_t alpha, std::vector<double>& scratch) {
    scratch.clear();
    for (auto j : active) {
        scratch.push_back(squared_distance(P[center], P[j]));
    }
    auto nth = scratch.begin() + static_cast<std::ptrdiff_t>(alpha - 1);
    std::nth_element(scratch.begin(), nth, scratch.end());
    return std::sqrt(*nth);
}

}  // namespace detail

/**
 * 2-approximate smallest ball covering `alpha` points of the subset `active` of `P`.
 *
 * Centers are restricted to the active points: each one proposes the radius reaching its
 * alpha-th nearest active neighbour (itself included), and the smallest proposal wins, ties
 * going to the smaller center index. Recentering an optimal ball at one of its covered points
 * at most doubles its radius, so r_opt <= radius <= 2 r_opt.
 */
inline AlphaBall approx_min_ball_alpha(const PointSet& P, std::span<const std::size_t> active, std::size_t alpha) {
    if (alpha < 1 || alpha > active.size()) {
        throw InvalidArgument("alpha must lie in [1, " + std::to_string(active.size()) + "], got " +
                              std::to_string(alpha));
    }
    std::vector<double> scratch;
    scratch.reserve(active.size());
    double best_radius = std::numeric_limits<double>::infinity();
    std::size_t best_center = std::numeric_limits<std::size_t>::max();
    for (auto c : active) {
        const double r = detail::kth_distance(P, active, c, alpha, scratch);
        if (r < best_radius || (r == best_radius && c < best_center)) {
            best_radius = r;
            best_center = c;
        }
    }
    return AlphaBall{Ball(P.point(best_center), best_radius), best_center};
}

inline Ball approx_min_ball_alpha(const PointSet& P, std::size_t alpha) {
    const auto idx = all_indices(P.size());
    return approx_min_ball_alpha(P, idx, alpha).ball;
}

/// The `count` points of `active` nearest to `center`, ties by index, returned in ascending index order.
inline std::vector<std::size_t> nearest_members(const PointSet& P, std::span<const std::size_t> active, Coords center,
                                                std::size_t count) {
    std::vector<std::pair<double, std::size_t>> order;
    order.reserve(active.size());
    for (auto j : active) {
        order.emplace_back(squared_distance(center, P[j]), j);
    }
    count = std::min(count, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count), order.end());
    std::vector<std::size_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(order[i].second);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sepclust
