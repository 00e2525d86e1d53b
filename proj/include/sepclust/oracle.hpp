#pragma once

#include "sepclust/colored.hpp"
#include "sepclust/geometry.hpp"
#include "sepclust/separation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

namespace sepclust {

/// Instance size caps for the exponential-time oracles.
struct OracleBudget {
    std::size_t max_n_assignment = 12;
    std::size_t max_n_ball = 40;
};

namespace detail {

/// Center in the affine hull of `pts` equidistant to all of them; false when degenerate.
inline bool affine_circumcenter(const PointSet& P, std::span<const std::size_t> pts, std::vector<double>& center) {
    const std::size_t d = P.dim();
    const std::size_t s = pts.size() - 1;
    const Coords p0 = P[pts[0]];
    std::array<std::vector<double>, 3> v;
    for (std::size_t j = 0; j < s; ++j) {
        v[j].resize(d);
        for (std::size_t t = 0; t < d; ++t) {
            v[j][t] = P[pts[j + 1]][t] - p0[t];
        }
    }
    // Gram system: sum_k lambda_k <v_j, v_k> = |v_j|^2 / 2
    std::array<std::array<double, 4>, 3> a{};
    double scale = 0.0;
    for (std::size_t j = 0; j < s; ++j) {
        for (std::size_t k = 0; k < s; ++k) {
            double dot = 0.0;
            for (std::size_t t = 0; t < d; ++t) {
                dot += v[j][t] * v[k][t];
            }
            a[j][k] = dot;
        }
        a[j][s] = a[j][j] / 2.0;
        scale = std::max(scale, a[j][j]);
    }
    if (scale == 0.0) {
        return false;
    }
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < s; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) {
                piv = r;
            }
        }
        if (std::abs(a[piv][col]) <= 1e-12 * scale) {
            return false;
        }
        std::swap(a[piv], a[col]);
        for (std::size_t r = 0; r < s; ++r) {
            if (r == col) {
                continue;
            }
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c <= s; ++c) {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    center.assign(p0.begin(), p0.end());
    for (std::size_t j = 0; j < s; ++j) {
        const double lambda = a[j][s] / a[j][j];
        for (std::size_t t = 0; t < d; ++t) {
            center[t] += lambda * v[j][t];
        }
    }
    return true;
}

}  // namespace detail

/**
 * Exact r_opt(P, alpha): the smallest radius of a ball covering alpha points of P.
 *
 * An optimal ball is the minimum enclosing ball of the points it covers, hence the circumball
 * (center in the affine hull) of at most d+1 of them. All such candidates are enumerated. On the
 * line a sliding window over the sorted coordinates suffices.
 */
inline double exact_min_ball_alpha(const PointSet& P, std::size_t alpha, const OracleBudget& budget = {}) {
    const std::size_t n = P.size();
    if (n > budget.max_n_ball) {
        throw BudgetExceeded("exact_min_ball_alpha: n = " + std::to_string(n) + " exceeds budget " +
                             std::to_string(budget.max_n_ball));
    }
    if (P.dim() > 3) {
        throw BudgetExceeded("exact_min_ball_alpha supports d <= 3");
    }
    if (alpha < 1 || alpha > n) {
        throw InvalidArgument("alpha must lie in [1, n]");
    }
    if (alpha == 1) {
        return 0.0;
    }
    if (P.dim() == 1) {
        std::vector<double> xs(P.flat());
        std::sort(xs.begin(), xs.end());
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + alpha <= n; ++i) {
            best = std::min(best, (xs[i + alpha - 1] - xs[i]) / 2.0);
        }
        return best;
    }

    const std::size_t d = P.dim();
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> center;
    std::vector<std::size_t> pick;
    auto consider = [&]() {
        if (!detail::affine_circumcenter(P, pick, center)) {
            return;
        }
        const double r = distance(center, P[pick[0]]);
        if (r >= best) {
            return;
        }
        const double reach = r * (1.0 + kRelativeTolerance);
        std::size_t covered = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (distance(center, P[i]) <= reach) {
                ++covered;
            }
        }
        if (covered >= alpha) {
            best = r;
        }
    };
    // subsets of size 2..d+1 in lexicographic order
    for (std::size_t size = 2; size <= std::min(d + 1, n); ++size) {
        pick.resize(size);
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) {
            idx[i] = i;
        }
        for (;;) {
            std::copy(idx.begin(), idx.end(), pick.begin());
            consider();
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == n - size + pos - 1) {
                --pos;
            }
            if (pos == 0) {
                break;
            }
            ++idx[pos - 1];
            for (std::size_t j = pos; j < size; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return best;
}

/// Optimal two-cluster witness.
struct SeparatedPair {
    std::size_t quality = 0;
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
};

namespace detail {

class PairSearch {
  public:
    PairSearch(const PointSet& P, double sigma, SeparationKind kind)
      : n_(P.size())
      , sigma_(sigma)
      , kind_(kind)
      , dist_(n_ * n_) {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                dist_[i * n_ + j] = distance(P[i], P[j]);
            }
        }
    }

    SeparatedPair run() {
        recurse(0, 0.0, 0.0, std::numeric_limits<double>::infinity());
        return best_;
    }

  private:
    double d(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }

    bool separated(double d1, double d2, double cross) const {
        const double term = kind_ == SeparationKind::Semi ? std::min(d1, d2) : std::max(d1, d2);
        return cross >= sigma_ * term * (1.0 - kRelativeTolerance);
    }

    void offer() {
        const std::size_t q = std::min(first_.size(), second_.size());
        if (q == 0) {
            return;
        }
        const bool better = q > best_.quality ||
                            (q == best_.quality && std::tie(first_, second_) < std::tie(best_.first, best_.second));
        if (better) {
            best_.quality = q;
            best_.first = first_;
            best_.second = second_;
        }
    }

    void recurse(std::size_t i, double d1, double d2, double cross) {
        const std::size_t rem = n_ - i;
        const std::size_t c1 = first_.size();
        const std::size_t c2 = second_.size();
        const std::size_t bound = std::min({c1 + rem, c2 + rem, (c1 + c2 + rem) / 2});
        if (bound < best_.quality || bound == 0) {
            return;
        }
        if (i == n_) {
            offer();
            return;
        }
        // into the first cluster
        {
            double nd1 = d1;
            double ncross = cross;
            for (auto j : first_) nd1 = std::max(nd1, d(i, j));
            for (auto j : second_) ncross = std::min(ncross, d(i, j));
            if (separated(nd1, d2, ncross)) {
                first_.push_back(i);
                recurse(i + 1, nd1, d2, ncross);
                first_.pop_back();
            }
        }
        // into the second cluster; the lowest clustered index always opens the first cluster
        if (!first_.empty()) {
            double nd2 = d2;
            double ncross = cross;
            for (auto j : second_) nd2 = std::max(nd2, d(i, j));
            for (auto j : first_) ncross = std::min(ncross, d(i, j));
            if (separated(d1, nd2, ncross)) {
                second_.push_back(i);
                recurse(i + 1, d1, nd2, ncross);
                second_.pop_back();
            }
        }
        recurse(i + 1, d1, d2, cross);
    }

    std::size_t n_;
    double sigma_;
    SeparationKind kind_;
    std::vector<double> dist_;
    std::vector<std::size_t> first_;
    std::vector<std::size_t> second_;
    SeparatedPair best_;
};

}  // namespace detail

/**
 * Best two-cluster quality over all assignments of points to {C1, C2, neither}.
 *
 * Depth-first over the base-3 assignment tree, with the lowest clustered index forced into C1.
 * Separation only gets harder as points are added (cross distance shrinks, diameters grow), so a
 * violating partial assignment is cut together with its subtree; so is any branch whose size
 * bound cannot reach the incumbent. The result is exact. Ties keep the lexicographically
 * smallest (C1, C2).
 */
inline SeparatedPair best_separated_pair(const PointSet& P, double sigma, SeparationKind kind,
                                         const OracleBudget& budget = {}) {
    if (P.size() > budget.max_n_assignment) {
        throw BudgetExceeded("best_separated_pair: n = " + std::to_string(P.size()) + " exceeds budget " +
                             std::to_string(budget.max_n_assignment));
    }
    if (P.size() < 2) {
        throw InvalidArgument("best_separated_pair needs at least two points");
    }
    if (!(sigma > 0.0)) {
        throw InvalidArgument("sigma must be > 0");
    }
    return detail::PairSearch(P, sigma, kind).run();
}

/// Smallest gap between consecutive sorted values of a one-dimensional index subset.
inline double min_consecutive_gap(const PointSet& P, std::span<const std::size_t> idx) {
    std::vector<double> xs;
    for (auto i : idx) {
        xs.push_back(P[i][0]);
    }
    std::sort(xs.begin(), xs.end());
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < xs.size(); ++i) {
        gap = std::min(gap, xs[i] - xs[i - 1]);
    }
    return gap;
}

/**
 * Checks the premises that make strong separation of three colors useless on the three-color
 * line: any two points of color 2 are at least n apart, colors 0 and 1 together span at most
 * 2n, and sigma times that gap exceeds their span (always true for sigma >= 3).
 */
inline bool check_three_color_hopeless(const ColoredInstance& I, double sigma) {
    if (I.num_colors() != 3 || I.dim() != 1) {
        throw InvalidArgument("three-color check needs a one-dimensional instance with three colors");
    }
    const PointSet& P = I.points();
    const double n = static_cast<double>(I.members(2).size());
    const double gap = min_consecutive_gap(P, I.members(2));
    std::vector<std::size_t> low(I.members(0));
    low.insert(low.end(), I.members(1).begin(), I.members(1).end());
    const double span = diameter(P, low);
    return gap >= n && span <= 2.0 * n && sigma * gap > span;
}

}  // namespace sepclust
