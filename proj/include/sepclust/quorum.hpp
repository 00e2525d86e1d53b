#pragma once

#include "sepclust/detail/alpha_ball_queue.hpp"
#include "sepclust/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sepclust {

struct QuorumStep {
    Ball ball;
    std::vector<std::size_t> members;  ///< ascending input indices
};

/// Quorum clustering: repeatedly cut the (approximately) smallest ball holding gamma points.
struct QuorumClustering {
    std::size_t gamma = 1;
    std::vector<QuorumStep> steps;
    std::vector<double> radii;

    std::size_t size() const noexcept { return steps.size(); }
};

/// Half-open range [begin, end) of quorum steps.
struct EpochRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
    friend bool operator==(const EpochRange&, const EpochRange&) = default;
};

struct EpochPartition {
    std::vector<EpochRange> ranges;

    std::size_t size() const noexcept { return ranges.size(); }
};

/**
 * Quorum clustering of the subset `indices` of `P` with quorum size `gamma`.
 *
 * Each step takes the alpha-ball of the survivors with alpha = min(gamma, survivors), keeps the
 * gamma covered points nearest its center (ties by index) and removes them. Only the final step
 * may hold fewer than gamma points.
 */
inline QuorumClustering quorum_clustering(const PointSet& P, std::vector<std::size_t> indices, std::size_t gamma) {
    if (gamma < 1) {
        throw InvalidArgument("quorum size must be >= 1");
    }
    if (indices.empty()) {
        throw EmptySet("quorum_clustering");
    }
    QuorumClustering out;
    out.gamma = gamma;
    detail::AlphaBallQueue queue(P, std::move(indices), gamma);
    while (queue.active_count() >= gamma) {
        auto [ball, center] = queue.top();
        auto members = nearest_members(P, queue.active(), ball.center, gamma);
        queue.remove(members);
        out.radii.push_back(ball.radius);
        out.steps.push_back(QuorumStep{std::move(ball), std::move(members)});
    }
    if (queue.active_count() > 0) {
        std::vector<std::size_t> rest = queue.active();
        auto [ball, center] = approx_min_ball_alpha(P, rest, rest.size());
        std::sort(rest.begin(), rest.end());
        out.radii.push_back(ball.radius);
        out.steps.push_back(QuorumStep{std::move(ball), std::move(rest)});
    }
    return out;
}

inline QuorumClustering quorum_clustering(const PointSet& P, std::size_t gamma) {
    if (gamma < 1 || gamma > P.size()) {
        throw InvalidArgument("quorum size must lie in [1, n]");
    }
    return quorum_clustering(P, all_indices(P.size()), gamma);
}

/// Greedy left-to-right split: each epoch is the longest run whose maximum is <= 4x its first radius.
inline EpochPartition epochs(const std::vector<double>& radii) {
    EpochPartition out;
    std::size_t begin = 0;
    while (begin < radii.size()) {
        const double limit = 4.0 * radii[begin];
        std::size_t end = begin + 1;
        while (end < radii.size() && radii[end] <= limit) {
            ++end;
        }
        out.ranges.push_back(EpochRange{begin, end});
        begin = end;
    }
    return out;
}

/// Number of `balls` containing `q`.
inline std::size_t cover_depth(std::span<const Ball> balls, Coords q) {
    std::size_t depth = 0;
    for (const auto& b : balls) {
        if (b.dim() != q.size()) {
            throw DimensionMismatch(b.dim(), q.size());
        }
        if (b.contains(q)) {
            ++depth;
        }
    }
    return depth;
}

/// Largest cover depth, over every epoch of `qc` and every point of `P`, of that epoch's balls.
inline std::size_t max_epoch_cover_depth(const PointSet& P, const QuorumClustering& qc) {
    const auto part = epochs(qc.radii);
    std::size_t best = 0;
    std::vector<Ball> balls;
    for (const auto& range : part.ranges) {
        balls.clear();
        for (std::size_t s = range.begin; s < range.end; ++s) {
            balls.push_back(qc.steps[s].ball);
        }
        for (std::size_t i = 0; i < P.size(); ++i) {
            best = std::max(best, cover_depth(balls, P[i]));
        }
    }
    return best;
}

/// Dimension-only ceiling on per-epoch cover depth: (2 + ceil(64 sqrt(d)))^d.
inline double packing_depth_bound(std::size_t d) {
    const double side = 2.0 + std::ceil(64.0 * std::sqrt(static_cast<double>(d)));
    return std::pow(side, static_cast<double>(d));
}

/// ceil(log_4(spread)) + 2: the epoch count bound for gamma >= 2.
inline std::size_t epoch_count_bound(double spread_value) {
    const double l4 = std::log(spread_value) / std::log(4.0);
    return static_cast<std::size_t>(std::max(0.0, std::ceil(l4 - 1e-12))) + 2;
}

}  // namespace sepclust
