#pragma once

#include "sepclust/colored.hpp"
#include "sepclust/detail/alpha_ball_queue.hpp"
#include "sepclust/geometry.hpp"
#include "sepclust/quorum.hpp"
#include "sepclust/separation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace sepclust {

/// Parameters shared by the four extraction algorithms.
///
/// With `alpha` unset the cluster size is chosen automatically: either from `c_override`
/// through the closed-form size formula of the algorithm, or (default) as the largest size for
/// which the extraction completes, found by doubling followed by binary search.
struct ExtractionConfig {
    double sigma = 1.0;
    std::size_t k = 1;
    std::optional<std::size_t> alpha;
    std::optional<double> c_override;
};

struct ExtractionResult {
    Clustering clustering;
    std::vector<Ball> balls;                     ///< balls[i] produced clustering.clusters[i]
    std::vector<std::size_t> extraction_order;   ///< cluster indices in the order they were picked
    std::size_t alpha = 0;
};

// Covering constants. These only document the quality guarantees; they never drive control flow.

/// A ball of radius (2s+2)r is covered by ceil(4(2s+2)sqrt(d))^d cells of diameter <= r/2;
/// for s >= 1 that count is at most semi_covering_constant(d) * s^d.
inline double semi_covering_constant(std::size_t d) {
    const double side = std::ceil(16.0 * std::sqrt(static_cast<double>(d)) + 1.0);
    return std::pow(side, static_cast<double>(d));
}

/// Adds the (8+2s)^d <= (10 s)^d exclusion volume and the per-epoch packing depth.
inline double strong_covering_constant(std::size_t d) {
    return semi_covering_constant(d) * std::pow(10.0, static_cast<double>(d)) * packing_depth_bound(d);
}

/// floor(n / (k K_semi(d) sigma^d)).
inline std::size_t semi_quality_floor(std::size_t n, std::size_t k, std::size_t d, double sigma) {
    const double denom = static_cast<double>(k) * semi_covering_constant(d) * std::pow(sigma, static_cast<double>(d));
    return static_cast<std::size_t>(std::floor(static_cast<double>(n) / denom));
}

/// floor(n / (k K_strong(d) sigma^d log2(spread))).
inline std::size_t strong_quality_floor(std::size_t n, std::size_t k, std::size_t d, double sigma, double spread_value) {
    const double denom = static_cast<double>(k) * strong_covering_constant(d) *
                         std::pow(sigma, static_cast<double>(d)) * std::max(1.0, std::log2(spread_value));
    return static_cast<std::size_t>(std::floor(static_cast<double>(n) / denom));
}

namespace detail {

inline void check_config(const ExtractionConfig& cfg) {
    if (!(cfg.sigma > 0.0) || !std::isfinite(cfg.sigma)) {
        throw InvalidArgument("sigma must be finite and > 0");
    }
    if (cfg.k < 1) {
        throw InvalidArgument("k must be >= 1");
    }
    if (cfg.alpha && *cfg.alpha < 1) {
        throw InvalidArgument("explicit alpha must be >= 1");
    }
    if (cfg.c_override && !(*cfg.c_override > 0.0)) {
        throw InvalidArgument("c_override must be > 0");
    }
}

/// Outcome of one extraction at a fixed alpha.
struct Attempt {
    std::optional<ExtractionResult> result;
    std::size_t failed_iteration = 0;
    std::size_t failed_color = 0;
};

/// Largest alpha in [1, hi] accepted by `attempt`, assuming acceptance is downward closed.
/// Returns nullopt when alpha = 1 already fails.
inline std::optional<ExtractionResult> search_max_alpha(std::size_t hi, const std::function<Attempt(std::size_t)>& attempt) {
    if (hi < 1) {
        return std::nullopt;
    }
    auto first = attempt(1);
    if (!first.result) {
        return std::nullopt;
    }
    ExtractionResult best = std::move(*first.result);
    std::size_t lo = 1;
    std::size_t probe = 2;
    while (probe <= hi) {
        auto a = attempt(probe);
        if (!a.result) {
            break;
        }
        best = std::move(*a.result);
        lo = probe;
        probe *= 2;
    }
    std::size_t top = std::min(hi, probe - 1);
    while (lo < top) {
        const std::size_t mid = lo + (top - lo + 1) / 2;
        auto a = attempt(mid);
        if (a.result) {
            best = std::move(*a.result);
            lo = mid;
        } else {
            top = mid - 1;
        }
    }
    return best;
}

inline std::size_t alpha_from_constant(double c, std::size_t n, std::size_t k, std::size_t d, double sigma,
                                       double log_spread, bool round_up) {
    const double raw = c * static_cast<double>(n) /
                       (static_cast<double>(k) * std::pow(sigma, static_cast<double>(d)) * std::max(1.0, log_spread));
    const double v = round_up ? std::ceil(raw) : std::floor(raw);
    return static_cast<std::size_t>(std::max(1.0, v));
}

/// Mandatory re-verification of every algorithm output.
inline void certify(const PointSet& P, const ExtractionResult& r) {
    if (!check_separation(P, r.clustering)) {
        throw std::logic_error("internal error: extracted clustering failed separation re-verification");
    }
}

inline Attempt semi_attempt(const PointSet& P, const ExtractionConfig& cfg, std::size_t alpha) {
    Attempt out;
    AlphaBallQueue queue(P, all_indices(P.size()), alpha);
    ExtractionResult r;
    r.alpha = alpha;
    r.clustering.sigma = cfg.sigma;
    r.clustering.kind = SeparationKind::Semi;
    for (std::size_t it = 0; it < cfg.k; ++it) {
        if (queue.active_count() < alpha) {
            out.failed_iteration = it;
            return out;
        }
        auto [ball, center] = queue.top();
        auto members = nearest_members(P, queue.active(), ball.center, alpha);
        queue.remove(members);
        queue.remove_within(ball.scaled(2.0 * cfg.sigma + 2.0));
        r.clustering.clusters.push_back(std::move(members));
        r.balls.push_back(std::move(ball));
        r.extraction_order.push_back(it);
    }
    out.result = std::move(r);
    return out;
}

inline Attempt semi_colored_attempt(const ColoredInstance& I, const ExtractionConfig& cfg, std::size_t alpha) {
    Attempt out;
    const PointSet& P = I.points();
    const std::size_t k = I.num_colors();
    std::vector<AlphaBallQueue> queues;
    queues.reserve(k);
    for (std::size_t c = 0; c < k; ++c) {
        queues.emplace_back(P, I.members(c), alpha);
    }
    std::vector<char> active(k, 1);
    std::vector<std::optional<std::vector<std::size_t>>> clusters(k);
    std::vector<std::optional<Ball>> balls(k);
    ExtractionResult r;
    r.alpha = alpha;

    for (std::size_t it = 0; it < k; ++it) {
        std::optional<AlphaBall> best;
        std::size_t best_color = 0;
        for (std::size_t c = 0; c < k; ++c) {
            if (!active[c]) {
                continue;
            }
            if (queues[c].active_count() < alpha) {
                out.failed_iteration = it;
                out.failed_color = c;
                return out;
            }
            auto cand = queues[c].top();
            if (!best || cand.ball.radius < best->ball.radius) {
                best = std::move(cand);
                best_color = c;
            }
        }
        auto& q = queues[best_color];
        clusters[best_color] = nearest_members(P, q.active(), best->ball.center, alpha);
        active[best_color] = 0;
        const Ball removal = best->ball.scaled(2.0 * cfg.sigma + 2.0);
        for (std::size_t c = 0; c < k; ++c) {
            if (active[c]) {
                queues[c].remove_within(removal);
            }
        }
        balls[best_color] = best->ball;
        r.extraction_order.push_back(best_color);
    }
    r.clustering.sigma = cfg.sigma;
    r.clustering.kind = SeparationKind::Semi;
    for (std::size_t c = 0; c < k; ++c) {
        r.clustering.clusters.push_back(std::move(*clusters[c]));
        r.balls.push_back(std::move(*balls[c]));
    }
    out.result = std::move(r);
    return out;
}

/// Ball-level well separation: the gap between the balls is at least sigma times the larger diameter.
inline bool balls_well_separated(const Ball& a, const Ball& b, double sigma) {
    const double gap = distance(a.center, b.center) - a.radius - b.radius;
    return gap >= 2.0 * sigma * std::max(a.radius, b.radius);
}

inline Attempt strong_attempt(const PointSet& P, const ExtractionConfig& cfg, std::size_t alpha) {
    Attempt out;
    const auto qc = quorum_clustering(P, alpha);
    const auto part = epochs(qc.radii);

    // Densest epoch by number of full (alpha-point) steps; ties go to the earliest.
    std::size_t best_epoch = 0;
    std::size_t best_count = 0;
    for (std::size_t e = 0; e < part.size(); ++e) {
        std::size_t count = 0;
        for (std::size_t s = part.ranges[e].begin; s < part.ranges[e].end; ++s) {
            count += qc.steps[s].members.size() == alpha ? 1 : 0;
        }
        if (count > best_count) {
            best_count = count;
            best_epoch = e;
        }
    }
    if (best_count < cfg.k) {
        return out;
    }
    const auto& range = part.ranges[best_epoch];
    double max_radius = 0.0;
    for (std::size_t s = range.begin; s < range.end; ++s) {
        if (qc.steps[s].members.size() == alpha) {
            max_radius = std::max(max_radius, qc.steps[s].ball.radius);
        }
    }
    // Every member set of the epoch has diameter <= 2 max_radius, so a ball gap of
    // 2 sigma max_radius strongly separates any selection of them.
    const double required_gap = 2.0 * cfg.sigma * max_radius;

    ExtractionResult r;
    r.alpha = alpha;
    r.clustering.sigma = cfg.sigma;
    r.clustering.kind = SeparationKind::Strong;
    for (std::size_t s = range.begin; s < range.end && r.balls.size() < cfg.k; ++s) {
        const auto& step = qc.steps[s];
        if (step.members.size() != alpha) {
            continue;
        }
        const bool clear = std::all_of(r.balls.begin(), r.balls.end(), [&](const Ball& b) {
            return distance(b.center, step.ball.center) - b.radius - step.ball.radius >= required_gap;
        });
        if (clear) {
            r.extraction_order.push_back(r.balls.size());
            r.balls.push_back(step.ball);
            r.clustering.clusters.push_back(step.members);
        }
    }
    if (r.balls.size() < cfg.k) {
        return out;
    }
    out.result = std::move(r);
    return out;
}

inline Attempt well_colored_attempt(const ColoredInstance& I, const ExtractionConfig& cfg, std::size_t alpha) {
    Attempt out;
    const PointSet& P = I.points();
    const std::size_t k = I.num_colors();

    struct Candidate {
        double radius;
        std::size_t color;
        std::size_t step;
        Ball ball;
    };
    std::vector<Candidate> pool;
    for (std::size_t c = 0; c < k; ++c) {
        if (I.members(c).size() < alpha) {
            out.failed_color = c;
            return out;
        }
        const auto qc = quorum_clustering(P, I.members(c), alpha);
        for (std::size_t s = 0; s < qc.size(); ++s) {
            if (qc.steps[s].members.size() == alpha) {
                pool.push_back(Candidate{qc.steps[s].ball.radius, c, s, qc.steps[s].ball});
            }
        }
    }
    std::sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
        return std::tie(a.radius, a.color, a.step) < std::tie(b.radius, b.color, b.step);
    });

    std::vector<std::optional<std::vector<std::size_t>>> clusters(k);
    std::vector<std::optional<Ball>> balls(k);
    ExtractionResult r;
    r.alpha = alpha;
    for (std::size_t it = 0; it < k; ++it) {
        if (pool.empty()) {
            std::size_t missing = 0;
            while (clusters[missing]) {
                ++missing;
            }
            out.failed_iteration = it;
            out.failed_color = missing;
            return out;
        }
        Candidate pick = pool.front();
        std::vector<std::size_t> covered;
        for (auto i : I.members(pick.color)) {
            if (pick.ball.contains(P[i])) {
                covered.push_back(i);
            }
        }
        clusters[pick.color] = std::move(covered);
        balls[pick.color] = pick.ball;
        r.extraction_order.push_back(pick.color);
        std::erase_if(pool, [&](const Candidate& c) {
            return c.color == pick.color || !balls_well_separated(c.ball, pick.ball, cfg.sigma);
        });
    }
    r.clustering.sigma = cfg.sigma;
    r.clustering.kind = SeparationKind::Well;
    for (std::size_t c = 0; c < k; ++c) {
        r.clustering.clusters.push_back(std::move(*clusters[c]));
        r.balls.push_back(std::move(*balls[c]));
    }
    out.result = std::move(r);
    return out;
}

inline std::size_t min_color_size(const ColoredInstance& I) {
    std::size_t m = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = 0; c < I.num_colors(); ++c) {
        m = std::min(m, I.members(c).size());
    }
    return m;
}

}  // namespace detail

/**
 * k clusters of exactly alpha points, pairwise semi sigma-separated.
 *
 * Each round takes the alpha-ball of the survivors, keeps its alpha points nearest the center,
 * then deletes every survivor inside the ball scaled by 2 sigma + 2 around its center. Later
 * clusters therefore sit at distance >= 2 sigma r_i >= sigma diam(C_i) from C_i.
 *
 * Throws InsufficientPoints if an explicit alpha runs out of survivors.
 */
inline ExtractionResult semi_separated_k(const PointSet& P, const ExtractionConfig& cfg) {
    detail::check_config(cfg);
    if (P.size() < cfg.k) {
        throw InsufficientPoints(0, 1);
    }
    auto run = [&](std::size_t alpha) { return detail::semi_attempt(P, cfg, alpha); };

    ExtractionResult result;
    if (cfg.alpha || cfg.c_override) {
        const std::size_t alpha = cfg.alpha ? *cfg.alpha
                                            : detail::alpha_from_constant(*cfg.c_override, P.size(), cfg.k, P.dim(),
                                                                          cfg.sigma, 1.0, true);
        auto a = run(alpha);
        if (!a.result) {
            throw InsufficientPoints(a.failed_iteration, alpha);
        }
        result = std::move(*a.result);
    } else {
        auto best = detail::search_max_alpha(P.size() / cfg.k, run);
        if (!best) {
            throw InsufficientPoints(run(1).failed_iteration, 1);
        }
        result = std::move(*best);
    }
    detail::certify(P, result);
    return result;
}

/// Colored semi separation: cluster i is drawn from color i.
///
/// Every round computes the alpha-ball of each still-active color, takes the smallest (ties by
/// color), retires that color and deletes active-color points inside the (2 sigma + 2) scaling.
inline ExtractionResult semi_separated_k_colored(const ColoredInstance& I, const ExtractionConfig& cfg) {
    detail::check_config(cfg);
    if (cfg.k != I.num_colors()) {
        throw InvalidArgument("k must equal the number of colors (" + std::to_string(I.num_colors()) + ")");
    }
    auto run = [&](std::size_t alpha) { return detail::semi_colored_attempt(I, cfg, alpha); };

    ExtractionResult result;
    if (cfg.alpha || cfg.c_override) {
        const std::size_t alpha =
            cfg.alpha ? *cfg.alpha
                      : detail::alpha_from_constant(*cfg.c_override, detail::min_color_size(I), cfg.k, I.dim(),
                                                    cfg.sigma, 1.0, true);
        auto a = run(alpha);
        if (!a.result) {
            throw InsufficientPoints(a.failed_iteration, alpha);
        }
        result = std::move(*a.result);
    } else {
        auto best = detail::search_max_alpha(detail::min_color_size(I), run);
        if (!best) {
            throw InsufficientPoints(run(1).failed_iteration, 1);
        }
        result = std::move(*best);
    }
    detail::certify(I.points(), result);
    return result;
}

/**
 * k clusters, pairwise strongly sigma-separated, each one member set of a quorum clustering.
 *
 * Runs quorum clustering with quorum alpha, picks the epoch with the most full balls (earliest
 * on ties) and walks its balls in step order, keeping a ball when its gap to every kept ball is
 * at least 2 sigma times the largest radius of the epoch.
 *
 * Requires finite spread. Throws InstanceTooSeparationHostile when k clusters cannot be formed.
 */
inline ExtractionResult strong_separated_k(const PointSet& P, const ExtractionConfig& cfg) {
    detail::check_config(cfg);
    if (P.size() < cfg.k) {
        throw InstanceTooSeparationHostile("fewer points than requested clusters");
    }
    const double phi = P.size() >= 2 ? spread(P) : 1.0;
    auto run = [&](std::size_t alpha) { return detail::strong_attempt(P, cfg, alpha); };

    ExtractionResult result;
    if (cfg.alpha || cfg.c_override) {
        const std::size_t alpha = cfg.alpha ? *cfg.alpha
                                            : detail::alpha_from_constant(*cfg.c_override, P.size(), cfg.k, P.dim(),
                                                                          cfg.sigma, std::log2(phi), false);
        if (alpha > P.size()) {
            throw InstanceTooSeparationHostile("alpha exceeds the number of points");
        }
        auto a = run(alpha);
        if (!a.result) {
            throw InstanceTooSeparationHostile("no epoch yields " + std::to_string(cfg.k) +
                                               " strongly separated balls at alpha " + std::to_string(alpha));
        }
        result = std::move(*a.result);
    } else {
        auto best = detail::search_max_alpha(P.size() / cfg.k, run);
        if (!best) {
            throw InstanceTooSeparationHostile("fewer than k mutually separated balls at alpha 1");
        }
        result = std::move(*best);
    }
    detail::certify(P, result);
    return result;
}

/**
 * Colored well separation from per-color quorum clusterings.
 *
 * All full quorum balls of all colors form a pool. Each round takes the smallest ball (ties by
 * color, then step), outputs the points of its color it covers, and drops that color's balls plus
 * every ball not well separated from it at ball level:
 * |c - c'| - r - r' >= 2 sigma max(r, r').
 *
 * Throws ColorExhausted when some color runs out of candidate balls.
 */
inline ExtractionResult well_separated_k_colored(const ColoredInstance& I, const ExtractionConfig& cfg) {
    detail::check_config(cfg);
    if (cfg.k != I.num_colors()) {
        throw InvalidArgument("k must equal the number of colors (" + std::to_string(I.num_colors()) + ")");
    }
    const double phi = I.points().size() >= 2 ? spread(I.points()) : 1.0;
    auto run = [&](std::size_t alpha) { return detail::well_colored_attempt(I, cfg, alpha); };

    ExtractionResult result;
    if (cfg.alpha || cfg.c_override) {
        const std::size_t alpha =
            cfg.alpha ? *cfg.alpha
                      : detail::alpha_from_constant(*cfg.c_override, detail::min_color_size(I), cfg.k, I.dim(),
                                                    cfg.sigma, std::log2(phi), false);
        auto a = run(alpha);
        if (!a.result) {
            throw ColorExhausted(a.failed_color);
        }
        result = std::move(*a.result);
    } else {
        auto best = detail::search_max_alpha(detail::min_color_size(I), run);
        if (!best) {
            throw ColorExhausted(run(1).failed_color);
        }
        result = std::move(*best);
    }
    detail::certify(I.points(), result);
    return result;
}

}  // namespace sepclust
