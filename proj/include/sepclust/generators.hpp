#pragma once

#include "sepclust/colored.hpp"
#include "sepclust/geometry.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <variant>
#include <vector>

namespace sepclust {

/// All points of {1..N}^d in lexicographic order (last coordinate fastest).
inline PointSet gen_grid(std::size_t N, std::size_t d) {
    if (N < 1 || d < 1) {
        throw InvalidArgument("grid side and dimension must be >= 1");
    }
    constexpr std::size_t kMaxPoints = std::size_t{1} << 26;
    std::size_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (n > kMaxPoints / N) {
            throw InvalidArgument("grid of side " + std::to_string(N) + " in dimension " + std::to_string(d) +
                                  " exceeds the point budget");
        }
        n *= N;
    }
    PointSet out(d);
    out.reserve(n);
    std::vector<double> p(d, 1.0);
    std::vector<std::size_t> digit(d, 0);
    for (std::size_t count = 0; count < n; ++count) {
        for (std::size_t j = 0; j < d; ++j) {
            p[j] = static_cast<double>(digit[j] + 1);
        }
        out.push_back(p);
        for (std::size_t j = d; j-- > 0;) {
            if (++digit[j] < N) {
                break;
            }
            digit[j] = 0;
        }
    }
    return out;
}

/// p_i = 2^{i+1} - 1 for i = 1..n on the line. Every strongly 1-separated pair in it is useless.
inline PointSet gen_exponential_line(std::size_t n) {
    if (n < 1 || n > 50) {
        throw InvalidArgument("exponential line needs 1 <= n <= 50 to stay exactly representable");
    }
    PointSet out(1);
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const double p = std::ldexp(1.0, static_cast<int>(i + 1)) - 1.0;
        out.push_back(std::span<const double>(&p, 1));
    }
    return out;
}

/// P_1 = {1..n}, P_2 = n + {1..n}, P_3 = {1 + (1+i) n : i = 1..n}; colors 0, 1, 2.
inline ColoredInstance gen_three_color_line(std::size_t n) {
    if (n < 2) {
        throw InvalidArgument("three-color line needs n >= 2");
    }
    const double nn = static_cast<double>(n);
    std::vector<double> xs;
    std::vector<std::size_t> colors;
    for (std::size_t i = 1; i <= n; ++i) {
        xs.push_back(static_cast<double>(i));
        colors.push_back(0);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        xs.push_back(nn + static_cast<double>(i));
        colors.push_back(1);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        xs.push_back(1.0 + (1.0 + static_cast<double>(i)) * nn);
        colors.push_back(2);
    }
    return ColoredInstance(PointSet(1, std::move(xs)), std::move(colors));
}

/// Grid parameters of the outer ring [-3,3]^d \ (-2,2)^d used by gen_exponential_ring_grid.
struct RingGridLayout {
    std::size_t m = 0;         ///< grid spacing is 3/m; integer coordinates z lie in [-m, m]
    double spacing = 0.0;      ///< 3/m
    std::size_t ring_count = 0;  ///< grid points inside the ring
    std::size_t cube_count = 0;  ///< grid points inside [-3,3]^d
};

namespace detail {

inline std::size_t checked_pow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::size_t>::max() / std::max<std::size_t>(base, 1)) {
            throw InvalidArgument("ring grid count overflows");
        }
        r *= base;
    }
    return r;
}

/// |z| <= m along one axis, and |z| < 2m/3 (strict interior of the hole).
inline RingGridLayout ring_layout_for(std::size_t m, std::size_t d) {
    RingGridLayout l;
    l.m = m;
    l.spacing = 3.0 / static_cast<double>(m);
    const std::size_t outer = 2 * m + 1;
    // integers z with 3|z| < 2m
    const std::size_t inner_half = (2 * m - 1) / 3;  // largest z with 3z < 2m, valid for m >= 1
    const std::size_t inner = 2 * inner_half + 1;
    l.cube_count = checked_pow(outer, d);
    l.ring_count = l.cube_count - checked_pow(inner, d);
    return l;
}

}  // namespace detail

/**
 * Largest grid spacing whose grid holds at least n points in the ring [-3,3]^d \ (-2,2)^d.
 *
 * Within each interval (3/(m+1), 3/m] the ring count is maximal at 3/m, so the largest valid
 * spacing is 3/m for the smallest integer m whose count reaches n.
 */
inline RingGridLayout ring_grid_layout(std::size_t n, std::size_t d) {
    if (n < 1 || d < 1) {
        throw InvalidArgument("ring grid needs n >= 1 and d >= 1");
    }
    for (std::size_t m = 1; m <= (std::size_t{1} << 20); ++m) {
        auto l = detail::ring_layout_for(m, d);
        if (l.ring_count >= n) {
            return l;
        }
    }
    throw InvalidArgument("no ring grid spacing reaches n points");
}

/**
 * Exponential ring grid: h = ceil(log2 spread) copies of an n-point ring grid, level i scaled
 * by 1/3^{i-1}. Level 1 takes the n lexicographically smallest grid points of the ring.
 * Output is level-major; level i+1 is level i divided by 3 coordinatewise.
 */
inline PointSet gen_exponential_ring_grid(std::size_t n, double spread_param, std::size_t d) {
    if (!(spread_param >= static_cast<double>(n)) || !std::isfinite(spread_param)) {
        throw InvalidArgument("spread parameter must be finite and >= n");
    }
    const double hl = std::ceil(std::log2(spread_param));
    if (hl < 1.0) {
        throw InvalidArgument("spread parameter must exceed 1 so that at least one level exists");
    }
    const auto h = static_cast<std::size_t>(hl);
    const auto layout = ring_grid_layout(n, d);
    if (layout.cube_count > 6 * n) {
        throw InvalidArgument("n too small for the ring grid: " + std::to_string(layout.cube_count) +
                              " grid points in the cube exceed 6n");
    }

    const auto m = static_cast<std::int64_t>(layout.m);
    PointSet level(d);
    level.reserve(n);
    std::vector<std::int64_t> z(d, -m);
    std::vector<double> p(d);
    while (level.size() < n) {
        std::int64_t maxabs = 0;
        for (auto v : z) {
            maxabs = std::max(maxabs, v < 0 ? -v : v);
        }
        if (3 * maxabs >= 2 * m) {
            for (std::size_t j = 0; j < d; ++j) {
                p[j] = static_cast<double>(3 * z[j]) / static_cast<double>(m);
            }
            level.push_back(p);
        }
        for (std::size_t j = d; j-- > 0;) {
            if (++z[j] <= m) {
                break;
            }
            z[j] = -m;
        }
    }

    PointSet out(d);
    out.reserve(n * h);
    for (std::size_t lv = 0; lv < h; ++lv) {
        for (std::size_t i = 0; i < level.size(); ++i) {
            out.push_back(level[i]);
        }
        std::vector<double> next = level.flat();
        for (auto& c : next) {
            c /= 3.0;
        }
        level = PointSet(d, std::move(next));
    }
    return out;
}

/// floor(k/2) copies of P along the first axis; the gap between consecutive copies equals diam(P).
inline PointSet gen_k_copies(const PointSet& P, std::size_t k) {
    if (k < 2) {
        throw InvalidArgument("k copies needs k >= 2");
    }
    if (P.empty()) {
        throw EmptySet("gen_k_copies");
    }
    const double delta = diameter(P);
    double lo = P[0][0];
    double hi = P[0][0];
    for (std::size_t i = 1; i < P.size(); ++i) {
        lo = std::min(lo, P[i][0]);
        hi = std::max(hi, P[i][0]);
    }
    const double stride = (hi - lo) + delta;
    const std::size_t copies = k / 2;
    PointSet out(P.dim());
    out.reserve(P.size() * copies);
    std::vector<double> p(P.dim());
    for (std::size_t c = 0; c < copies; ++c) {
        const double shift = static_cast<double>(c) * stride;
        for (std::size_t i = 0; i < P.size(); ++i) {
            std::copy(P[i].begin(), P[i].end(), p.begin());
            p[0] += shift;
            out.push_back(p);
        }
    }
    return out;
}

/// 8 ceil(ln n / eps^2).
inline std::size_t near_uniform_dimension(std::size_t n, double eps) {
    return 8 * static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(n)) / (eps * eps)));
}

/**
 * Nearly equidistant points in O(log n) dimensions.
 *
 * The scaled basis e_i / sqrt(2) of R^n (all pairwise distances 1) is pushed through a seeded
 * Gaussian projection into near_uniform_dimension(n, eps) dimensions, scaled by 1/sqrt(d). A draw
 * is accepted when every pairwise distance lies in [1 - eps, 1 + eps]; up to 100 draws are tried.
 */
inline PointSet gen_near_uniform_highdim(std::size_t n, double eps, std::uint64_t seed) {
    if (n < 2) {
        throw InvalidArgument("near-uniform set needs n >= 2");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InvalidArgument("eps must lie in (0, 1)");
    }
    const std::size_t d = near_uniform_dimension(n, eps);
    const double scale = 1.0 / (std::sqrt(static_cast<double>(d)) * std::sqrt(2.0));
    for (std::uint32_t attempt = 0; attempt < 100; ++attempt) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), attempt};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> normal(0.0, 1.0);
        // column i of the projection is the image of e_i
        std::vector<double> flat(n * d);
        for (std::size_t row = 0; row < d; ++row) {
            for (std::size_t col = 0; col < n; ++col) {
                flat[col * d + row] = normal(rng) * scale;
            }
        }
        PointSet out(d, std::move(flat));
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double dist = distance(out[i], out[j]);
                if (dist < 1.0 - eps || dist > 1.0 + eps) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            return out;
        }
    }
    throw EmbeddingFailed("no projection within distortion " + std::to_string(eps) + " after 100 draws");
}

/// Seeded uniform points in [0,1)^d.
inline PointSet gen_random_uniform(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n < 1 || d < 1) {
        throw InvalidArgument("random uniform needs n >= 1 and d >= 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> flat(n * d);
    for (auto& c : flat) {
        c = unit(rng);
    }
    return PointSet(d, std::move(flat));
}

// Declarative generator requests, as parsed from the command line.

struct GridSpec {
    std::size_t side = 2;
    std::size_t dim = 1;
};
struct ExpLineSpec {
    std::size_t n = 1;
};
struct ThreeColorSpec {
    std::size_t n = 2;
};
struct ExpRingGridSpec {
    std::size_t n = 1;
    double spread = 2.0;
    std::size_t dim = 1;
};
struct KCopiesSpec {
    PointSet base{1};
    std::size_t k = 2;
};
struct NearUniformSpec {
    std::size_t n = 2;
    double eps = 0.5;
    std::uint64_t seed = 0;
};
struct RandomUniformSpec {
    std::size_t n = 1;
    std::size_t dim = 1;
    std::uint64_t seed = 0;
};

using GeneratorSpec =
    std::variant<GridSpec, ExpLineSpec, ThreeColorSpec, ExpRingGridSpec, KCopiesSpec, NearUniformSpec, RandomUniformSpec>;

using Instance = std::variant<PointSet, ColoredInstance>;

inline Instance generate(const GeneratorSpec& spec) {
    struct Visitor {
        Instance operator()(const GridSpec& s) const { return gen_grid(s.side, s.dim); }
        Instance operator()(const ExpLineSpec& s) const { return gen_exponential_line(s.n); }
        Instance operator()(const ThreeColorSpec& s) const { return gen_three_color_line(s.n); }
        Instance operator()(const ExpRingGridSpec& s) const { return gen_exponential_ring_grid(s.n, s.spread, s.dim); }
        Instance operator()(const KCopiesSpec& s) const { return gen_k_copies(s.base, s.k); }
        Instance operator()(const NearUniformSpec& s) const { return gen_near_uniform_highdim(s.n, s.eps, s.seed); }
        Instance operator()(const RandomUniformSpec& s) const { return gen_random_uniform(s.n, s.dim, s.seed); }
    };
    return std::visit(Visitor{}, spec);
}

}  // namespace sepclust
