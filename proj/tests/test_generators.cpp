#include <gtest/gtest.h>

#include "sepclust/generators.hpp"
#include "sepclust/oracle.hpp"

#include <cmath>

using namespace sepclust;

namespace {

std::vector<double> xs_of(const PointSet& P) {
    std::vector<double> v;
    for (std::size_t i = 0; i < P.size(); ++i) v.push_back(P[i][0]);
    return v;
}

double max_norm(Coords p) {
    double m = 0;
    for (double c : p) m = std::max(m, std::abs(c));
    return m;
}

}  // namespace

TEST(GenGrid, Examples) {
    EXPECT_EQ(xs_of(gen_grid(2, 1)), (std::vector<double>{1, 2}));
    auto g3 = gen_grid(3, 2);
    EXPECT_EQ(g3.size(), 9u);
    EXPECT_NEAR(spread(g3), 2 * std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(diameter(gen_grid(4, 2)), 3 * std::sqrt(2.0), 1e-12);
}

TEST(GenGrid, LexicographicOrder) {
    auto g = gen_grid(3, 2);
    EXPECT_EQ(g.point(0), (Point{1, 1}));
    EXPECT_EQ(g.point(1), (Point{1, 2}));
    EXPECT_EQ(g.point(3), (Point{2, 1}));
    EXPECT_EQ(g.point(8), (Point{3, 3}));
}

TEST(GenGrid, CountClosestPairDiameter) {
    for (std::size_t N : {2, 3, 5}) {
        for (std::size_t d : {1, 2, 3}) {
            auto g = gen_grid(N, d);
            EXPECT_EQ(g.size(), static_cast<std::size_t>(std::pow(N, d)));
            EXPECT_DOUBLE_EQ(closest_pair(g), 1.0);
            EXPECT_NEAR(diameter(g), (N - 1.0) * std::sqrt(static_cast<double>(d)), 1e-12);
        }
    }
}

TEST(GenGrid, OverflowThrows) {
    EXPECT_THROW(gen_grid(1 << 16, 4), InvalidArgument);
    EXPECT_THROW(gen_grid(0, 2), InvalidArgument);
}

TEST(GenExponentialLine, Examples) {
    EXPECT_EQ(xs_of(gen_exponential_line(3)), (std::vector<double>{3, 7, 15}));
    EXPECT_EQ(xs_of(gen_exponential_line(1)), (std::vector<double>{3}));
    EXPECT_DOUBLE_EQ(spread(gen_exponential_line(5)), 15.0);
    EXPECT_THROW(gen_exponential_line(51), InvalidArgument);
}

TEST(GenExponentialLine, GapsDouble) {
    auto xs = xs_of(gen_exponential_line(50));
    for (std::size_t i = 2; i < xs.size(); ++i) EXPECT_EQ(xs[i] - xs[i - 1], 2 * (xs[i - 1] - xs[i - 2]));
    EXPECT_EQ(xs.back(), std::pow(2.0, 51) - 1);
}

TEST(GenThreeColorLine, Examples) {
    auto I = gen_three_color_line(3);
    EXPECT_EQ(xs_of(I.color_set(0)), (std::vector<double>{1, 2, 3}));
    EXPECT_EQ(xs_of(I.color_set(1)), (std::vector<double>{4, 5, 6}));
    EXPECT_EQ(xs_of(I.color_set(2)), (std::vector<double>{7, 10, 13}));
    EXPECT_EQ(xs_of(gen_three_color_line(2).color_set(2)), (std::vector<double>{5, 7}));
    EXPECT_THROW(gen_three_color_line(1), InvalidArgument);
}

TEST(GenThreeColorLine, ProofObligationsAndSpread) {
    for (std::size_t n = 2; n <= 50; ++n) {
        auto I = gen_three_color_line(n);
        const auto& P = I.points();
        EXPECT_EQ(min_consecutive_gap(P, I.members(2)), static_cast<double>(n));
        std::vector<std::size_t> low(I.members(0));
        low.insert(low.end(), I.members(1).begin(), I.members(1).end());
        EXPECT_EQ(diameter(P, low), 2.0 * n - 1);
        EXPECT_LE(spread(P), 2.0 * n * n);
    }
}

TEST(RingGridLayout, SmallestSpacingCountReachesN) {
    for (std::size_t d : {1, 2, 3}) {
        for (std::size_t n : {1, 4, 10, 50, 100, 300}) {
            auto l = ring_grid_layout(n, d);
            EXPECT_GE(l.ring_count, n);
            if (l.m > 1) {
                EXPECT_LT(detail::ring_layout_for(l.m - 1, d).ring_count, n);
            }
            // brute-force count of the ring
            std::size_t cnt = 0, cube = 0;
            const long m = static_cast<long>(l.m);
            std::vector<long> z(d, -m);
            while (true) {
                long mx = 0;
                for (long v : z) mx = std::max(mx, std::labs(v));
                ++cube;
                if (3 * mx >= 2 * m) ++cnt;
                std::size_t j = d;
                while (j > 0 && ++z[j - 1] > m) z[--j] = -m;
                if (j == 0) break;
            }
            EXPECT_EQ(cnt, l.ring_count);
            EXPECT_EQ(cube, l.cube_count);
        }
    }
}

TEST(GenExponentialRingGrid, LevelsScaleByThird) {
    auto P = gen_exponential_ring_grid(4, 16, 1);
    ASSERT_EQ(P.size(), 16u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(P[4 + i][0], P[i][0] / 3.0);
}

TEST(GenExponentialRingGrid, RingMembershipAndLevelCount) {
    struct Case {
        std::size_t n;
        double phi;
        std::size_t d;
    };
    for (auto c : {Case{4, 16, 1}, Case{50, 64, 2}, Case{100, 100, 2}, Case{30, 1000, 2}, Case{200, 256, 3}}) {
        auto P = gen_exponential_ring_grid(c.n, c.phi, c.d);
        const std::size_t h = static_cast<std::size_t>(std::ceil(std::log2(c.phi)));
        ASSERT_EQ(P.size(), c.n * h);
        const auto l = ring_grid_layout(c.n, c.d);
        for (std::size_t lv = 0; lv < h; ++lv) {
            const double s = std::pow(3.0, static_cast<double>(lv));
            for (std::size_t i = 0; i < c.n; ++i) {
                const double r = max_norm(P[lv * c.n + i]);
                EXPECT_GE(r, 2 / s * (1 - 1e-12));
                EXPECT_LE(r, 3 / s * (1 + 1e-12));
                if (lv > 0) {
                    EXPECT_DOUBLE_EQ(P[lv * c.n + i][0], P[(lv - 1) * c.n + i][0] / 3.0);
                }
            }
        }
        const double phi = spread(P);
        EXPECT_LE(phi, 2 * std::sqrt(static_cast<double>(c.d)) * l.m * std::pow(3.0, h - 1.0) * (1 + 1e-9));
        EXPECT_LE(phi, std::pow(c.phi, 3.0));
    }
}

TEST(GenExponentialRingGrid, Errors) {
    EXPECT_THROW(gen_exponential_ring_grid(10, 5, 2), InvalidArgument);   // spread below n
    EXPECT_THROW(gen_exponential_ring_grid(1, 1, 1), InvalidArgument);    // no levels
    EXPECT_THROW(gen_exponential_ring_grid(2, 16, 3), InvalidArgument);   // cube holds more than 6n
}

TEST(GenExponentialRingGrid, WellSeparatedPairsOnSubsampleAreSmall) {
    const std::size_t d = 2;
    auto P = gen_exponential_ring_grid(100, 100, d);
    std::vector<std::size_t> pick;
    const std::size_t stride = P.size() / 18;
    for (std::size_t t = 0; t < 18; ++t) pick.push_back(t * stride);
    auto sub = P.subset(pick);
    OracleBudget budget;
    budget.max_n_assignment = 18;
    auto best = best_separated_pair(sub, 12.0 * d, SeparationKind::Well, budget);
    EXPECT_LE(best.quality, 2u);
}

TEST(GenKCopies, Examples) {
    auto base = PointSet::line({0, 1});
    EXPECT_EQ(xs_of(gen_k_copies(base, 2)), (std::vector<double>{0, 1}));
    EXPECT_EQ(xs_of(gen_k_copies(base, 3)), (std::vector<double>{0, 1}));
    EXPECT_EQ(xs_of(gen_k_copies(base, 4)), (std::vector<double>{0, 1, 2, 3}));
    auto six = xs_of(gen_k_copies(base, 6));
    EXPECT_EQ(six, (std::vector<double>{0, 1, 2, 3, 4, 5}));
    EXPECT_THROW(gen_k_copies(base, 1), InvalidArgument);
}

TEST(GenKCopies, GapEqualsDiameterInPlane) {
    auto base = gen_grid(3, 2);
    auto P = gen_k_copies(base, 5);
    ASSERT_EQ(P.size(), 18u);
    const double delta = diameter(base);
    double hi0 = -1e300, lo1 = 1e300;
    for (std::size_t i = 0; i < 9; ++i) hi0 = std::max(hi0, P[i][0]);
    for (std::size_t i = 9; i < 18; ++i) lo1 = std::min(lo1, P[i][0]);
    EXPECT_NEAR(lo1 - hi0, delta, 1e-12);
}

TEST(GenNearUniform, DimensionFormula) {
    EXPECT_EQ(near_uniform_dimension(16, 0.5), 96u);
    EXPECT_EQ(gen_near_uniform_highdim(16, 0.5, 1).dim(), 96u);
}

TEST(GenNearUniform, DistanceBandAndDeterminism) {
    for (std::uint64_t seed : {1u, 2u, 99u}) {
        auto P = gen_near_uniform_highdim(12, 0.4, seed);
        for (std::size_t i = 0; i < P.size(); ++i)
            for (std::size_t j = i + 1; j < P.size(); ++j) {
                const double dd = distance(P[i], P[j]);
                EXPECT_GE(dd, 0.6);
                EXPECT_LE(dd, 1.4);
            }
        auto Q = gen_near_uniform_highdim(12, 0.4, seed);
        EXPECT_EQ(std::vector<double>(P.flat().begin(), P.flat().end()),
                  std::vector<double>(Q.flat().begin(), Q.flat().end()));
    }
    auto A = gen_near_uniform_highdim(12, 0.4, 1);
    auto B = gen_near_uniform_highdim(12, 0.4, 2);
    EXPECT_NE(std::vector<double>(A.flat().begin(), A.flat().end()),
              std::vector<double>(B.flat().begin(), B.flat().end()));
}

TEST(GenNearUniform, TwoSeparatedPairsAreUseless) {
    auto P = gen_near_uniform_highdim(10, 0.4, 5);
    EXPECT_EQ(best_separated_pair(P, 2.0, SeparationKind::Well).quality, 1u);
}

TEST(GenNearUniform, InvalidParameters) {
    EXPECT_THROW(gen_near_uniform_highdim(1, 0.5, 0), InvalidArgument);
    EXPECT_THROW(gen_near_uniform_highdim(5, 1.0, 0), InvalidArgument);
}

TEST(GenRandomUniform, SeededAndInUnitCube) {
    auto A = gen_random_uniform(100, 3, 42);
    auto B = gen_random_uniform(100, 3, 42);
    EXPECT_EQ(std::vector<double>(A.flat().begin(), A.flat().end()),
              std::vector<double>(B.flat().begin(), B.flat().end()));
    for (double c : A.flat()) {
        EXPECT_GE(c, 0.0);
        EXPECT_LT(c, 1.0);
    }
}

TEST(Generate, DispatchesOnSpec) {
    auto g = generate(GridSpec{2, 1});
    EXPECT_EQ(xs_of(std::get<PointSet>(g)), (std::vector<double>{1, 2}));
    auto t = generate(ThreeColorSpec{3});
    EXPECT_EQ(std::get<ColoredInstance>(t).num_colors(), 3u);
    auto e = generate(ExpLineSpec{3});
    EXPECT_EQ(xs_of(std::get<PointSet>(e)), (std::vector<double>{3, 7, 15}));
}
