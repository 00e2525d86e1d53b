#include <gtest/gtest.h>

#include "sepclust/algorithms.hpp"
#include "sepclust/generators.hpp"
#include "sepclust/oracle.hpp"
#include "sepclust/separation.hpp"

#include <random>

using namespace sepclust;

namespace {

Clustering make(std::vector<std::vector<std::size_t>> clusters, double sigma, SeparationKind kind) {
    return Clustering{std::move(clusters), sigma, kind};
}

}  // namespace

TEST(CheckSeparation, StrongPairOnLine) {
    auto P = PointSet::line({0, 1, 10, 11});
    EXPECT_TRUE(check_separation(P, make({{0, 1}, {2, 3}}, 3.0, SeparationKind::Strong)));
    EXPECT_FALSE(check_separation(P, make({{0, 1}, {2, 3}}, 10.0, SeparationKind::Strong)));
}

TEST(CheckSeparation, SemiAllowsNestingWellDoesNot) {
    auto P = PointSet::line({0, 100, 50, 51});
    EXPECT_TRUE(check_separation(P, make({{0, 1}, {2, 3}}, 5.0, SeparationKind::Semi)));
    EXPECT_FALSE(check_separation(P, make({{0, 1}, {2, 3}}, 5.0, SeparationKind::Well)));
}

TEST(CheckSeparation, BoundaryCaseVerifies) {
    // distance exactly sigma times the diameter
    auto P = PointSet::line({0, 0.1, 0.4, 0.5});
    EXPECT_TRUE(check_separation(P, make({{0, 1}, {2, 3}}, 3.0, SeparationKind::Strong)));
}

TEST(CheckSeparation, MarginsReportPairs) {
    auto P = PointSet::line({0, 1, 10, 11, 30});
    auto m = separation_margins(P, make({{0, 1}, {2, 3}, {4}}, 2.0, SeparationKind::Well));
    ASSERT_EQ(m.size(), 3u);
    EXPECT_EQ(m[0].i, 0u);
    EXPECT_EQ(m[0].j, 1u);
    EXPECT_DOUBLE_EQ(m[0].distance, 9.0);
    EXPECT_DOUBLE_EQ(m[0].diameter_term, 1.0);
    EXPECT_DOUBLE_EQ(m[0].required, 2.0);
    EXPECT_TRUE(m[0].ok);
    EXPECT_DOUBLE_EQ(m[2].distance, 19.0);
}

TEST(CheckSeparation, InvalidClusteringsThrow) {
    auto P = PointSet::line({0, 1, 2});
    EXPECT_THROW(check_separation(P, make({}, 1.0, SeparationKind::Semi)), InvalidClustering);
    EXPECT_THROW(check_separation(P, make({{0}, {}}, 1.0, SeparationKind::Semi)), InvalidClustering);
    EXPECT_THROW(check_separation(P, make({{0}, {0}}, 1.0, SeparationKind::Semi)), InvalidClustering);
    EXPECT_THROW(check_separation(P, make({{0}, {3}}, 1.0, SeparationKind::Semi)), InvalidClustering);
    EXPECT_THROW(check_separation(P, make({{0}, {1}}, 0.0, SeparationKind::Semi)), InvalidClustering);
}

TEST(CheckSeparation, SingletonsAreSemiSeparatedAtAnySigma) {
    auto P = PointSet::line({0, 1, 2, 3});
    EXPECT_TRUE(check_separation(P, make({{0, 3}, {1}}, 1e6, SeparationKind::Semi)));
}

TEST(Quality, Examples) {
    EXPECT_EQ(quality(make({{0, 1, 2}, {3, 4, 5, 6, 7}, {8, 9}}, 1.0, SeparationKind::Semi)), 2u);
    EXPECT_EQ(quality(make({{0, 1, 2, 3, 4, 5, 6}}, 1.0, SeparationKind::Semi)), 7u);
}

TEST(Quality, MatchesRecountOnAlgorithmOutput) {
    auto P = gen_random_uniform(200, 2, 21);
    ExtractionConfig cfg;
    cfg.k = 3;
    cfg.sigma = 1.0;
    auto r = semi_separated_k(P, cfg);
    std::size_t q = P.size();
    for (const auto& c : r.clustering.clusters) q = std::min(q, c.size());
    EXPECT_EQ(quality(r.clustering), q);
}

TEST(IsUseless, Examples) {
    EXPECT_TRUE(is_useless(make({{0}, {1, 2, 3, 4, 5, 6, 7, 8, 9}}, 1.0, SeparationKind::Semi)));
    EXPECT_FALSE(is_useless(make({{0, 1}, {2, 3}}, 1.0, SeparationKind::Semi)));
}

TEST(IsUseless, ExponentialLineBestStrongPair) {
    auto P = gen_exponential_line(8);
    auto best = best_separated_pair(P, 1.0, SeparationKind::Strong);
    auto C = make({best.first, best.second}, 1.0, SeparationKind::Strong);
    EXPECT_TRUE(check_separation(P, C));
    EXPECT_TRUE(is_useless(C));
}

namespace {

// Random disjoint clusterings on random point sets.
struct RandomCase {
    PointSet P;
    std::vector<std::vector<std::size_t>> clusters;
};

RandomCase random_case(std::mt19937_64& rng, std::size_t k) {
    std::uniform_real_distribution<double> u(0, 100);
    RandomCase rc{PointSet(2), {}};
    rc.clusters.resize(k);
    std::size_t idx = 0;
    for (std::size_t c = 0; c < k; ++c) {
        const double cx = u(rng), cy = u(rng);
        const double spreadc = 0.1 + u(rng) / 20.0;
        const std::size_t m = 1 + rng() % 5;
        std::uniform_real_distribution<double> v(-spreadc, spreadc);
        for (std::size_t i = 0; i < m; ++i) {
            rc.P.push_back(Point{cx + v(rng), cy + v(rng)});
            rc.clusters[c].push_back(idx++);
        }
    }
    return rc;
}

}  // namespace

TEST(SeparationProperties, MonotoneInSigma) {
    std::mt19937_64 rng(31);
    const SeparationKind kinds[] = {SeparationKind::Strong, SeparationKind::Well, SeparationKind::Semi};
    for (int rep = 0; rep < 200; ++rep) {
        auto rc = random_case(rng, 2 + rep % 4);
        for (auto kind : kinds) {
            for (double s : {0.5, 1.0, 2.0, 4.0, 8.0}) {
                if (!check_separation(rc.P, make(rc.clusters, s, kind))) continue;
                for (double t : {0.1, 0.5, 1.0, 2.0, 4.0}) {
                    if (t <= s) {
                        EXPECT_TRUE(check_separation(rc.P, make(rc.clusters, t, kind)));
                    }
                }
            }
        }
    }
}

TEST(SeparationProperties, StrongImpliesWellImpliesSemi) {
    std::mt19937_64 rng(32);
    for (int rep = 0; rep < 300; ++rep) {
        auto rc = random_case(rng, 2 + rep % 4);
        for (double s : {0.5, 1.0, 2.0, 4.0}) {
            const bool strong = check_separation(rc.P, make(rc.clusters, s, SeparationKind::Strong));
            const bool well = check_separation(rc.P, make(rc.clusters, s, SeparationKind::Well));
            const bool semi = check_separation(rc.P, make(rc.clusters, s, SeparationKind::Semi));
            if (strong) {
                EXPECT_TRUE(well);
            }
            if (well) {
                EXPECT_TRUE(semi);
            }
        }
    }
}

TEST(SeparationProperties, StrongEqualsWellForTwoClusters) {
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 300; ++rep) {
        auto rc = random_case(rng, 2);
        for (double s : {0.5, 1.0, 2.0, 4.0, 8.0}) {
            EXPECT_EQ(check_separation(rc.P, make(rc.clusters, s, SeparationKind::Strong)),
                      check_separation(rc.P, make(rc.clusters, s, SeparationKind::Well)));
        }
    }
}

TEST(SeparationKindNames, RoundTrip) {
    for (auto kind : {SeparationKind::Strong, SeparationKind::Well, SeparationKind::Semi}) {
        EXPECT_EQ(parse_separation_kind(to_string(kind)), kind);
    }
    EXPECT_FALSE(parse_separation_kind("loose").has_value());
}
