#include <gtest/gtest.h>

#include "sepclust/algorithms.hpp"
#include "sepclust/generators.hpp"
#include "sepclust/io.hpp"

#include <sstream>

using namespace sepclust;

namespace {

std::vector<double> flat_of(const PointSet& P) { return {P.flat().begin(), P.flat().end()}; }

}  // namespace

TEST(PointsFile, RoundTripIsBitExact) {
    const PointSet sets[] = {gen_random_uniform(200, 3, 17), gen_near_uniform_highdim(8, 0.5, 4),
                             gen_exponential_ring_grid(30, 1000, 2), gen_exponential_line(50)};
    for (const auto& P : sets) {
        std::ostringstream os;
        io::write_points(os, P);
        auto back = io::read_points_string(os.str());
        const auto& Q = std::get<PointSet>(back);
        EXPECT_EQ(Q.dim(), P.dim());
        EXPECT_EQ(flat_of(Q), flat_of(P));
    }
}

TEST(PointsFile, ColoredRoundTrip) {
    auto I = gen_three_color_line(7);
    std::ostringstream os;
    io::write_points(os, I);
    EXPECT_EQ(os.str().substr(0, 20), "# dim=1 colored=1\n0 ");
    auto back = std::get<ColoredInstance>(io::read_points_string(os.str()));
    EXPECT_EQ(back.colors(), I.colors());
    EXPECT_EQ(flat_of(back.points()), flat_of(I.points()));
}

TEST(PointsFile, HeaderlessAndComments) {
    auto inst = io::read_points_string("1 2\n# a comment\n\n3 4\n");
    const auto& P = std::get<PointSet>(inst);
    EXPECT_EQ(P.dim(), 2u);
    EXPECT_EQ(P.size(), 2u);
    EXPECT_EQ(P.point(1), (Point{3, 4}));
}

TEST(PointsFile, ParseErrors) {
    EXPECT_THROW(io::read_points_string(""), ParseError);
    EXPECT_THROW(io::read_points_string("1 2\n3\n"), ParseError);
    EXPECT_THROW(io::read_points_string("1 x\n"), ParseError);
    EXPECT_THROW(io::read_points_string("# dim=2 colored=0\n1 2 3\n"), ParseError);
    EXPECT_THROW(io::read_points_string("# dim=1 colored=1\n0 1\n2 5\n"), ParseError);  // color 1 unused
    EXPECT_THROW(io::read_points_string("# dim=1 colored=1\n-1 1\n"), ParseError);
    EXPECT_THROW(io::read_points_string("nan\n"), ParseError);
    try {
        io::read_points_string("1\n2\n3 4\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(ClusteringFile, RoundTrip) {
    auto P = gen_random_uniform(100, 2, 8);
    ExtractionConfig cfg;
    cfg.k = 3;
    cfg.sigma = 1.5;
    auto r = semi_separated_k(P, cfg);
    io::ClusteringRecord rec;
    rec.algorithm = "semi";
    rec.kind = r.clustering.kind;
    rec.sigma = r.clustering.sigma;
    rec.k = r.clustering.k();
    rec.alpha = r.alpha;
    rec.clusters = r.clustering.clusters;
    rec.balls = r.balls;
    rec.quality = quality(r.clustering);
    rec.verified = true;
    rec.seed = 12;

    std::ostringstream os;
    io::write_clustering(os, rec);
    std::istringstream is(os.str());
    auto back = io::read_clustering(is);
    EXPECT_EQ(back.algorithm, "semi");
    EXPECT_EQ(back.kind, rec.kind);
    EXPECT_EQ(back.sigma, rec.sigma);
    EXPECT_EQ(back.clusters, rec.clusters);
    EXPECT_EQ(back.quality, rec.quality);
    EXPECT_EQ(back.seed, rec.seed);
    ASSERT_EQ(back.balls.size(), rec.balls.size());
    for (std::size_t i = 0; i < rec.balls.size(); ++i) {
        EXPECT_EQ(back.balls[i].center, rec.balls[i].center);
        EXPECT_EQ(back.balls[i].radius, rec.balls[i].radius);
    }
    std::ostringstream again;
    io::write_clustering(again, back);
    EXPECT_EQ(again.str(), os.str());
}

TEST(ClusteringFile, StableKeyOrder) {
    io::ClusteringRecord rec;
    rec.algorithm = "strong";
    rec.kind = SeparationKind::Strong;
    rec.clusters = {{0}, {1}};
    const std::string text = io::to_json(rec).dump();
    EXPECT_EQ(text.find("\"format\""), 1u);
    EXPECT_LT(text.find("\"kind\""), text.find("\"clusters\""));
    EXPECT_NE(text.find("\"seed\":null"), std::string::npos);
}

TEST(ClusteringFile, Malformed) {
    std::istringstream bad1("{ not json");
    EXPECT_THROW(io::read_clustering(bad1), ParseError);
    std::istringstream bad2(R"({"kind":"loose","sigma":1,"clusters":[[0]]})");
    EXPECT_THROW(io::read_clustering(bad2), ParseError);
    std::istringstream bad3(R"({"kind":"semi","clusters":[[0]]})");
    EXPECT_THROW(io::read_clustering(bad3), ParseError);
}
