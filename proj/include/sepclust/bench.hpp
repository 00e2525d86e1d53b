#pragma once

#include "sepclust/algorithms.hpp"
#include "sepclust/generators.hpp"
#include "sepclust/io.hpp"
#include "sepclust/quorum.hpp"

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

namespace sepclust::bench {

struct BenchRow {
    std::string generator;
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t k = 0;
    double sigma = 0.0;
    std::string algo;
    std::size_t alpha = 0;
    std::size_t quality = 0;
    std::size_t epochs = 0;     ///< epochs of the quorum clustering with gamma = alpha
    std::size_t max_depth = 0;  ///< max per-epoch cover depth of that quorum clustering
    bool verified = false;
    double wall_ms = 0.0;
};

struct BenchCase {
    std::string generator;
    Instance instance;
    std::string algo;  ///< semi | semi-colored | strong | well-colored
    std::size_t k = 1;
    double sigma = 1.0;
};

inline ColoredInstance color_round_robin(const PointSet& P, std::size_t k) {
    std::vector<std::size_t> colors(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
        colors[i] = i % k;
    }
    return ColoredInstance(P, std::move(colors));
}

/// The seeded default suite.
inline std::vector<BenchCase> default_suite() {
    std::vector<BenchCase> cases;
    const PointSet random2 = gen_random_uniform(400, 2, 7);
    for (double s : {1.0, 2.0, 4.0}) cases.push_back({"random(n=400,d=2,seed=7)", random2, "semi", 3, s});
    for (double s : {1.0, 2.0}) cases.push_back({"random(n=400,d=2,seed=7)", random2, "strong", 3, s});

    const PointSet grid = gen_grid(16, 2);
    for (double s : {1.0, 2.0, 4.0}) cases.push_back({"grid(N=16,d=2)", grid, "semi", 2, s});
    cases.push_back({"grid(N=16,d=2)", grid, "strong", 2, 1.0});

    const PointSet expline = gen_exponential_line(20);
    cases.push_back({"expline(n=20)", expline, "strong", 2, 1.0});
    cases.push_back({"expline(n=20)", expline, "semi", 2, 1.0});

    const PointSet ring = gen_exponential_ring_grid(50, 64.0, 2);
    cases.push_back({"expgrid(n=50,spread=64,d=2)", ring, "strong", 2, 2.0});
    cases.push_back({"expgrid(n=50,spread=64,d=2)", ring, "semi", 2, 2.0});

    const PointSet copies = gen_k_copies(gen_grid(8, 2), 4);
    cases.push_back({"kcopies(grid(N=8,d=2),k=4)", copies, "strong", 4, 1.0});
    cases.push_back({"kcopies(grid(N=8,d=2),k=4)", copies, "semi", 4, 1.0});

    const PointSet uniform = gen_near_uniform_highdim(20, 0.5, 3);
    cases.push_back({"nearuniform(n=20,eps=0.5,seed=3)", uniform, "semi", 2, 2.0});
    cases.push_back({"nearuniform(n=20,eps=0.5,seed=3)", uniform, "strong", 2, 2.0});

    const ColoredInstance three = gen_three_color_line(20);
    cases.push_back({"threecolor(n=20)", three, "semi-colored", 3, 1.0});
    cases.push_back({"threecolor(n=20)", three, "well-colored", 3, 3.0});

    const ColoredInstance mixed = color_round_robin(gen_random_uniform(300, 2, 11), 3);
    cases.push_back({"random-colored(n=300,d=2,seed=11,k=3)", mixed, "semi-colored", 3, 1.0});
    cases.push_back({"random-colored(n=300,d=2,seed=11,k=3)", mixed, "well-colored", 3, 1.0});
    return cases;
}

inline ExtractionResult run_algorithm(const std::string& algo, const Instance& inst, const ExtractionConfig& cfg) {
    if (algo == "semi") return semi_separated_k(std::get<PointSet>(inst), cfg);
    if (algo == "strong") return strong_separated_k(std::get<PointSet>(inst), cfg);
    if (algo == "semi-colored") return semi_separated_k_colored(std::get<ColoredInstance>(inst), cfg);
    if (algo == "well-colored") return well_separated_k_colored(std::get<ColoredInstance>(inst), cfg);
    throw InvalidArgument("unknown algorithm '" + algo + "'");
}

inline BenchRow run_case(const BenchCase& c) {
    const PointSet& P = io::points_of(c.instance);
    ExtractionConfig cfg;
    cfg.k = c.k;
    cfg.sigma = c.sigma;

    const auto t0 = std::chrono::steady_clock::now();
    const auto result = run_algorithm(c.algo, c.instance, cfg);
    const auto t1 = std::chrono::steady_clock::now();

    BenchRow row;
    row.generator = c.generator;
    row.n = P.size();
    row.d = P.dim();
    row.k = c.k;
    row.sigma = c.sigma;
    row.algo = c.algo;
    row.alpha = result.alpha;
    row.quality = quality(result.clustering);
    row.verified = check_separation(P, result.clustering);
    const auto qc = quorum_clustering(P, result.alpha);
    row.epochs = epochs(qc.radii).size();
    row.max_depth = max_epoch_cover_depth(P, qc);
    row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return row;
}

inline std::vector<BenchRow> run_suite(const std::vector<BenchCase>& cases) {
    std::vector<BenchRow> rows;
    rows.reserve(cases.size());
    for (const auto& c : cases) {
        rows.push_back(run_case(c));
    }
    return rows;
}

inline void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
    os << "generator,n,d,k,sigma,algo,alpha,quality,epochs,max_depth,verified,wall_ms\n";
    for (const auto& r : rows) {
        os << '"' << r.generator << "\"," << r.n << ',' << r.d << ',' << r.k << ',' << io::format_double(r.sigma)
           << ',' << r.algo << ',' << r.alpha << ',' << r.quality << ',' << r.epochs << ',' << r.max_depth << ','
           << (r.verified ? "true" : "false") << ',' << io::format_double(r.wall_ms) << '\n';
    }
}

}  // namespace sepclust::bench
