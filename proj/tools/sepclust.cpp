// sepclust: generate instances, extract separated clusters, verify them, run exact oracles and
// the benchmark suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error, 3 infeasible
// extraction, 4 oracle budget exceeded.

#include "sepclust/bench.hpp"
#include "sepclust/sepclust.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using namespace sepclust;

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kInfeasible = 3,
    kBudget = 4,
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Writes to --out when given, stdout otherwise.
class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) {
                throw UsageError("cannot open output file '" + path + "'");
            }
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

Instance load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open points file '" + path + "'");
    }
    return io::read_points(in);
}

io::ClusteringRecord load_clustering(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open clustering file '" + path + "'");
    }
    return io::read_clustering(in);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("SEPCLUST_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("SEPCLUST_SEED is not an unsigned integer");
        }
    }
    throw UsageError("a seed is required: pass --seed or set SEPCLUST_SEED");
}

struct GenerateOpts {
    std::string out;
    std::size_t side = 0;
    std::size_t dim = 0;
    std::size_t n = 0;
    double spread = 0.0;
    std::size_t k = 0;
    std::string input;
    double eps = 0.0;
    std::optional<std::uint64_t> seed;
};

struct ClusterOpts {
    std::string algo;
    std::size_t k = 1;
    double sigma = 1.0;
    std::optional<std::size_t> alpha;
    bool auto_alpha = false;
    std::optional<double> c;
    std::string in;
    std::string out;
    std::optional<std::uint64_t> seed;
};

struct VerifyOpts {
    std::string kind;
    std::optional<double> sigma;
    std::string points;
    std::string clusters;
};

struct OracleOpts {
    std::string in;
    double sigma = 1.0;
    std::string kind = "strong";
    std::size_t alpha = 1;
    std::optional<std::size_t> max_n;
};

struct BenchOpts {
    std::string suite = "default";
    std::string out;
};

int run_generate(const std::string& kind, const GenerateOpts& o) {
    GeneratorSpec spec;
    if (kind == "grid") {
        spec = GridSpec{o.side, o.dim};
    } else if (kind == "expline") {
        spec = ExpLineSpec{o.n};
    } else if (kind == "threecolor") {
        spec = ThreeColorSpec{o.n};
    } else if (kind == "expgrid") {
        spec = ExpRingGridSpec{o.n, o.spread, o.dim};
    } else if (kind == "kcopies") {
        auto base = load_points(o.input);
        if (!std::holds_alternative<PointSet>(base)) {
            throw UsageError("kcopies needs an uncolored input file");
        }
        spec = KCopiesSpec{std::get<PointSet>(base), o.k};
    } else if (kind == "nearuniform") {
        spec = NearUniformSpec{o.n, o.eps, resolve_seed(o.seed)};
    } else if (kind == "random") {
        spec = RandomUniformSpec{o.n, o.dim, resolve_seed(o.seed)};
    } else {
        throw UsageError("unknown generator '" + kind + "'");
    }
    Instance inst = [&] {
        try {
            return generate(spec);
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
    }();
    Output out(o.out);
    io::write_instance(out.stream(), inst);
    return kOk;
}

int run_cluster(const ClusterOpts& o) {
    const bool colored_algo = o.algo == "semi-colored" || o.algo == "well-colored";
    if (o.algo != "semi" && o.algo != "strong" && !colored_algo) {
        throw UsageError("unknown algorithm '" + o.algo + "'");
    }
    if (o.alpha && o.auto_alpha) {
        throw UsageError("--alpha and --auto are mutually exclusive");
    }
    Instance inst = load_points(o.in);
    if (colored_algo != std::holds_alternative<ColoredInstance>(inst)) {
        throw UsageError(colored_algo ? "algorithm '" + o.algo + "' needs a colored points file"
                                      : "algorithm '" + o.algo + "' needs an uncolored points file");
    }
    ExtractionConfig cfg;
    cfg.k = o.k;
    cfg.sigma = o.sigma;
    cfg.alpha = o.alpha;
    if (!o.auto_alpha) {
        cfg.c_override = o.c;
    }

    ExtractionResult result = [&] {
        try {
            return bench::run_algorithm(o.algo, inst, cfg);
        } catch (const InfeasibleExtraction&) {
            throw;
        } catch (const InfiniteSpread&) {
            throw;
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
    }();

    const PointSet& P = io::points_of(inst);
    io::ClusteringRecord rec;
    rec.algorithm = o.algo;
    rec.kind = result.clustering.kind;
    rec.sigma = result.clustering.sigma;
    rec.k = result.clustering.k();
    rec.alpha = result.alpha;
    rec.clusters = result.clustering.clusters;
    rec.balls = result.balls;
    rec.quality = quality(result.clustering);
    rec.verified = check_separation(P, result.clustering);
    rec.seed = o.seed;
    if (!rec.seed) {
        if (const char* env = std::getenv("SEPCLUST_SEED")) {
            try {
                rec.seed = std::stoull(env);
            } catch (const std::exception&) {
            }
        }
    }
    Output out(o.out);
    io::write_clustering(out.stream(), rec);
    return rec.verified ? kOk : kVerifyFailed;
}

int run_verify(const VerifyOpts& o) {
    Instance inst = load_points(o.points);
    const PointSet& P = io::points_of(inst);
    auto rec = load_clustering(o.clusters);
    Clustering c = rec.clustering();
    if (!o.kind.empty()) {
        auto kind = parse_separation_kind(o.kind);
        if (!kind) {
            throw UsageError("unknown kind '" + o.kind + "'");
        }
        c.kind = *kind;
    }
    if (o.sigma) {
        c.sigma = *o.sigma;
    }
    std::vector<PairMargin> margins;
    try {
        margins = separation_margins(P, c);
    } catch (const InvalidClustering& e) {
        throw ParseError(0, e.what());
    }
    std::cout << "kind " << to_string(c.kind) << " sigma " << io::format_double(c.sigma) << " k " << c.k()
              << " quality " << quality(c) << '\n';
    bool pass = true;
    for (const auto& m : margins) {
        const double ratio = m.diameter_term > 0.0 ? m.distance / m.diameter_term
                                                   : std::numeric_limits<double>::infinity();
        std::cout << "pair " << m.i << ' ' << m.j << " distance " << io::format_double(m.distance)
                  << " diameter_term " << io::format_double(m.diameter_term) << " ratio "
                  << io::format_double(ratio) << ' ' << (m.ok ? "ok" : "VIOLATED") << '\n';
        pass = pass && m.ok;
    }
    std::cout << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? kOk : kVerifyFailed;
}

void print_indices(const char* label, const std::vector<std::size_t>& xs) {
    std::cout << label;
    for (auto i : xs) {
        std::cout << ' ' << i;
    }
    std::cout << '\n';
}

int run_oracle(const std::string& which, const OracleOpts& o) {
    Instance inst = load_points(o.in);
    OracleBudget budget;
    if (o.max_n) {
        budget.max_n_assignment = *o.max_n;
        budget.max_n_ball = *o.max_n;
    }
    if (which == "best-pair") {
        auto kind = parse_separation_kind(o.kind);
        if (!kind) {
            throw UsageError("unknown kind '" + o.kind + "'");
        }
        const auto best = best_separated_pair(io::points_of(inst), o.sigma, *kind, budget);
        std::cout << "quality " << best.quality << '\n';
        print_indices("first", best.first);
        print_indices("second", best.second);
    } else if (which == "min-ball") {
        const double r = exact_min_ball_alpha(io::points_of(inst), o.alpha, budget);
        std::cout << "radius " << io::format_double(r) << '\n';
    } else if (which == "three-color") {
        if (!std::holds_alternative<ColoredInstance>(inst)) {
            throw UsageError("three-color oracle needs a colored points file");
        }
        const bool hopeless = check_three_color_hopeless(std::get<ColoredInstance>(inst), o.sigma);
        std::cout << "hopeless " << (hopeless ? "true" : "false") << '\n';
    }
    return kOk;
}

int run_bench(const BenchOpts& o) {
    if (o.suite != "default") {
        throw UsageError("unknown suite '" + o.suite + "'");
    }
    const auto rows = bench::run_suite(bench::default_suite());
    Output out(o.out);
    bench::write_csv(out.stream(), rows);
    bool all = true;
    for (const auto& r : rows) {
        all = all && r.verified;
    }
    return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Large, well separated clusters: generators, algorithms, verifier and oracles"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sepclust::kVersion));

    // generate
    GenerateOpts gen;
    auto* generate = app.add_subcommand("generate", "Write a generated instance as a points file");
    generate->require_subcommand(1);
    generate->add_option("--out", gen.out, "Output path (stdout when omitted)");
    auto* g_grid = generate->add_subcommand("grid", "{1..N}^d");
    g_grid->add_option("--side", gen.side, "N")->required();
    g_grid->add_option("--dim", gen.dim, "d")->required();
    auto* g_exp = generate->add_subcommand("expline", "p_i = 2^(i+1) - 1, i = 1..n");
    g_exp->add_option("--n", gen.n)->required();
    auto* g_three = generate->add_subcommand("threecolor", "three interleaved colors on the line");
    g_three->add_option("--n", gen.n)->required();
    auto* g_ring = generate->add_subcommand("expgrid", "exponential ring grid");
    g_ring->add_option("--n", gen.n)->required();
    g_ring->add_option("--spread", gen.spread)->required();
    g_ring->add_option("--dim", gen.dim)->required();
    auto* g_copies = generate->add_subcommand("kcopies", "floor(k/2) spaced copies of an input");
    g_copies->add_option("--k", gen.k)->required();
    g_copies->add_option("--input", gen.input)->required();
    auto* g_near = generate->add_subcommand("nearuniform", "nearly equidistant points via random projection");
    g_near->add_option("--n", gen.n)->required();
    g_near->add_option("--eps", gen.eps)->required();
    g_near->add_option("--seed", gen.seed);
    auto* g_rand = generate->add_subcommand("random", "uniform points in the unit cube");
    g_rand->add_option("--n", gen.n)->required();
    g_rand->add_option("--dim", gen.dim)->required();
    g_rand->add_option("--seed", gen.seed);
    for (auto* sub : {g_grid, g_exp, g_three, g_ring, g_copies, g_near, g_rand}) {
        sub->add_option("--out", gen.out, "Output path (stdout when omitted)");
    }

    // cluster
    ClusterOpts cl;
    auto* cluster = app.add_subcommand("cluster", "Extract k separated clusters");
    cluster->add_option("--algo", cl.algo, "semi | semi-colored | strong | well-colored")->required();
    cluster->add_option("--k", cl.k)->required();
    cluster->add_option("--sigma", cl.sigma)->required();
    cluster->add_option("--alpha", cl.alpha, "Explicit cluster size");
    cluster->add_flag("--auto", cl.auto_alpha, "Search the largest feasible cluster size (default)");
    cluster->add_option("--c", cl.c, "Constant of the closed-form cluster size");
    cluster->add_option("--in", cl.in)->required();
    cluster->add_option("--out", cl.out);
    cluster->add_option("--seed", cl.seed, "Recorded in the output");

    // verify
    VerifyOpts ve;
    auto* verify = app.add_subcommand("verify", "Check a clustering file against a points file");
    verify->add_option("--kind", ve.kind, "strong | well | semi (defaults to the file's)");
    verify->add_option("--sigma", ve.sigma, "Defaults to the file's");
    verify->add_option("--points", ve.points)->required();
    verify->add_option("--clusters", ve.clusters)->required();

    // oracle
    OracleOpts orc;
    auto* oracle = app.add_subcommand("oracle", "Exact exponential-time baselines");
    oracle->require_subcommand(1);
    auto* o_pair = oracle->add_subcommand("best-pair", "Best two-cluster quality");
    o_pair->add_option("--in", orc.in)->required();
    o_pair->add_option("--sigma", orc.sigma)->required();
    o_pair->add_option("--kind", orc.kind)->required();
    auto* o_ball = oracle->add_subcommand("min-ball", "Exact smallest radius covering alpha points");
    o_ball->add_option("--in", orc.in)->required();
    o_ball->add_option("--alpha", orc.alpha)->required();
    auto* o_three = oracle->add_subcommand("three-color", "Premises of three-color strong hopelessness");
    o_three->add_option("--in", orc.in)->required();
    o_three->add_option("--sigma", orc.sigma = 3.0);
    for (auto* sub : {o_pair, o_ball}) {
        sub->add_option("--max-n", orc.max_n, "Raise the oracle size budget");
    }

    // bench
    BenchOpts be;
    auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark suite and write CSV");
    bench_cmd->add_option("--suite", be.suite);
    bench_cmd->add_option("--out", be.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (generate->parsed()) {
            for (auto* sub : generate->get_subcommands()) {
                return run_generate(sub->get_name(), gen);
            }
        }
        if (cluster->parsed()) return run_cluster(cl);
        if (verify->parsed()) return run_verify(ve);
        if (oracle->parsed()) {
            for (auto* sub : oracle->get_subcommands()) {
                return run_oracle(sub->get_name(), orc);
            }
        }
        if (bench_cmd->parsed()) return run_bench(be);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const InfeasibleExtraction& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const sepclust::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
