#pragma once

#include "sepclust/colored.hpp"
#include "sepclust/generators.hpp"
#include "sepclust/geometry.hpp"
#include "sepclust/separation.hpp"
#include "sepclust/version.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace sepclust::io {

// Points file
//
//   # dim=<d> colored=<0|1>
//   [color] x_1 ... x_d
//
// One point per line, whitespace separated, coordinates with 17 significant digits so that
// doubles round-trip exactly. The header is optional on input. Lines after the header starting
// with '#' are comments. Point indices are zero-based line positions (comments excluded).

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_points(std::ostream& os, const PointSet& P) {
    os << "# dim=" << P.dim() << " colored=0\n";
    for (std::size_t i = 0; i < P.size(); ++i) {
        for (std::size_t j = 0; j < P.dim(); ++j) {
            if (j) os << ' ';
            os << format_double(P[i][j]);
        }
        os << '\n';
    }
}

inline void write_points(std::ostream& os, const ColoredInstance& I) {
    const PointSet& P = I.points();
    os << "# dim=" << P.dim() << " colored=1\n";
    for (std::size_t i = 0; i < P.size(); ++i) {
        os << I.color_of(i);
        for (std::size_t j = 0; j < P.dim(); ++j) {
            os << ' ' << format_double(P[i][j]);
        }
        os << '\n';
    }
}

inline void write_instance(std::ostream& os, const Instance& inst) {
    std::visit([&](const auto& v) { write_points(os, v); }, inst);
}

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline double parse_double(std::string_view s, std::size_t line) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw ParseError(line, "bad coordinate '" + std::string(s) + "'");
    }
    return v;
}

inline std::size_t parse_size(std::string_view s, std::size_t line) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(line, "bad nonnegative integer '" + std::string(s) + "'");
    }
    return v;
}

struct Header {
    std::optional<std::size_t> dim;
    bool colored = false;
};

inline std::optional<Header> parse_header(std::string_view line, std::size_t lineno) {
    if (line.empty() || line.front() != '#') return std::nullopt;
    Header h;
    bool any = false;
    for (auto f : split_fields(line.substr(1))) {
        if (f.starts_with("dim=")) {
            h.dim = parse_size(f.substr(4), lineno);
            any = true;
        } else if (f.starts_with("colored=")) {
            const auto v = parse_size(f.substr(8), lineno);
            if (v > 1) throw ParseError(lineno, "colored must be 0 or 1");
            h.colored = v == 1;
            any = true;
        }
    }
    return any ? std::optional<Header>(h) : std::nullopt;
}

}  // namespace detail

/// Reads a points file. Without a header the file is uncolored and the dimension is the field
/// count of the first data line.
inline Instance read_points(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    detail::Header header;
    bool first_content = true;
    std::optional<std::size_t> dim;
    std::vector<double> coords;
    std::vector<std::size_t> colors;

    while (std::getline(is, line)) {
        ++lineno;
        std::string_view sv(line);
        if (first_content && !sv.empty() && sv.front() == '#') {
            if (auto h = detail::parse_header(sv, lineno)) {
                header = *h;
                dim = header.dim;
                first_content = false;
                continue;
            }
        }
        if (!sv.empty() && sv.front() == '#') continue;
        auto fields = detail::split_fields(sv);
        if (fields.empty()) continue;
        first_content = false;

        const std::size_t offset = header.colored ? 1 : 0;
        if (fields.size() <= offset) throw ParseError(lineno, "missing coordinates");
        const std::size_t d = fields.size() - offset;
        if (!dim) dim = d;
        if (d != *dim) {
            throw ParseError(lineno, "expected " + std::to_string(*dim) + " coordinates, got " + std::to_string(d));
        }
        if (header.colored) colors.push_back(detail::parse_size(fields[0], lineno));
        for (std::size_t f = offset; f < fields.size(); ++f) {
            coords.push_back(detail::parse_double(fields[f], lineno));
        }
    }
    if (!dim || coords.empty()) throw ParseError(lineno, "no points in file");
    if (*dim == 0) throw ParseError(1, "dimension must be >= 1");

    PointSet P(*dim, std::move(coords));
    if (!header.colored) return P;
    try {
        return ColoredInstance(std::move(P), std::move(colors));
    } catch (const InvalidArgument& e) {
        throw ParseError(lineno, e.what());
    }
}

inline Instance read_points_string(const std::string& text) {
    std::istringstream is(text);
    return read_points(is);
}

inline const PointSet& points_of(const Instance& inst) {
    if (const auto* p = std::get_if<PointSet>(&inst)) return *p;
    return std::get<ColoredInstance>(inst).points();
}

// Clustering file: a JSON object with stable key order.

struct ClusteringRecord {
    std::string algorithm;
    SeparationKind kind = SeparationKind::Semi;
    double sigma = 1.0;
    std::size_t k = 0;
    std::size_t alpha = 0;
    std::vector<std::vector<std::size_t>> clusters;
    std::vector<Ball> balls;
    std::size_t quality = 0;
    bool verified = false;
    std::optional<std::uint64_t> seed;
    std::string version = kVersion;

    Clustering clustering() const { return Clustering{clusters, sigma, kind}; }
};

inline nlohmann::ordered_json to_json(const ClusteringRecord& r) {
    nlohmann::ordered_json j;
    j["format"] = "sepclust-clustering";
    j["version"] = r.version;
    j["index_base"] = 0;
    j["algorithm"] = r.algorithm;
    j["kind"] = std::string(to_string(r.kind));
    j["sigma"] = r.sigma;
    j["k"] = r.k;
    j["alpha"] = r.alpha;
    j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
    j["quality"] = r.quality;
    j["verified"] = r.verified;
    j["clusters"] = r.clusters;
    auto balls = nlohmann::ordered_json::array();
    for (const auto& b : r.balls) {
        nlohmann::ordered_json jb;
        jb["center"] = std::vector<double>(b.center.coords().begin(), b.center.coords().end());
        jb["radius"] = b.radius;
        balls.push_back(std::move(jb));
    }
    j["balls"] = std::move(balls);
    return j;
}

inline ClusteringRecord clustering_from_json(const nlohmann::ordered_json& j) {
    try {
        ClusteringRecord r;
        r.version = j.value("version", std::string{});
        r.algorithm = j.value("algorithm", std::string{});
        const auto kind = parse_separation_kind(j.at("kind").get<std::string>());
        if (!kind) throw ParseError(0, "unknown separation kind");
        r.kind = *kind;
        r.sigma = j.at("sigma").get<double>();
        r.clusters = j.at("clusters").get<std::vector<std::vector<std::size_t>>>();
        r.k = j.value("k", r.clusters.size());
        r.alpha = j.value("alpha", std::size_t{0});
        r.quality = j.value("quality", std::size_t{0});
        r.verified = j.value("verified", false);
        if (j.contains("seed") && !j["seed"].is_null()) r.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("balls")) {
            for (const auto& jb : j["balls"]) {
                r.balls.emplace_back(Point(jb.at("center").get<std::vector<double>>()), jb.at("radius").get<double>());
            }
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("clustering file: ") + e.what());
    } catch (const InvalidArgument& e) {
        throw ParseError(0, std::string("clustering file: ") + e.what());
    }
}

inline void write_clustering(std::ostream& os, const ClusteringRecord& r) {
    os << to_json(r).dump(2) << '\n';
}

inline ClusteringRecord read_clustering(std::istream& is) {
    nlohmann::ordered_json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("clustering file: ") + e.what());
    }
    return clustering_from_json(j);
}

}  // namespace sepclust::io
