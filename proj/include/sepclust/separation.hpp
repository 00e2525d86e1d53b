#pragma once

#include "sepclust/geometry.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sepclust {

enum class SeparationKind { Strong, Well, Semi };

inline std::string_view to_string(SeparationKind kind) {
    switch (kind) {
        case SeparationKind::Strong: return "strong";
        case SeparationKind::Well: return "well";
        case SeparationKind::Semi: return "semi";
    }
    return "unknown";
}

inline std::optional<SeparationKind> parse_separation_kind(std::string_view s) {
    if (s == "strong") return SeparationKind::Strong;
    if (s == "well") return SeparationKind::Well;
    if (s == "semi") return SeparationKind::Semi;
    return std::nullopt;
}

/// k disjoint, nonempty index sets into a base point set, with the separation they claim.
struct Clustering {
    std::vector<std::vector<std::size_t>> clusters;
    double sigma = 1.0;
    SeparationKind kind = SeparationKind::Semi;

    std::size_t k() const noexcept { return clusters.size(); }
};

inline void validate(const PointSet& P, const Clustering& C) {
    if (C.clusters.empty()) {
        throw InvalidClustering("clustering must contain at least one cluster");
    }
    if (!(C.sigma > 0.0) || !std::isfinite(C.sigma)) {
        throw InvalidClustering("sigma must be finite and > 0");
    }
    std::vector<char> seen(P.size(), 0);
    for (std::size_t c = 0; c < C.clusters.size(); ++c) {
        if (C.clusters[c].empty()) {
            throw InvalidClustering("cluster " + std::to_string(c) + " is empty");
        }
        for (auto i : C.clusters[c]) {
            if (i >= P.size()) {
                throw InvalidClustering("index " + std::to_string(i) + " out of range");
            }
            if (seen[i]) {
                throw InvalidClustering("index " + std::to_string(i) + " appears in more than one place");
            }
            seen[i] = 1;
        }
    }
}

/// Per-pair evidence behind a separation verdict.
struct PairMargin {
    std::size_t i = 0;
    std::size_t j = 0;
    double distance = 0.0;       ///< set distance between the two clusters
    double diameter_term = 0.0;  ///< the diameter the kind compares against
    double required = 0.0;       ///< sigma * diameter_term
    bool ok = false;
};

inline std::vector<PairMargin> separation_margins(const PointSet& P, const Clustering& C) {
    validate(P, C);
    std::vector<double> diam(C.k());
    for (std::size_t c = 0; c < C.k(); ++c) {
        diam[c] = diameter(P, C.clusters[c]);
    }
    const double max_diam = *std::max_element(diam.begin(), diam.end());

    std::vector<PairMargin> out;
    for (std::size_t i = 0; i < C.k(); ++i) {
        for (std::size_t j = i + 1; j < C.k(); ++j) {
            PairMargin m;
            m.i = i;
            m.j = j;
            m.distance = set_distance(P, C.clusters[i], C.clusters[j]);
            switch (C.kind) {
                case SeparationKind::Strong: m.diameter_term = max_diam; break;
                case SeparationKind::Well: m.diameter_term = std::max(diam[i], diam[j]); break;
                case SeparationKind::Semi: m.diameter_term = std::min(diam[i], diam[j]); break;
            }
            m.required = C.sigma * m.diameter_term;
            m.ok = m.distance >= m.required * (1.0 - kRelativeTolerance);
            out.push_back(m);
        }
    }
    return out;
}

/// True iff every pair of clusters meets the separation inequality of `C.kind` at `C.sigma`.
inline bool check_separation(const PointSet& P, const Clustering& C) {
    const auto margins = separation_margins(P, C);
    return std::all_of(margins.begin(), margins.end(), [](const PairMargin& m) { return m.ok; });
}

/// Size of the smallest cluster.
inline std::size_t quality(const Clustering& C) {
    if (C.clusters.empty()) {
        throw InvalidClustering("clustering must contain at least one cluster");
    }
    std::size_t q = C.clusters.front().size();
    for (const auto& c : C.clusters) {
        q = std::min(q, c.size());
    }
    return q;
}

inline bool is_useless(const Clustering& C) {
    return quality(C) == 1;
}

}  // namespace sepclust
