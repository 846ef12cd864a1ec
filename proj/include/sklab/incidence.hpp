#pragma once

#include "sklab/vertex_set.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sklab {

/// Vertex-facet incidence description of a polytope. This is the sole
/// geometry-free input format; everything else is derived from it.
struct IncidenceMatrix {
    std::size_t n_vertices = 0;
    std::vector<std::vector<int>> facets;  // each sorted ascending
    std::string name;

    VertexSet facet_set(std::size_t j) const {
        return make_vertex_set(n_vertices, facets[j]);
    }
};

class invalid_incidence : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Checks the input invariants: indices in range, every vertex covered,
/// no facet contained in another, at least two facets. Throws
/// invalid_incidence naming the offending facet indices.
inline void validate_incidence(const IncidenceMatrix& inc) {
    if (inc.facets.size() < 2)
        throw invalid_incidence("incidence \"" + inc.name + "\": needs at least 2 facets, got " +
                                std::to_string(inc.facets.size()));
    std::vector<VertexSet> sets;
    sets.reserve(inc.facets.size());
    VertexSet covered(inc.n_vertices);
    for (std::size_t j = 0; j < inc.facets.size(); ++j) {
        for (int v : inc.facets[j]) {
            if (v < 0 || static_cast<std::size_t>(v) >= inc.n_vertices)
                throw invalid_incidence("facet " + std::to_string(j) + ": vertex index " +
                                        std::to_string(v) + " out of range");
        }
        sets.push_back(inc.facet_set(j));
        covered |= sets.back();
    }
    if (covered.count() != inc.n_vertices) {
        std::string orphans;
        for (std::size_t v = 0; v < inc.n_vertices; ++v)
            if (!covered.test(v)) orphans += (orphans.empty() ? "" : ",") + std::to_string(v);
        throw invalid_incidence("vertices {" + orphans + "} appear in no facet");
    }
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i == j) continue;
            if (sets[i].is_subset_of(sets[j]))
                throw invalid_incidence("facet " + std::to_string(i) +
                                        (sets[i] == sets[j] ? " duplicates facet " : " is contained in facet ") +
                                        std::to_string(j));
        }
}

// JSON polytope format: {"name": str, "n_vertices": int, "facets": [[int,...],...]}.
// "coords" is an optional sidecar of exact rationals as "p/q" strings.
inline void to_json(nlohmann::json& j, const IncidenceMatrix& inc) {
    j = nlohmann::json{{"name", inc.name}, {"n_vertices", inc.n_vertices}, {"facets", inc.facets}};
}

inline void from_json(const nlohmann::json& j, IncidenceMatrix& inc) {
    inc.name = j.value("name", "");
    j.at("n_vertices").get_to(inc.n_vertices);
    j.at("facets").get_to(inc.facets);
    for (auto& f : inc.facets) std::sort(f.begin(), f.end());
}

}  // namespace sklab
