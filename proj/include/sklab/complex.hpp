#pragma once

#include "sklab/connectivity.hpp"
#include "sklab/constructors.hpp"
#include "sklab/face_lattice.hpp"
#include "sklab/lattice_checks.hpp"
#include "sklab/skeleton.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sklab {

class invalid_complex : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Polyhedral cell complex over a shared vertex universe. Cells are
/// identified by their vertex sets, which is sound exactly because the
/// intersection property is enforced: general regular cell complexes whose
/// cells are not determined by their vertices are outside this
/// representation. The empty cell is kept implicit.
struct CellComplex {
    std::size_t n_vertices = 0;
    int dim = -1;
    std::string name;
    std::vector<Face> cells;             // sorted by (dim, lex); rank = dim + 1
    std::vector<int> maximal;            // cell ids
    std::vector<std::vector<int>> by_dim;
    std::map<VertexSet, int> index;

    const std::vector<int>& cells_of_dim(int k) const {
        static const std::vector<int> empty;
        if (k < 0 || k > dim) return empty;
        return by_dim[static_cast<std::size_t>(k)];
    }

    std::vector<long long> f_vector() const {
        std::vector<long long> f;
        for (int i = 0; i <= dim; ++i)
            f.push_back(static_cast<long long>(cells_of_dim(i).size()));
        return f;
    }
};

namespace detail {

/// Assembles a complex from the already-expanded face sets of each maximal
/// cell. Each entry pairs a face's global vertex set with its dimension in
/// the owning cell; duplicates must agree on dimension.
inline CellComplex assemble_complex(std::size_t n_vertices,
                                    const std::vector<std::vector<std::pair<VertexSet, int>>>& cellFaces,
                                    std::string name) {
    CellComplex C;
    C.n_vertices = n_vertices;
    C.name = std::move(name);

    std::map<VertexSet, int> dimOf;
    std::vector<VertexSet> maximalSets;
    std::vector<std::set<VertexSet>> faceSets;  // per input cell, for the intersection check
    for (const auto& faces : cellFaces) {
        int topDim = -1;
        const VertexSet* topSet = nullptr;
        std::set<VertexSet> own;
        for (const auto& [set, dim] : faces) {
            if (!set.any()) continue;
            own.insert(set);
            auto [it, inserted] = dimOf.emplace(set, dim);
            if (!inserted && it->second != dim)
                throw invalid_complex("cell " + vertex_set_to_string(set) +
                                      " has inconsistent dimension across maximal cells");
            if (dim > topDim) {
                topDim = dim;
                topSet = &it->first;
            }
        }
        maximalSets.push_back(*topSet);
        faceSets.push_back(std::move(own));
    }

    // A maximal cell contained in another is an input error, except for
    // exact duplicates, which collapse into one cell.
    std::vector<VertexSet> distinctMax;
    for (const auto& s : maximalSets)
        if (std::find(distinctMax.begin(), distinctMax.end(), s) == distinctMax.end())
            distinctMax.push_back(s);
    for (std::size_t i = 0; i < distinctMax.size(); ++i)
        for (std::size_t j = 0; j < distinctMax.size(); ++j)
            if (i != j && distinctMax[i].is_subset_of(distinctMax[j]))
                throw invalid_complex("maximal cell " + vertex_set_to_string(distinctMax[i]) +
                                      " is contained in " + vertex_set_to_string(distinctMax[j]));

    std::vector<std::pair<VertexSet, int>> ordered(dimOf.begin(), dimOf.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return lex_less(a.first, b.first);
    });
    for (const auto& [set, dim] : ordered) {
        C.dim = std::max(C.dim, dim);
        C.index.emplace(set, static_cast<int>(C.cells.size()));
        C.cells.push_back(Face{set, dim + 1});
    }
    C.by_dim.assign(static_cast<std::size_t>(C.dim) + 1, {});
    for (std::size_t id = 0; id < C.cells.size(); ++id)
        C.by_dim[static_cast<std::size_t>(C.cells[id].dim())].push_back(static_cast<int>(id));
    for (const auto& s : distinctMax) C.maximal.push_back(C.index.at(s));
    std::sort(C.maximal.begin(), C.maximal.end());

    // Intersection property, checked pairwise on maximal cells. The
    // intersection must be a face of every cell on either side, not merely
    // some cell of the complex: a triangle riding a square's diagonal meets
    // it in a set that is a face of the triangle but not of the square.
    for (std::size_t a = 0; a < C.maximal.size(); ++a)
        for (std::size_t b = a + 1; b < C.maximal.size(); ++b) {
            const VertexSet& A = C.cells[static_cast<std::size_t>(C.maximal[a])].vertices;
            const VertexSet& B = C.cells[static_cast<std::size_t>(C.maximal[b])].vertices;
            VertexSet m = A & B;
            if (!m.any()) continue;
            for (std::size_t c = 0; c < maximalSets.size(); ++c) {
                if (maximalSets[c] != A && maximalSets[c] != B) continue;
                if (!faceSets[c].count(m))
                    throw invalid_complex("intersection " + vertex_set_to_string(m) +
                                          " of maximal cells " + vertex_set_to_string(A) + " and " +
                                          vertex_set_to_string(B) + " is not a face of " +
                                          vertex_set_to_string(maximalSets[c]));
            }
        }
    return C;
}

}  // namespace detail

/// Builds a complex from maximal cells given as vertex-facet incidences in
/// global vertex ids. Each cell must validate as a polytope; all of its
/// faces are materialized and deduplicated by vertex set, and the pairwise
/// intersection property is verified.
inline CellComplex build_complex(std::size_t n_vertices, const std::vector<IncidenceMatrix>& cellsIn,
                                 std::string name = "") {
    if (cellsIn.empty()) throw invalid_complex("complex needs at least one cell");
    std::vector<std::vector<std::pair<VertexSet, int>>> cellFaces;
    for (std::size_t c = 0; c < cellsIn.size(); ++c) {
        // compress the cell's global vertex ids to a local universe
        std::set<int> usedSet;
        for (const auto& facet : cellsIn[c].facets) usedSet.insert(facet.begin(), facet.end());
        std::vector<int> used(usedSet.begin(), usedSet.end());
        std::map<int, int> local;
        for (std::size_t i = 0; i < used.size(); ++i) local[used[i]] = static_cast<int>(i);

        IncidenceMatrix localInc;
        localInc.n_vertices = used.size();
        localInc.name = cellsIn[c].name;
        for (const auto& facet : cellsIn[c].facets) {
            std::vector<int> lf;
            for (int v : facet) {
                if (v < 0 || static_cast<std::size_t>(v) >= n_vertices)
                    throw invalid_complex("cell " + std::to_string(c) + " uses vertex " +
                                          std::to_string(v) + " outside the universe");
                lf.push_back(local.at(v));
            }
            localInc.facets.push_back(std::move(lf));
        }
        FaceLattice L = build_lattice(localInc);
        if (!validate_polytopal(L).ok())
            throw invalid_complex("cell " + std::to_string(c) + " is not a valid polytope lattice");
        std::vector<std::pair<VertexSet, int>> faces;
        for (const Face& f : L.faces) {
            VertexSet global(n_vertices);
            for (int lv : vertex_indices(f.vertices)) global.set(static_cast<std::size_t>(used[static_cast<std::size_t>(lv)]));
            faces.emplace_back(std::move(global), f.dim());
        }
        cellFaces.push_back(std::move(faces));
    }
    return detail::assemble_complex(n_vertices, cellFaces, std::move(name));
}

/// Two d-simplices {0..d} and {1..d+1} glued along the codimension-one face
/// {1..d}. The standard example showing the top-dimensional skeleton graph
/// of a complex can fail to be even 2-connected.
inline CellComplex glued_simplices(int d) {
    if (d < 1) throw std::invalid_argument("glued_simplices needs d >= 1");
    auto cellIncidence = [&](int offset) {
        IncidenceMatrix inc;
        inc.n_vertices = static_cast<std::size_t>(d) + 2;  // global universe size, unused locally
        for (auto facet : detail::all_subsets_of_size(d + 1, d)) {
            for (int& v : facet) v += offset;
            inc.facets.push_back(std::move(facet));
        }
        return inc;
    };
    return build_complex(static_cast<std::size_t>(d) + 2, {cellIncidence(0), cellIncidence(1)},
                         "glued_simplices(" + std::to_string(d) + ")");
}

/// Boundary complex of a polytope: all proper faces, with the facets as
/// maximal cells. Built straight from the lattice so that 0-dimensional
/// maximal cells (the boundary of a segment) work too.
inline CellComplex boundary_complex(const FaceLattice& P) {
    if (P.dim < 1) throw std::invalid_argument("boundary complex needs dim >= 1");
    std::vector<std::vector<std::pair<VertexSet, int>>> cellFaces;
    for (int facet : P.by_rank[static_cast<std::size_t>(P.dim)]) {
        std::vector<std::pair<VertexSet, int>> faces;
        const VertexSet& top = P.faces[static_cast<std::size_t>(facet)].vertices;
        for (const Face& f : P.faces)
            if (f.vertices.is_subset_of(top)) faces.emplace_back(f.vertices, f.dim());
        cellFaces.push_back(std::move(faces));
    }
    return detail::assemble_complex(P.n_vertices, cellFaces,
                                    P.name.empty() ? "boundary" : "boundary(" + P.name + ")");
}

struct ComplexReport {
    int dim = -1;
    bool pure = false;
    bool strongly_connected = false;
    std::vector<int> deviant_cells;                    // maximal cells below top dimension
    std::vector<std::vector<int>> dual_components;     // components of the facet-ridge graph
};

/// Purity and strong connectivity of the facet-ridge dual graph (maximal
/// cells adjacent when their intersection has codimension one), both with
/// witnesses.
inline ComplexReport complex_checks(const CellComplex& C) {
    ComplexReport rep;
    rep.dim = C.dim;
    rep.pure = true;
    for (int m : C.maximal)
        if (C.cells[static_cast<std::size_t>(m)].dim() != C.dim) {
            rep.pure = false;
            rep.deviant_cells.push_back(m);
        }
    std::vector<std::pair<int, int>> dualEdges;
    for (std::size_t a = 0; a < C.maximal.size(); ++a)
        for (std::size_t b = a + 1; b < C.maximal.size(); ++b) {
            VertexSet m = C.cells[static_cast<std::size_t>(C.maximal[a])].vertices &
                          C.cells[static_cast<std::size_t>(C.maximal[b])].vertices;
            auto it = C.index.find(m);
            if (it != C.index.end() && C.cells[static_cast<std::size_t>(it->second)].dim() == C.dim - 1)
                dualEdges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    SkeletonGraph dual = make_graph(C.maximal.size(), dualEdges);
    auto comps = delete_and_check(dual, {});
    rep.strongly_connected = comps.connected && !C.maximal.empty();
    rep.dual_components = comps.components;
    return rep;
}

/// G_k(C): nodes are the k-cells, adjacent iff some (k+1)-cell contains
/// both. For a one-cell complex this agrees with the polytope skeleton
/// graph restricted to proper faces. k = dim C is rejected: the top cells
/// have no common higher cell to witness adjacency.
inline SkeletonGraph complex_skeleton_graph(const CellComplex& C, int k) {
    if (k < 0 || k > C.dim - 1)
        throw std::invalid_argument("complex skeleton needs 0 <= k <= dim-1");
    std::vector<int> nodes = C.cells_of_dim(k);
    std::vector<int> dims(nodes.size(), k);
    std::set<std::pair<int, int>> edges;
    for (int parent : C.cells_of_dim(k + 1)) {
        const VertexSet& big = C.cells[static_cast<std::size_t>(parent)].vertices;
        std::vector<int> inside;
        for (int f : nodes)
            if (C.cells[static_cast<std::size_t>(f)].vertices.is_subset_of(big)) inside.push_back(f);
        for (std::size_t a = 0; a < inside.size(); ++a)
            for (std::size_t b = a + 1; b < inside.size(); ++b) edges.emplace(inside[a], inside[b]);
    }
    SkeletonGraph g = detail::graph_from_nodes(std::move(nodes), std::move(dims), edges);
    g.kind = SkeletonGraph::Kind::gk;
    g.k = k;
    return g;
}

// JSON complex format: {"n_vertices": int, "cells": [polytope JSON, ...]}
// with facets in global vertex ids.
inline CellComplex complex_from_json(const nlohmann::json& j) {
    std::size_t n = j.at("n_vertices").get<std::size_t>();
    std::vector<IncidenceMatrix> cells = j.at("cells").get<std::vector<IncidenceMatrix>>();
    return build_complex(n, cells, j.value("name", ""));
}

}  // namespace sklab
