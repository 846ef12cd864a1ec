#pragma once

#include "sklab/face_lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sklab {

/// Bijection between face ids of a source and a derived lattice,
/// order-preserving or order-reversing as declared.
struct FaceMap {
    bool order_reversing = false;
    std::vector<std::pair<int, int>> pairs;  // (source id, target id)
    std::unordered_map<int, int> forward;
    std::unordered_map<int, int> backward;

    void add(int src, int dst) {
        pairs.emplace_back(src, dst);
        forward.emplace(src, dst);
        backward.emplace(dst, src);
    }
    int map(int src) const { return forward.at(src); }
    int unmap(int dst) const { return backward.at(dst); }
};

/// Polar dual: faces in inclusion-reversing bijection with the source.
/// The dual vertex universe is the facet list of L; a face F maps to the
/// set of facets containing F. Dual dimension equals the original, and
/// dualizing twice gives a lattice isomorphic to L via the composed map.
inline std::pair<FaceLattice, FaceMap> polar_dual(const FaceLattice& L) {
    const auto& coatoms = L.by_rank[static_cast<std::size_t>(L.dim)];
    const std::size_t m = coatoms.size();
    std::vector<VertexSet> dualSets(L.faces.size(), VertexSet(m));
    for (std::size_t id = 0; id < L.faces.size(); ++id)
        for (std::size_t j = 0; j < m; ++j)
            if (L.faces[id].vertices.is_subset_of(
                    L.faces[static_cast<std::size_t>(coatoms[j])].vertices))
                dualSets[id].set(j);

    FaceLattice D = build_lattice_from_faces(m, dualSets, L.name.empty() ? "" : "dual(" + L.name + ")");
    FaceMap map;
    map.order_reversing = true;
    for (std::size_t id = 0; id < L.faces.size(); ++id) map.add(static_cast<int>(id), *D.find(dualSets[id]));
    return {std::move(D), std::move(map)};
}

/// Face figure at a proper nonempty face F: the interval [F, top] relabeled
/// as the lattice of a (d - dim F - 1)-dimensional polytope. Its vertices
/// are the faces covering F; a face G >= F maps to the set of those covers
/// it contains. The returned map is inclusion-preserving from the faces of
/// L containing F onto the figure.
inline std::pair<FaceLattice, FaceMap> face_figure(const FaceLattice& L, int faceId) {
    const Face& base = L.faces[static_cast<std::size_t>(faceId)];
    if (faceId == L.bottom() || faceId == L.top())
        throw std::invalid_argument("face figure requires a proper nonempty face");

    const std::vector<int>& figureAtoms = L.covers_up[static_cast<std::size_t>(faceId)];
    const std::size_t m = figureAtoms.size();
    std::vector<int> interval;
    for (std::size_t id = 0; id < L.faces.size(); ++id)
        if (base.vertices.is_subset_of(L.faces[id].vertices)) interval.push_back(static_cast<int>(id));

    std::vector<VertexSet> figSets;
    figSets.reserve(interval.size());
    for (int g : interval) {
        VertexSet s(m);
        for (std::size_t a = 0; a < m; ++a)
            if (L.faces[static_cast<std::size_t>(figureAtoms[a])].vertices.is_subset_of(
                    L.faces[static_cast<std::size_t>(g)].vertices))
                s.set(a);
        figSets.push_back(std::move(s));
    }
    FaceLattice F = build_lattice_from_faces(m, figSets);
    FaceMap map;
    for (std::size_t i = 0; i < interval.size(); ++i) map.add(interval[i], *F.find(figSets[i]));
    return {std::move(F), std::move(map)};
}

/// True when `map` composed with itself-style image respects inclusion and
/// dimension between L and M (used to check the duality involution).
inline bool is_order_isomorphism(const FaceLattice& L, const FaceLattice& M, const FaceMap& map,
                                 bool reversing) {
    if (L.faces.size() != M.faces.size() || L.dim != M.dim) return false;
    for (std::size_t i = 0; i < L.faces.size(); ++i) {
        int mi = map.forward.at(static_cast<int>(i));
        int expect = reversing ? L.dim + 1 - L.faces[i].rank : L.faces[i].rank;
        if (M.faces[static_cast<std::size_t>(mi)].rank != expect) return false;
        for (std::size_t j = 0; j < L.faces.size(); ++j) {
            int mj = map.forward.at(static_cast<int>(j));
            bool sub = L.faces[i].vertices.is_subset_of(L.faces[j].vertices);
            bool msub = reversing
                            ? M.faces[static_cast<std::size_t>(mj)].vertices.is_subset_of(
                                  M.faces[static_cast<std::size_t>(mi)].vertices)
                            : M.faces[static_cast<std::size_t>(mi)].vertices.is_subset_of(
                                  M.faces[static_cast<std::size_t>(mj)].vertices);
            if (sub != msub) return false;
        }
    }
    return true;
}

/// Composes two face maps (the second applied after the first).
inline FaceMap compose(const FaceMap& first, const FaceMap& second) {
    FaceMap out;
    out.order_reversing = first.order_reversing != second.order_reversing;
    for (const auto& [src, mid] : first.pairs) out.add(src, second.map(mid));
    return out;
}

}  // namespace sklab
