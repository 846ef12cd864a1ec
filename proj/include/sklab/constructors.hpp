#pragma once

#include "sklab/face_lattice.hpp"
#include "sklab/lattice_checks.hpp"
#include "sklab/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sklab {

/// A face lattice plus an optional exact-rational vertex embedding. The
/// coordinates exist only for the affine-rank hypothesis of the
/// strengthened Balinski check; all combinatorics live in the lattice.
struct CoordinatizedPolytope {
    FaceLattice lattice;
    std::optional<std::vector<std::vector<Rational>>> coords;

    const std::string& name() const { return lattice.name; }
};

namespace detail {

inline void check_dimension_guard(int d, int lo) {
    if (d < lo || d > 12)
        throw std::invalid_argument("dimension " + std::to_string(d) + " out of range [" +
                                    std::to_string(lo) + ",12]");
}

inline std::vector<std::vector<int>> all_subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    // lexicographic k-subset enumeration
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace detail

/// d-simplex: d+1 vertices, facets are all d-subsets. Coordinates are the
/// origin plus the standard unit vectors. d = 0 (a point) is built directly
/// since a point has no two-facet incidence description.
inline CoordinatizedPolytope simplex(int d) {
    detail::check_dimension_guard(d, 0);
    std::vector<std::vector<Rational>> coords(static_cast<std::size_t>(d) + 1,
                                              std::vector<Rational>(static_cast<std::size_t>(d), 0));
    for (int v = 1; v <= d; ++v) coords[static_cast<std::size_t>(v)][static_cast<std::size_t>(v - 1)] = 1;
    if (d == 0) {
        std::vector<VertexSet> faces{VertexSet(1), make_vertex_set(1, {0})};
        return {build_lattice_from_faces(1, std::move(faces), "simplex(0)"), std::move(coords)};
    }
    IncidenceMatrix inc;
    inc.n_vertices = static_cast<std::size_t>(d) + 1;
    inc.name = "simplex(" + std::to_string(d) + ")";
    inc.facets = detail::all_subsets_of_size(d + 1, d);
    return {build_lattice(inc), std::move(coords)};
}

inline CoordinatizedPolytope segment() { return simplex(1); }

/// d-cube on the 2^d 0/1 vectors; facet j fixes one coordinate to 0 or 1.
inline CoordinatizedPolytope hypercube(int d) {
    detail::check_dimension_guard(d, 1);
    const std::size_t n = std::size_t{1} << d;
    IncidenceMatrix inc;
    inc.n_vertices = n;
    inc.name = "hypercube(" + std::to_string(d) + ")";
    for (int axis = 0; axis < d; ++axis)
        for (int value = 0; value <= 1; ++value) {
            std::vector<int> facet;
            for (std::size_t v = 0; v < n; ++v)
                if (((v >> axis) & 1) == static_cast<std::size_t>(value)) facet.push_back(static_cast<int>(v));
            inc.facets.push_back(std::move(facet));
        }
    std::vector<std::vector<Rational>> coords(n, std::vector<Rational>(static_cast<std::size_t>(d)));
    for (std::size_t v = 0; v < n; ++v)
        for (int axis = 0; axis < d; ++axis)
            coords[v][static_cast<std::size_t>(axis)] = static_cast<int>((v >> axis) & 1);
    return {build_lattice(inc), std::move(coords)};
}

/// d-cross-polytope: vertices 2i and 2i+1 are +e_i and -e_i; each facet
/// picks one vertex per axis, one facet per sign pattern.
inline CoordinatizedPolytope cross_polytope(int d) {
    detail::check_dimension_guard(d, 1);
    IncidenceMatrix inc;
    inc.n_vertices = 2 * static_cast<std::size_t>(d);
    inc.name = "cross_polytope(" + std::to_string(d) + ")";
    for (std::size_t signs = 0; signs < (std::size_t{1} << d); ++signs) {
        std::vector<int> facet;
        for (int axis = 0; axis < d; ++axis)
            facet.push_back(2 * axis + static_cast<int>((signs >> axis) & 1));
        std::sort(facet.begin(), facet.end());
        inc.facets.push_back(std::move(facet));
    }
    std::vector<std::vector<Rational>> coords(2 * static_cast<std::size_t>(d),
                                              std::vector<Rational>(static_cast<std::size_t>(d), 0));
    for (int axis = 0; axis < d; ++axis) {
        coords[static_cast<std::size_t>(2 * axis)][static_cast<std::size_t>(axis)] = 1;
        coords[static_cast<std::size_t>(2 * axis + 1)][static_cast<std::size_t>(axis)] = -1;
    }
    return {build_lattice(inc), std::move(coords)};
}

inline CoordinatizedPolytope standard_family(const std::string& family, int d) {
    if (family == "simplex") return simplex(d);
    if (family == "hypercube") return hypercube(d);
    if (family == "cross_polytope") return cross_polytope(d);
    throw std::invalid_argument("unknown family \"" + family + "\"");
}

/// Cyclic polytope C(n,d), combinatorially via Gale's evenness condition:
/// a d-subset S of {0..n-1} is a facet iff any two non-members have an even
/// number of members strictly between them (equivalently, consecutive
/// non-members are an odd index distance apart). No coordinates emitted.
inline FaceLattice cyclic(int n, int d) {
    if (d < 2 || n < d + 1)
        throw std::invalid_argument("cyclic polytope needs n >= d+1 >= 3, got n=" +
                                    std::to_string(n) + " d=" + std::to_string(d));
    IncidenceMatrix inc;
    inc.n_vertices = static_cast<std::size_t>(n);
    inc.name = "cyclic(" + std::to_string(n) + "," + std::to_string(d) + ")";
    for (const auto& subset : detail::all_subsets_of_size(n, d)) {
        std::vector<bool> in(static_cast<std::size_t>(n), false);
        for (int v : subset) in[static_cast<std::size_t>(v)] = true;
        bool even = true;
        int prevOut = -1;
        for (int v = 0; v < n && even; ++v) {
            if (in[static_cast<std::size_t>(v)]) continue;
            if (prevOut >= 0 && (v - prevOut) % 2 == 0) even = false;
            prevOut = v;
        }
        if (even) inc.facets.push_back(subset);
    }
    return build_lattice(inc);
}

/// Cartesian product. Vertex (i,j) gets id i * nQ + j; facets are F x Q for
/// facets F of P and P x G for facets G of Q. Coordinates concatenate when
/// both inputs carry them.
inline CoordinatizedPolytope product(const CoordinatizedPolytope& P, const CoordinatizedPolytope& Q) {
    const std::size_t nP = P.lattice.n_vertices, nQ = Q.lattice.n_vertices;
    if (nP * nQ > kMaxVertices)
        throw resource_guard_exceeded("product vertex count " + std::to_string(nP * nQ) +
                                      " exceeds guard " + std::to_string(kMaxVertices));
    IncidenceMatrix inc;
    inc.n_vertices = nP * nQ;
    inc.name = "product(" + P.lattice.name + "," + Q.lattice.name + ")";
    auto pairId = [&](int i, int j) { return i * static_cast<int>(nQ) + j; };
    for (const auto& facet : P.lattice.coatom_sets()) {
        std::vector<int> vs;
        for (int i : facet)
            for (std::size_t j = 0; j < nQ; ++j) vs.push_back(pairId(i, static_cast<int>(j)));
        std::sort(vs.begin(), vs.end());
        inc.facets.push_back(std::move(vs));
    }
    for (const auto& facet : Q.lattice.coatom_sets()) {
        std::vector<int> vs;
        for (std::size_t i = 0; i < nP; ++i)
            for (int j : facet) vs.push_back(pairId(static_cast<int>(i), j));
        std::sort(vs.begin(), vs.end());
        inc.facets.push_back(std::move(vs));
    }
    CoordinatizedPolytope out{build_lattice(inc), std::nullopt};
    if (P.coords && Q.coords) {
        std::vector<std::vector<Rational>> coords(nP * nQ);
        for (std::size_t i = 0; i < nP; ++i)
            for (std::size_t j = 0; j < nQ; ++j) {
                auto row = (*P.coords)[i];
                row.insert(row.end(), (*Q.coords)[j].begin(), (*Q.coords)[j].end());
                coords[i * nQ + j] = std::move(row);
            }
        out.coords = std::move(coords);
    }
    return out;
}

/// Pyramid: one apex over all old vertices; the base plus the cones over
/// the old facets are the new facets. The apex is embedded at height 1
/// above the barycenter.
inline CoordinatizedPolytope pyramid(const CoordinatizedPolytope& P) {
    const std::size_t n = P.lattice.n_vertices;
    if (n + 1 > kMaxVertices) throw resource_guard_exceeded("pyramid exceeds vertex guard");
    const int apex = static_cast<int>(n);
    IncidenceMatrix inc;
    inc.n_vertices = n + 1;
    inc.name = "pyramid(" + P.lattice.name + ")";
    std::vector<int> base(n);
    for (std::size_t v = 0; v < n; ++v) base[v] = static_cast<int>(v);
    inc.facets.push_back(base);
    for (auto facet : P.lattice.coatom_sets()) {
        facet.push_back(apex);
        inc.facets.push_back(std::move(facet));
    }
    CoordinatizedPolytope out{build_lattice(inc), std::nullopt};
    if (P.coords) {
        const std::size_t dim = (*P.coords)[0].size();
        std::vector<std::vector<Rational>> coords;
        std::vector<Rational> barycenter(dim, 0);
        for (const auto& row : *P.coords) {
            auto lifted = row;
            lifted.push_back(0);
            coords.push_back(std::move(lifted));
            for (std::size_t c = 0; c < dim; ++c) barycenter[c] += row[c];
        }
        for (auto& b : barycenter) b /= static_cast<int>(n);
        barycenter.push_back(1);
        coords.push_back(std::move(barycenter));
        out.coords = std::move(coords);
    }
    return out;
}

/// Prism over the (d-1)-simplex, the tightness example for the ridge graph.
inline CoordinatizedPolytope prism_over_simplex(int d) {
    return product(simplex(d - 1), segment());
}

}  // namespace sklab
