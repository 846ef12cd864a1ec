#pragma once

#include "sklab/face_lattice.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sklab {

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

struct FaceCountRow {
    int i;             // dimension
    long long f_i;
    long long bound;   // C(d+1, i+1)
    bool pass;
    bool equality;
};

/// Lemma-style lower bound on face counts: f_i >= C(d+1, i+1) for each
/// proper dimension, with an equality flag (the simplex attains equality).
inline std::vector<FaceCountRow> check_face_count_bound(const FaceLattice& L) {
    std::vector<FaceCountRow> rows;
    auto f = L.f_vector();
    for (int i = 0; i < L.dim; ++i) {
        long long bound = binomial(L.dim + 1, i + 1);
        rows.push_back({i, f[static_cast<std::size_t>(i)], bound,
                        f[static_cast<std::size_t>(i)] >= bound,
                        f[static_cast<std::size_t>(i)] == bound});
    }
    return rows;
}

struct ValidationReport {
    bool graded = false;
    bool atoms_ok = false;
    bool coatoms_ok = false;
    bool intersection_closed = false;
    bool diamond = false;
    bool euler = false;
    bool face_count_bound = false;
    std::vector<std::string> failures;

    bool ok() const {
        return graded && atoms_ok && coatoms_ok && intersection_closed && diamond && euler &&
               face_count_bound;
    }
};

/// Checks the necessary conditions for L to be the face lattice of a
/// polytope: gradedness, atoms = singletons, coatom ranks, closure under
/// intersection, the diamond property on rank-2 intervals, the Euler
/// relation and the face-count lower bound. Failures are report entries,
/// never exceptions.
inline ValidationReport validate_polytopal(const FaceLattice& L) {
    ValidationReport rep;
    const std::size_t n = L.faces.size();

    // Graded: every cover step raises rank by exactly 1, the bottom is the
    // empty face at rank 0, the top is the full set at rank d+1, and no
    // chain dead-ends early.
    rep.graded = true;
    if (L.by_rank.front().size() != 1 || L.by_rank.back().size() != 1 ||
        L.faces[static_cast<std::size_t>(L.bottom())].vertices.any() ||
        L.faces[static_cast<std::size_t>(L.top())].vertices.count() != L.n_vertices) {
        rep.graded = false;
        rep.failures.push_back("bottom/top malformed");
    }
    for (std::size_t id = 0; id < n && rep.graded; ++id) {
        for (int c : L.covers_up[id])
            if (L.faces[static_cast<std::size_t>(c)].rank != L.faces[id].rank + 1) {
                rep.graded = false;
                rep.failures.push_back("cover " + vertex_set_to_string(L.faces[id].vertices) + " -> " +
                                       vertex_set_to_string(L.faces[static_cast<std::size_t>(c)].vertices) +
                                       " skips a rank");
                break;
            }
        if (rep.graded && static_cast<int>(id) != L.top() && L.covers_up[id].empty()) {
            rep.graded = false;
            rep.failures.push_back("maximal chain through " + vertex_set_to_string(L.faces[id].vertices) +
                                   " is short");
        }
    }

    // Atoms are exactly the singleton vertex sets.
    rep.atoms_ok = L.dim >= 0 && L.by_rank.size() > 1 &&
                   L.by_rank[1].size() == L.n_vertices;
    if (rep.atoms_ok)
        for (int id : L.by_rank[1])
            if (L.faces[static_cast<std::size_t>(id)].vertices.count() != 1) rep.atoms_ok = false;
    if (!rep.atoms_ok) rep.failures.push_back("atoms are not exactly the vertices");

    // Coatoms: everything covered by the top sits at rank d.
    rep.coatoms_ok = true;
    for (int id : L.covers_down[static_cast<std::size_t>(L.top())])
        if (L.faces[static_cast<std::size_t>(id)].rank != L.dim) rep.coatoms_ok = false;
    if (!rep.coatoms_ok) rep.failures.push_back("coatom at wrong rank");

    rep.intersection_closed = true;
    for (std::size_t i = 0; i < n && rep.intersection_closed; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (L.index.find(L.faces[i].vertices & L.faces[j].vertices) == L.index.end()) {
                rep.intersection_closed = false;
                rep.failures.push_back("intersection of " + vertex_set_to_string(L.faces[i].vertices) +
                                       " and " + vertex_set_to_string(L.faces[j].vertices) +
                                       " is not a face");
                break;
            }
        }

    // Diamond property: count length-2 cover chains per (bottom, top) pair;
    // every rank-2 interval must contain exactly two middle elements.
    rep.diamond = true;
    std::map<std::pair<int, int>, int> middles;
    for (std::size_t g = 0; g < n; ++g)
        for (int h : L.covers_down[g])
            for (int f : L.covers_down[static_cast<std::size_t>(h)])
                ++middles[{f, static_cast<int>(g)}];
    for (const auto& [pair, count] : middles)
        if (count != 2) {
            rep.diamond = false;
            rep.failures.push_back("interval [" +
                                   vertex_set_to_string(L.faces[static_cast<std::size_t>(pair.first)].vertices) +
                                   ", " +
                                   vertex_set_to_string(L.faces[static_cast<std::size_t>(pair.second)].vertices) +
                                   "] has " + std::to_string(count) + " middle elements");
            break;
        }

    // Euler relation on proper faces.
    long long alt = 0;
    auto f = L.f_vector();
    for (int i = 0; i < L.dim; ++i) alt += (i % 2 == 0 ? 1 : -1) * f[static_cast<std::size_t>(i)];
    rep.euler = (alt == 1 - (L.dim % 2 == 0 ? 1 : -1));
    if (!rep.euler) rep.failures.push_back("Euler relation fails");

    rep.face_count_bound = true;
    for (const auto& row : check_face_count_bound(L))
        if (!row.pass) {
            rep.face_count_bound = false;
            rep.failures.push_back("f_" + std::to_string(row.i) + " = " + std::to_string(row.f_i) +
                                   " below bound " + std::to_string(row.bound));
        }
    return rep;
}

}  // namespace sklab
