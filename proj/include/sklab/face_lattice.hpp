#pragma once

#include "sklab/incidence.hpp"
#include "sklab/vertex_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sklab {

class resource_guard_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::size_t max_face_guard() {
    if (const char* env = std::getenv("SKELETON_LAB_MAX_FACES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return 2'000'000;
}

constexpr std::size_t kMaxVertices = 4096;

/// One element of a face lattice. rank = dimension + 1: the empty face has
/// rank 0, vertices rank 1, facets rank d, the whole polytope rank d+1.
struct Face {
    VertexSet vertices;
    int rank = 0;

    int dim() const { return rank - 1; }
};

/// Graded lattice of faces ordered by inclusion, with Hasse-diagram cover
/// lists and a per-rank index. Face ids are canonical: sorted by rank, then
/// lexicographically by vertex set, so identical inputs give identical ids.
/// Immutable after construction.
struct FaceLattice {
    int dim = -1;
    std::size_t n_vertices = 0;
    std::string name;
    std::vector<Face> faces;
    std::vector<std::vector<int>> covers_up;
    std::vector<std::vector<int>> covers_down;
    std::vector<std::vector<int>> by_rank;  // rank -> face ids, ascending
    std::map<VertexSet, int> index;         // vertex set -> face id

    int bottom() const { return by_rank.front().front(); }
    int top() const { return by_rank.back().front(); }

    std::optional<int> find(const VertexSet& s) const {
        auto it = index.find(s);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }

    /// Face ids of dimension k (rank k+1); empty when out of range.
    const std::vector<int>& faces_of_dim(int k) const {
        static const std::vector<int> empty;
        int r = k + 1;
        if (r < 0 || r >= static_cast<int>(by_rank.size())) return empty;
        return by_rank[static_cast<std::size_t>(r)];
    }

    std::vector<long long> f_vector() const {
        std::vector<long long> f;
        for (int i = 0; i < dim; ++i)
            f.push_back(static_cast<long long>(faces_of_dim(i).size()));
        return f;
    }

    std::vector<std::vector<int>> coatom_sets() const {
        std::vector<std::vector<int>> out;
        for (int id : by_rank[static_cast<std::size_t>(dim)])
            out.push_back(vertex_indices(faces[static_cast<std::size_t>(id)].vertices));
        return out;
    }
};

/// Assembles a lattice from an explicit, deduplicated face list that must
/// contain the empty set. Ranks are longest-chain lengths from the bottom;
/// covers are minimal strict inclusions. Shared by the incidence builder,
/// duals, face figures and the complexes layer.
inline FaceLattice build_lattice_from_faces(std::size_t n_vertices, std::vector<VertexSet> sets,
                                            std::string name = "") {
    if (sets.size() > max_face_guard())
        throw resource_guard_exceeded("face count " + std::to_string(sets.size()) +
                                      " exceeds guard " + std::to_string(max_face_guard()));
    const std::size_t n = sets.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (sets[a].count() != sets[b].count()) return sets[a].count() < sets[b].count();
        return lex_less(sets[a], sets[b]);
    });
    std::vector<VertexSet> byCard;
    byCard.reserve(n);
    for (std::size_t i : order) byCard.push_back(std::move(sets[i]));
    if (byCard.empty() || byCard.front().any())
        throw std::invalid_argument("face list must contain the empty face");

    // Covers: the minimal strict supersets of each face. Scanning in
    // cardinality order lets the minimality test reuse covers found so far.
    std::vector<std::vector<int>> up(n), down(n);
    std::vector<int> rank(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (byCard[j].count() <= byCard[i].count()) continue;
            if (!byCard[i].is_subset_of(byCard[j])) continue;
            bool minimal = true;
            for (int c : up[i])
                if (byCard[static_cast<std::size_t>(c)].is_subset_of(byCard[j])) {
                    minimal = false;
                    break;
                }
            if (!minimal) continue;
            up[i].push_back(static_cast<int>(j));
            down[j].push_back(static_cast<int>(i));
        }
    }
    for (std::size_t j = 1; j < n; ++j) {
        int r = 0;
        for (int c : down[j]) r = std::max(r, rank[static_cast<std::size_t>(c)]);
        rank[j] = r + 1;
        if (down[j].empty())
            throw std::invalid_argument("face " + vertex_set_to_string(byCard[j]) +
                                        " covers nothing (face list not downward reachable)");
    }

    // Canonical ids: sort by (rank, lex). Cardinality order already agrees
    // with lex within a rank only by accident, so re-sort explicitly.
    std::vector<std::size_t> canon(n);
    std::iota(canon.begin(), canon.end(), 0);
    std::stable_sort(canon.begin(), canon.end(), [&](std::size_t a, std::size_t b) {
        if (rank[a] != rank[b]) return rank[a] < rank[b];
        return lex_less(byCard[a], byCard[b]);
    });
    std::vector<int> newId(n);
    for (std::size_t pos = 0; pos < n; ++pos) newId[canon[pos]] = static_cast<int>(pos);

    FaceLattice L;
    L.n_vertices = n_vertices;
    L.name = std::move(name);
    L.dim = rank[canon.back()] - 1;
    L.faces.resize(n);
    L.covers_up.resize(n);
    L.covers_down.resize(n);
    L.by_rank.assign(static_cast<std::size_t>(L.dim) + 2, {});
    for (std::size_t old = 0; old < n; ++old) {
        int id = newId[old];
        L.faces[static_cast<std::size_t>(id)] = Face{byCard[old], rank[old]};
        for (int c : up[old]) L.covers_up[static_cast<std::size_t>(id)].push_back(newId[static_cast<std::size_t>(c)]);
        for (int c : down[old]) L.covers_down[static_cast<std::size_t>(id)].push_back(newId[static_cast<std::size_t>(c)]);
    }
    for (std::size_t id = 0; id < n; ++id) {
        std::sort(L.covers_up[id].begin(), L.covers_up[id].end());
        std::sort(L.covers_down[id].begin(), L.covers_down[id].end());
        int r = L.faces[id].rank;
        if (r >= static_cast<int>(L.by_rank.size()))
            L.by_rank.resize(static_cast<std::size_t>(r) + 1);
        L.by_rank[static_cast<std::size_t>(r)].push_back(static_cast<int>(id));
        L.index.emplace(L.faces[id].vertices, static_cast<int>(id));
    }
    return L;
}

/// Builds the face lattice from vertex-facet incidences: every face is an
/// intersection of facet vertex sets, found by breadth-first closure from
/// the top. The empty face and the full vertex set are always included.
/// Rejects inputs violating the IncidenceMatrix invariants; does not assume
/// the result is polytopal (see validate_polytopal).
inline FaceLattice build_lattice(const IncidenceMatrix& inc) {
    if (inc.n_vertices > kMaxVertices)
        throw resource_guard_exceeded("vertex count " + std::to_string(inc.n_vertices) +
                                      " exceeds guard " + std::to_string(kMaxVertices));
    validate_incidence(inc);
    std::vector<VertexSet> facetSets;
    facetSets.reserve(inc.facets.size());
    for (std::size_t j = 0; j < inc.facets.size(); ++j) facetSets.push_back(inc.facet_set(j));

    VertexSet topSet(inc.n_vertices);
    topSet.set();

    std::map<VertexSet, bool> seen;
    seen.emplace(topSet, true);
    std::vector<VertexSet> queue{topSet};
    const std::size_t guard = max_face_guard();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexSet cur = queue[head];  // copy: queue may reallocate
        for (const VertexSet& h : facetSets) {
            VertexSet meet = cur & h;
            if (meet == cur) continue;
            if (seen.emplace(meet, true).second) {
                queue.push_back(std::move(meet));
                if (queue.size() > guard)
                    throw resource_guard_exceeded("closure exceeded face guard " + std::to_string(guard));
            }
        }
    }
    VertexSet emptySet(inc.n_vertices);
    if (seen.emplace(emptySet, true).second) queue.push_back(emptySet);
    return build_lattice_from_faces(inc.n_vertices, std::move(queue), inc.name);
}

/// Meet of two faces: the set intersection, which in an intersection-closed
/// lattice is again a face. The empty face is a valid result.
inline int meet(const FaceLattice& L, int f, int g) {
    VertexSet m = L.faces[static_cast<std::size_t>(f)].vertices & L.faces[static_cast<std::size_t>(g)].vertices;
    auto id = L.find(m);
    if (!id) throw std::logic_error("meet " + vertex_set_to_string(m) + " is not a face (lattice not intersection-closed)");
    return *id;
}

/// One face per line: rank then the sorted vertex list. Golden-file format.
inline std::string dump_lattice(const FaceLattice& L) {
    std::ostringstream os;
    for (const auto& face : L.faces) {
        os << face.rank;
        for (int v : vertex_indices(face.vertices)) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

}  // namespace sklab
