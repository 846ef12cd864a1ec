#pragma once

#include "sklab/face_lattice.hpp"
#include "sklab/lattice_ops.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sklab {

/// Simple undirected graph whose nodes carry a face id and dimension from
/// the lattice (or complex) they came from. Node order is the face-id
/// order, adjacency lists are sorted, so all outputs are deterministic.
struct SkeletonGraph {
    enum class Kind { gk, incidence, gamma, raw };

    Kind kind = Kind::raw;
    int k = -1, r = -1, s = -1;
    std::vector<int> node_faces;  // source face ids, ascending
    std::vector<int> node_dims;
    std::vector<std::vector<int>> adj;  // node indices, sorted
    std::unordered_map<int, int> face_to_node;

    std::size_t n() const { return adj.size(); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& nb : adj) twice += nb.size();
        return twice / 2;
    }

    bool has_edge(int u, int v) const {
        const auto& nb = adj[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    bool is_complete() const {
        for (const auto& nb : adj)
            if (nb.size() + 1 != n()) return false;
        return true;
    }

    std::size_t min_degree() const {
        std::size_t deg = n() == 0 ? 0 : adj[0].size();
        for (const auto& nb : adj) deg = std::min(deg, nb.size());
        return deg;
    }

    int node_of_face(int faceId) const { return face_to_node.at(faceId); }
};

namespace detail {

inline SkeletonGraph graph_from_nodes(std::vector<int> nodes, std::vector<int> dims,
                                      const std::set<std::pair<int, int>>& edges) {
    SkeletonGraph g;
    g.node_faces = std::move(nodes);
    g.node_dims = std::move(dims);
    g.adj.resize(g.node_faces.size());
    for (std::size_t i = 0; i < g.node_faces.size(); ++i)
        g.face_to_node.emplace(g.node_faces[i], static_cast<int>(i));
    for (const auto& [a, b] : edges) {
        int u = g.face_to_node.at(a), v = g.face_to_node.at(b);
        g.adj[static_cast<std::size_t>(u)].push_back(v);
        g.adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

}  // namespace detail

/// Builds a graph from a plain adjacency description (tests, CLI input).
inline SkeletonGraph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> nodes(n), dims(n, -1);
    for (std::size_t i = 0; i < n; ++i) nodes[i] = static_cast<int>(i);
    std::set<std::pair<int, int>> es;
    for (auto [a, b] : edges) {
        if (a == b) throw std::invalid_argument("loop edge");
        es.emplace(std::min(a, b), std::max(a, b));
    }
    return detail::graph_from_nodes(std::move(nodes), std::move(dims), es);
}

/// G_k(P): nodes are the k-faces, two adjacent iff some (k+1)-face contains
/// both. Computed by linking all co-covered pairs under each (k+1)-face.
/// For k = d-1 this is the complete graph on the facets.
inline SkeletonGraph skeleton_graph(const FaceLattice& L, int k) {
    if (k < 0 || k > L.dim - 1)
        throw std::invalid_argument("skeleton dimension k=" + std::to_string(k) +
                                    " out of range [0," + std::to_string(L.dim - 1) + "]");
    std::vector<int> nodes = L.faces_of_dim(k);
    std::vector<int> dims(nodes.size(), k);
    std::set<std::pair<int, int>> edges;
    for (int parent : L.faces_of_dim(k + 1)) {
        const auto& children = L.covers_down[static_cast<std::size_t>(parent)];
        for (std::size_t a = 0; a < children.size(); ++a)
            for (std::size_t b = a + 1; b < children.size(); ++b)
                edges.emplace(children[a], children[b]);
    }
    SkeletonGraph g = detail::graph_from_nodes(std::move(nodes), std::move(dims), edges);
    g.kind = SkeletonGraph::Kind::gk;
    g.k = k;
    return g;
}

/// (r,s)-incidence graph on the r-faces, adjacency via a common s-face.
/// incidence_graph(L, k, k+1) coincides with skeleton_graph(L, k).
inline SkeletonGraph incidence_graph(const FaceLattice& L, int r, int s) {
    if (!(0 <= r && r < s && s <= L.dim - 1))
        throw std::invalid_argument("incidence graph needs 0 <= r < s <= d-1");
    std::vector<int> nodes = L.faces_of_dim(r);
    std::vector<int> dims(nodes.size(), r);
    std::set<std::pair<int, int>> edges;
    for (int big : L.faces_of_dim(s)) {
        const VertexSet& bigSet = L.faces[static_cast<std::size_t>(big)].vertices;
        std::vector<int> inside;
        for (int f : nodes)
            if (L.faces[static_cast<std::size_t>(f)].vertices.is_subset_of(bigSet)) inside.push_back(f);
        for (std::size_t a = 0; a < inside.size(); ++a)
            for (std::size_t b = a + 1; b < inside.size(); ++b) edges.emplace(inside[a], inside[b]);
    }
    SkeletonGraph g = detail::graph_from_nodes(std::move(nodes), std::move(dims), edges);
    g.kind = SkeletonGraph::Kind::incidence;
    g.r = r;
    g.s = s;
    return g;
}

/// Gamma(Q): nodes are the edges of Q, adjacent iff they share an endpoint.
inline SkeletonGraph edge_adjacency_graph(const FaceLattice& L) {
    if (L.dim < 1) throw std::invalid_argument("edge adjacency graph needs dim >= 1");
    std::vector<int> nodes = L.faces_of_dim(1);
    std::vector<int> dims(nodes.size(), 1);
    std::set<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b) {
            const VertexSet& ea = L.faces[static_cast<std::size_t>(nodes[a])].vertices;
            const VertexSet& eb = L.faces[static_cast<std::size_t>(nodes[b])].vertices;
            if ((ea & eb).any()) edges.emplace(nodes[a], nodes[b]);
        }
    SkeletonGraph g = detail::graph_from_nodes(std::move(nodes), std::move(dims), edges);
    g.kind = SkeletonGraph::Kind::gamma;
    return g;
}

/// A walk as a node sequence; the edges of a simple graph are implied.
struct Walk {
    std::vector<int> nodes;  // node indices of the host graph

    bool valid_in(const SkeletonGraph& g) const {
        if (nodes.empty()) return false;
        for (int v : nodes)
            if (v < 0 || static_cast<std::size_t>(v) >= g.n()) return false;
        for (std::size_t i = 1; i < nodes.size(); ++i)
            if (!g.has_edge(nodes[i - 1], nodes[i])) return false;
        return true;
    }
};

/// Lifts a walk in G_k of the face figure at F (dimension r) to the walk in
/// G_{k+r+1}(L) through the corresponding faces containing F.
inline Walk lift_walk(const FaceLattice& L, int baseFace, const FaceLattice& figure,
                      const FaceMap& figureMap, int k, const Walk& w) {
    SkeletonGraph figGraph = skeleton_graph(figure, k);
    if (!w.valid_in(figGraph)) throw std::invalid_argument("input walk is not valid in the figure skeleton");
    const int r = L.faces[static_cast<std::size_t>(baseFace)].dim();
    SkeletonGraph host = skeleton_graph(L, k + r + 1);
    Walk lifted;
    for (int node : w.nodes) {
        int figFace = figGraph.node_faces[static_cast<std::size_t>(node)];
        lifted.nodes.push_back(host.node_of_face(figureMap.unmap(figFace)));
    }
    if (!lifted.valid_in(host)) throw std::logic_error("lifted walk failed adjacency check");
    return lifted;
}

struct DualityWitness {
    bool pass = false;
    std::vector<std::pair<int, int>> bijection;  // (d-2)-face id of L -> edge face id of dual
    std::string detail;
};

/// Checks the identification of the ridge graph with the edge-adjacency
/// graph of the polar dual: maps each (d-2)-face through the duality map
/// and verifies the map is a graph isomorphism onto Gamma(dual).
inline DualityWitness verify_duality_iso(const FaceLattice& L) {
    if (L.dim < 2) throw std::invalid_argument("duality isomorphism check needs dim >= 2");
    auto [dual, map] = polar_dual(L);
    SkeletonGraph ridge = skeleton_graph(L, L.dim - 2);
    SkeletonGraph gamma = edge_adjacency_graph(dual);

    DualityWitness w;
    if (ridge.n() != gamma.n()) {
        w.detail = "node counts differ";
        return w;
    }
    for (int f : ridge.node_faces) {
        int img = map.map(f);
        if (dual.faces[static_cast<std::size_t>(img)].dim() != 1) {
            w.detail = "image of ridge " + std::to_string(f) + " is not a dual edge";
            return w;
        }
        w.bijection.emplace_back(f, img);
    }
    if (ridge.edge_count() != gamma.edge_count()) {
        w.detail = "edge counts differ";
        return w;
    }
    for (std::size_t u = 0; u < ridge.n(); ++u)
        for (int v : ridge.adj[u]) {
            int gu = gamma.node_of_face(map.map(ridge.node_faces[u]));
            int gv = gamma.node_of_face(map.map(ridge.node_faces[static_cast<std::size_t>(v)]));
            if (!gamma.has_edge(gu, gv)) {
                w.detail = "adjacency not preserved";
                return w;
            }
        }
    w.pass = true;
    return w;
}

/// DOT export with "dim:vertexset" labels, deterministic node and edge order.
inline std::string to_dot(const SkeletonGraph& g, const FaceLattice* source = nullptr) {
    std::ostringstream os;
    os << "graph skeleton {\n";
    for (std::size_t i = 0; i < g.n(); ++i) {
        os << "  n" << i << " [label=\"" << g.node_dims[i] << ":";
        if (source)
            os << vertex_set_to_string(source->faces[static_cast<std::size_t>(g.node_faces[i])].vertices);
        else
            os << g.node_faces[i];
        os << "\"];\n";
    }
    for (std::size_t u = 0; u < g.n(); ++u)
        for (int v : g.adj[u])
            if (static_cast<std::size_t>(v) > u) os << "  n" << u << " -- n" << v << ";\n";
    os << "}\n";
    return os.str();
}

inline nlohmann::json graph_to_json(const SkeletonGraph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["faces"] = g.node_faces;
    j["dims"] = g.node_dims;
    j["adjacency"] = g.adj;
    return j;
}

inline SkeletonGraph graph_from_json(const nlohmann::json& j) {
    SkeletonGraph g;
    std::size_t n = j.at("n").get<std::size_t>();
    g.adj = j.at("adjacency").get<std::vector<std::vector<int>>>();
    if (g.adj.size() != n) throw std::invalid_argument("adjacency size mismatch");
    if (j.contains("faces"))
        g.node_faces = j.at("faces").get<std::vector<int>>();
    else {
        g.node_faces.resize(n);
        for (std::size_t i = 0; i < n; ++i) g.node_faces[i] = static_cast<int>(i);
    }
    if (j.contains("dims"))
        g.node_dims = j.at("dims").get<std::vector<int>>();
    else
        g.node_dims.assign(n, -1);
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    for (std::size_t i = 0; i < n; ++i) g.face_to_node.emplace(g.node_faces[i], static_cast<int>(i));
    return g;
}

}  // namespace sklab
