#pragma once

#include "sklab/constructors.hpp"
#include "sklab/rational.hpp"
#include "sklab/skeleton.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sklab {

/// Connectivity number with a Menger witness: a minimum vertex cut (absent
/// for complete graphs) and, for the pair attaining the minimum, an equal
/// number of internally vertex-disjoint paths.
struct ConnectivityCertificate {
    int kappa = 0;
    std::optional<std::vector<int>> min_cut;      // node indices
    std::optional<std::pair<int, int>> pair;      // (s, t) attaining the minimum
    std::vector<std::vector<int>> paths;          // node sequences s..t
};

namespace detail {

// Unit-capacity max-flow (Dinic) on the node-split digraph. Node v becomes
// v_in = 2v and v_out = 2v+1 joined by a capacity-1 arc; adjacency arcs get
// capacity n+1 so every minimum cut consists of split arcs, which is what
// makes cut extraction read off a vertex cut. Arcs are added in node-id
// order, so flows and certificates are reproducible.
class NodeSplitFlow {
public:
    explicit NodeSplitFlow(const SkeletonGraph& g) : g_(g), n_(g.n()) {
        head_.assign(2 * n_, {});
        const int big = static_cast<int>(n_) + 1;
        for (std::size_t v = 0; v < n_; ++v) add_arc(in(v), out(v), 1);
        for (std::size_t u = 0; u < n_; ++u)
            for (int v : g.adj[u]) add_arc(out(u), in(static_cast<std::size_t>(v)), big);
    }

    static int in(std::size_t v) { return static_cast<int>(2 * v); }
    static int out(std::size_t v) { return static_cast<int>(2 * v + 1); }

    int max_flow(int s, int t) {
        for (auto& a : arcs_) a.flow = 0;
        source_ = out(static_cast<std::size_t>(s));
        sink_ = in(static_cast<std::size_t>(t));
        int total = 0;
        while (bfs_levels()) {
            iter_.assign(head_.size(), 0);
            while (int pushed = dfs_block(source_, static_cast<int>(n_) + 1)) total += pushed;
        }
        return total;
    }

    /// Split arcs saturated across the BFS-reachable boundary of the final
    /// residual graph; these are exactly a minimum vertex cut.
    std::vector<int> extract_cut() const {
        std::vector<bool> reach(head_.size(), false);
        std::queue<int> q;
        reach[static_cast<std::size_t>(source_)] = true;
        q.push(source_);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int id : head_[static_cast<std::size_t>(u)]) {
                const Arc& a = arcs_[static_cast<std::size_t>(id)];
                if (a.flow < a.cap && !reach[static_cast<std::size_t>(a.to)]) {
                    reach[static_cast<std::size_t>(a.to)] = true;
                    q.push(a.to);
                }
            }
        }
        std::vector<int> cut;
        for (std::size_t v = 0; v < n_; ++v)
            if (reach[static_cast<std::size_t>(in(v))] && !reach[static_cast<std::size_t>(out(v))])
                cut.push_back(static_cast<int>(v));
        return cut;
    }

    /// Walks the unit flow from the source; every arc carries 0/1 flow and
    /// node capacities forbid revisits, so each walk is a simple path.
    std::vector<std::vector<int>> decompose_paths(int flowValue) const {
        std::vector<int> used(arcs_.size(), 0);
        std::vector<std::vector<int>> paths;
        for (int p = 0; p < flowValue; ++p) {
            std::vector<int> path;
            int u = source_;
            path.push_back(u / 2);
            while (u != sink_) {
                bool advanced = false;
                for (int id : head_[static_cast<std::size_t>(u)]) {
                    const Arc& a = arcs_[static_cast<std::size_t>(id)];
                    if (id % 2 == 0 && a.flow - used[static_cast<std::size_t>(id)] > 0) {
                        used[static_cast<std::size_t>(id)] += 1;
                        u = a.to;
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) throw std::logic_error("flow decomposition stuck");
                if (u % 2 == 0 && u / 2 != path.back()) path.push_back(u / 2);
            }
            paths.push_back(std::move(path));
        }
        return paths;
    }

private:
    struct Arc {
        int to;
        int cap;
        int flow;
    };

    void add_arc(int from, int to, int cap) {
        head_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap, 0});
        head_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0, 0});  // residual
    }

    bool bfs_levels() {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        level_[static_cast<std::size_t>(source_)] = 0;
        q.push(source_);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int id : head_[static_cast<std::size_t>(u)]) {
                const Arc& a = arcs_[static_cast<std::size_t>(id)];
                if (a.flow < a.cap && level_[static_cast<std::size_t>(a.to)] < 0) {
                    level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(u)] + 1;
                    q.push(a.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(sink_)] >= 0;
    }

    int dfs_block(int u, int limit) {
        if (u == sink_) return limit;
        for (std::size_t& i = iter_[static_cast<std::size_t>(u)]; i < head_[static_cast<std::size_t>(u)].size(); ++i) {
            int id = head_[static_cast<std::size_t>(u)][i];
            Arc& a = arcs_[static_cast<std::size_t>(id)];
            if (a.flow >= a.cap || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(u)] + 1)
                continue;
            int pushed = dfs_block(a.to, std::min(limit, a.cap - a.flow));
            if (pushed > 0) {
                a.flow += pushed;
                arcs_[static_cast<std::size_t>(id ^ 1)].flow -= pushed;
                return pushed;
            }
        }
        return 0;
    }

    const SkeletonGraph& g_;
    std::size_t n_;
    std::vector<std::vector<int>> head_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
    int source_ = 0, sink_ = 0;
};

}  // namespace detail

struct DeletionResult {
    bool connected = true;
    std::vector<std::vector<int>> components;  // node indices of G minus V
};

/// Deletes the node set V and reports the components of what remains.
/// Graphs with at most one surviving node count as connected.
inline DeletionResult delete_and_check(const SkeletonGraph& g, const std::vector<int>& removed) {
    std::vector<bool> gone(g.n(), false);
    for (int v : removed) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.n())
            throw std::invalid_argument("unknown node id " + std::to_string(v));
        gone[static_cast<std::size_t>(v)] = true;
    }
    DeletionResult res;
    std::vector<bool> seen(g.n(), false);
    for (std::size_t start = 0; start < g.n(); ++start) {
        if (gone[start] || seen[start]) continue;
        std::vector<int> comp;
        std::queue<std::size_t> q;
        q.push(start);
        seen[start] = true;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            comp.push_back(static_cast<int>(u));
            for (int v : g.adj[u])
                if (!gone[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    q.push(static_cast<std::size_t>(v));
                }
        }
        std::sort(comp.begin(), comp.end());
        res.components.push_back(std::move(comp));
    }
    res.connected = res.components.size() <= 1;
    return res;
}

namespace detail {

inline void verify_certificate(const SkeletonGraph& g, const ConnectivityCertificate& cert) {
    if (!cert.pair) return;
    auto [s, t] = *cert.pair;
    if (!cert.min_cut || static_cast<int>(cert.min_cut->size()) != cert.kappa)
        throw std::logic_error("certificate cut size does not match kappa");
    for (int v : *cert.min_cut)
        if (v == s || v == t) throw std::logic_error("cut contains an endpoint");
    auto after = delete_and_check(g, *cert.min_cut);
    bool separated = false;
    for (const auto& comp : after.components) {
        bool hasS = std::binary_search(comp.begin(), comp.end(), s);
        bool hasT = std::binary_search(comp.begin(), comp.end(), t);
        if (hasS && hasT) throw std::logic_error("cut fails to separate the witness pair");
        if (hasS || hasT) separated = true;
    }
    if (!separated && cert.kappa > 0) throw std::logic_error("witness pair missing after deletion");
    if (static_cast<int>(cert.paths.size()) != cert.kappa)
        throw std::logic_error("path count does not match kappa");
    std::vector<bool> interior(g.n(), false);
    for (const auto& path : cert.paths) {
        if (path.front() != s || path.back() != t) throw std::logic_error("path endpoints wrong");
        for (std::size_t i = 1; i < path.size(); ++i)
            if (!g.has_edge(path[i - 1], path[i])) throw std::logic_error("path uses a non-edge");
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            if (interior[static_cast<std::size_t>(path[i])])
                throw std::logic_error("paths share an interior node");
            interior[static_cast<std::size_t>(path[i])] = true;
        }
    }
}

}  // namespace detail

/// Exact vertex connectivity with a re-verified Menger certificate.
/// kappa is the minimum over non-adjacent pairs of the max number of
/// internally disjoint paths; complete graphs get kappa = n-1 by convention
/// with no cut emitted, and the single-node graph gets kappa = 0.
inline ConnectivityCertificate vertex_connectivity(const SkeletonGraph& g) {
    const std::size_t n = g.n();
    if (n == 0) throw std::invalid_argument("empty graph");
    ConnectivityCertificate cert;
    if (n == 1) return cert;  // kappa 0
    if (g.is_complete()) {
        cert.kappa = static_cast<int>(n) - 1;
        return cert;
    }

    // Candidate pairs: a minimum-degree node s against its non-neighbors,
    // then non-adjacent pairs among the neighbors of s. Any minimum cut
    // either avoids s (then s sees across it) or contains s (then two of
    // its neighbors lie on opposite sides).
    std::size_t s = 0;
    for (std::size_t v = 1; v < n; ++v)
        if (g.adj[v].size() < g.adj[s].size()) s = v;
    std::vector<std::pair<int, int>> candidates;
    for (std::size_t t = 0; t < n; ++t)
        if (t != s && !g.has_edge(static_cast<int>(s), static_cast<int>(t)))
            candidates.emplace_back(static_cast<int>(s), static_cast<int>(t));
    const auto& nb = g.adj[s];
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
            if (!g.has_edge(nb[a], nb[b])) candidates.emplace_back(nb[a], nb[b]);

    detail::NodeSplitFlow flow(g);
    int best = static_cast<int>(n);  // above any possible kappa
    std::pair<int, int> bestPair{-1, -1};
    for (auto [u, v] : candidates) {
        int f = flow.max_flow(u, v);
        if (f < best) {
            best = f;
            bestPair = {u, v};
        }
    }
    cert.kappa = best;
    cert.pair = bestPair;
    flow.max_flow(bestPair.first, bestPair.second);  // recompute for the witness pair
    cert.min_cut = flow.extract_cut();
    cert.paths = flow.decompose_paths(best);
    detail::verify_certificate(g, cert);
    return cert;
}

/// m-connectedness: at least m+1 nodes and kappa >= m. Tiny graphs are
/// cross-checked by exhaustively deleting every subset of size <= m-1.
inline bool is_m_connected(const SkeletonGraph& g, int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    bool result = g.n() >= static_cast<std::size_t>(m) + 1 && vertex_connectivity(g).kappa >= m;
    if (g.n() <= 12) {
        bool exhaustive = g.n() >= static_cast<std::size_t>(m) + 1;
        for (std::size_t mask = 0; exhaustive && mask < (std::size_t{1} << g.n()); ++mask) {
            std::vector<int> del;
            for (std::size_t v = 0; v < g.n(); ++v)
                if (mask & (std::size_t{1} << v)) del.push_back(static_cast<int>(v));
            if (static_cast<int>(del.size()) > m - 1) continue;
            if (!delete_and_check(g, del).connected) exhaustive = false;
        }
        if (exhaustive != result) throw std::logic_error("m-connectivity cross-check disagrees with max-flow");
    }
    return result;
}

class affine_precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Strengthened Balinski check: given vertices V of exact affine dimension
/// at most d-2, the vertex graph minus V must stay connected. A higher
/// affine dimension is a precondition violation, not a test failure.
inline bool balinski_affine_check(const CoordinatizedPolytope& P, const std::vector<int>& vertices) {
    if (!P.coords) throw std::invalid_argument("polytope carries no coordinates");
    const int d = P.lattice.dim;
    std::vector<std::vector<Rational>> points;
    for (int v : vertices) {
        if (v < 0 || static_cast<std::size_t>(v) >= P.lattice.n_vertices)
            throw std::invalid_argument("vertex index out of range");
        points.push_back((*P.coords)[static_cast<std::size_t>(v)]);
    }
    int adim = affine_dimension(points);
    if (adim > d - 2)
        throw affine_precondition_error("affine dimension " + std::to_string(adim) +
                                        " exceeds d-2 = " + std::to_string(d - 2));
    SkeletonGraph g0 = skeleton_graph(P.lattice, 0);
    std::vector<int> nodes;
    for (int v : vertices)
        nodes.push_back(g0.node_of_face(*P.lattice.find(make_vertex_set(P.lattice.n_vertices, {v}))));
    return delete_and_check(g0, nodes).connected;
}

}  // namespace sklab
