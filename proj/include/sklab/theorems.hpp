#pragma once

#include "sklab/complex.hpp"
#include "sklab/connectivity.hpp"
#include "sklab/constructors.hpp"
#include "sklab/lattice_checks.hpp"
#include "sklab/lattice_ops.hpp"
#include "sklab/skeleton.hpp"

#include <nlohmann/json.hpp>

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sklab {

/// The connectivity values attached to a (k, d) pair: the sharp bound
/// m_k(d), the general degree count n_k(d) = (k+1)(d-k), and the earlier
/// incidence-graph bounds n_k(d) - k <= m_k(d) <= n_k(d).
struct TheoremValues {
    int k = 0, d = 0;
    long long m_k_d = 0;
    long long n_k_d = 0;
    long long sallee_lower = 0;
    long long sallee_upper = 0;
    std::string annotation;  // "Balinski" for k = 0, "trivial" for k = d-1
};

inline TheoremValues theorem_values(int k, int d) {
    if (d < 1 || k < 0 || k > d - 1)
        throw std::invalid_argument("need 0 <= k <= d-1, got k=" + std::to_string(k) +
                                    " d=" + std::to_string(d));
    TheoremValues v;
    v.k = k;
    v.d = d;
    v.n_k_d = static_cast<long long>(k + 1) * (d - k);
    v.m_k_d = (k == d - 2) ? d : v.n_k_d;
    v.sallee_lower = v.n_k_d - k;
    v.sallee_upper = v.n_k_d;
    if (k == 0) v.annotation = "Balinski";
    else if (k == d - 1) v.annotation = "trivial";
    return v;
}

struct VerificationRow {
    std::string subject;   // polytope/complex name
    int k = -1;
    std::string check;     // "skeleton", "face_count", "duality", ...
    long long nodes = 0;
    long long kappa = -1;
    long long min_degree = -1;
    long long required = 0;
    bool informational = false;
    bool pass = false;
    bool tight = false;    // kappa equals the simplex value (k+1)(d-k)
};

struct VerificationReport {
    std::string subject;
    std::vector<VerificationRow> rows;

    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.informational && !r.pass) return false;
        return true;
    }
};

/// Runs every bound the paper states against one polytope: for each k the
/// connectivity lower bound m_k(d) and the (k+1)(d-k) degree bound, plus a
/// face-count row and the ridge/dual-edge-graph isomorphism row. Exact
/// kappa values are recorded as data; only the inequalities are asserted.
inline VerificationReport verify_polytope(const FaceLattice& L) {
    VerificationReport rep;
    rep.subject = L.name;
    const int d = L.dim;
    for (int k = 0; k <= d - 1; ++k) {
        TheoremValues tv = theorem_values(k, d);
        SkeletonGraph g = skeleton_graph(L, k);
        ConnectivityCertificate cert = vertex_connectivity(g);
        VerificationRow row;
        row.subject = L.name;
        row.k = k;
        row.check = "skeleton";
        row.nodes = static_cast<long long>(g.n());
        row.kappa = cert.kappa;
        row.min_degree = static_cast<long long>(g.min_degree());
        row.required = tv.m_k_d;
        row.pass = cert.kappa >= tv.m_k_d && row.min_degree >= tv.n_k_d &&
                   static_cast<long long>(g.n()) >= tv.m_k_d + 1;
        row.tight = cert.kappa == tv.n_k_d;
        rep.rows.push_back(row);
    }
    {
        VerificationRow row;
        row.subject = L.name;
        row.check = "face_count";
        bool pass = true;
        for (const auto& fc : check_face_count_bound(L)) pass = pass && fc.pass;
        row.pass = pass;
        rep.rows.push_back(row);
    }
    if (d >= 2) {
        VerificationRow row;
        row.subject = L.name;
        row.check = "duality";
        row.pass = verify_duality_iso(L).pass;
        rep.rows.push_back(row);
    }
    return rep;
}

/// Bounds for a pure, strongly connected polyhedral complex: d-connectivity
/// of the vertex graph, (k+1)(d-k) for k <= d-3, d for k = d-2, and an
/// informational row at k = d-1 where the bound provably fails to extend.
inline VerificationReport verify_complex(const CellComplex& C) {
    ComplexReport checks = complex_checks(C);
    if (!checks.pure || !checks.strongly_connected)
        throw std::invalid_argument("complex \"" + C.name + "\" is not pure and strongly connected");
    VerificationReport rep;
    rep.subject = C.name;
    const int d = C.dim;
    for (int k = 0; k <= d - 1; ++k) {
        long long required = 0;
        bool informational = false;
        if (k == 0)
            required = d;
        if (k <= d - 3) required = std::max(required, static_cast<long long>(k + 1) * (d - k));
        if (k == d - 2) required = std::max(required, static_cast<long long>(d));
        if (required == 0) informational = true;  // k = d-1, no bound asserted
        SkeletonGraph g = complex_skeleton_graph(C, k);
        ConnectivityCertificate cert = vertex_connectivity(g);
        VerificationRow row;
        row.subject = C.name;
        row.k = k;
        row.check = "complex_skeleton";
        row.nodes = static_cast<long long>(g.n());
        row.kappa = cert.kappa;
        row.min_degree = static_cast<long long>(g.min_degree());
        row.required = required;
        row.informational = informational;
        row.pass = informational ||
                   (cert.kappa >= required && static_cast<long long>(g.n()) >= required + 1);
        rep.rows.push_back(row);
    }
    return rep;
}

inline nlohmann::json report_to_json(const VerificationReport& rep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows) {
        nlohmann::json j{{"subject", r.subject}, {"check", r.check}, {"pass", r.pass}};
        if (r.k >= 0) {
            j["k"] = r.k;
            j["nodes"] = r.nodes;
            j["kappa"] = r.kappa;
            j["min_degree"] = r.min_degree;
            j["required"] = r.required;
            j["informational"] = r.informational;
            j["tight"] = r.tight;
        }
        rows.push_back(std::move(j));
    }
    return nlohmann::json{{"subject", rep.subject}, {"all_pass", rep.all_pass()}, {"rows", std::move(rows)}};
}

inline std::string report_to_table(const VerificationReport& rep) {
    std::ostringstream os;
    os << rep.subject << "\n";
    for (const auto& r : rep.rows) {
        os << "  " << std::left << std::setw(18) << r.check;
        if (r.k >= 0)
            os << " k=" << r.k << " nodes=" << r.nodes << " kappa=" << r.kappa
               << " mindeg=" << r.min_degree << " required>=" << r.required;
        os << "  " << (r.informational ? "info" : (r.pass ? "pass" : "FAIL")) << "\n";
    }
    return os.str();
}

/// The polytope and complex corpus every suite runs over: the standard
/// families, cyclic stress cases, prisms/pyramids/products, the polar dual
/// of each polytope, glued simplices and boundary complexes.
struct Corpus {
    std::vector<CoordinatizedPolytope> polytopes;
    std::vector<CellComplex> complexes;
};

inline Corpus default_corpus() {
    Corpus c;
    for (int d = 2; d <= 6; ++d) c.polytopes.push_back(simplex(d));
    for (int d = 2; d <= 5; ++d) c.polytopes.push_back(hypercube(d));
    for (int d = 2; d <= 5; ++d) c.polytopes.push_back(cross_polytope(d));
    for (int n = 6; n <= 8; ++n)
        for (int d = 3; d <= 4; ++d) c.polytopes.push_back({cyclic(n, d), std::nullopt});
    for (int d = 3; d <= 6; ++d) c.polytopes.push_back(prism_over_simplex(d));
    c.polytopes.push_back(pyramid(hypercube(2)));
    c.polytopes.push_back(pyramid(simplex(3)));
    c.polytopes.push_back(product(simplex(2), simplex(2)));

    const std::size_t base = c.polytopes.size();
    for (std::size_t i = 0; i < base; ++i) {
        auto [dual, map] = polar_dual(c.polytopes[i].lattice);
        c.polytopes.push_back({std::move(dual), std::nullopt});
    }
    for (int d = 2; d <= 5; ++d) c.complexes.push_back(glued_simplices(d));
    for (int d = 3; d <= 5; ++d) c.complexes.push_back(boundary_complex(simplex(d).lattice));
    for (int d = 3; d <= 4; ++d) c.complexes.push_back(boundary_complex(hypercube(d).lattice));
    return c;
}

}  // namespace sklab
