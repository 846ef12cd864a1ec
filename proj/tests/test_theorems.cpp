#include "sklab/sklab.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sklab;

TEST_CASE("theorem_values: spot values") {
    auto v = theorem_values(1, 4);
    CHECK(v.m_k_d == 6);
    CHECK(v.n_k_d == 6);
    CHECK(v.sallee_lower == 5);
    CHECK(v.sallee_upper == 6);

    CHECK(theorem_values(2, 4).m_k_d == 4);   // k = d-2: drops to d
    CHECK(theorem_values(2, 4).n_k_d == 6);
    CHECK(theorem_values(0, 5).m_k_d == 5);
    CHECK(theorem_values(0, 5).annotation == "Balinski");
    CHECK(theorem_values(4, 5).annotation == "trivial");
    CHECK(theorem_values(3, 10).m_k_d == 28);

    CHECK_THROWS_AS(theorem_values(-1, 4), std::invalid_argument);
    CHECK_THROWS_AS(theorem_values(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(theorem_values(0, 0), std::invalid_argument);
}

TEST_CASE("theorem_values: consistency across the whole range") {
    for (int d = 1; d <= 50; ++d)
        for (int k = 0; k <= d - 1; ++k) {
            auto v = theorem_values(k, d);
            CHECK(v.sallee_lower <= v.m_k_d);
            CHECK(v.m_k_d <= v.sallee_upper);
            CHECK(v.n_k_d == static_cast<long long>(k + 1) * (d - k));
            if (k == 0) CHECK(v.m_k_d == d);
            if (k == d - 1) CHECK(v.m_k_d == d);
            if (k == d - 2) CHECK(v.m_k_d == d);
            if (k != d - 2) CHECK(v.m_k_d == v.n_k_d);
        }
}

TEST_CASE("verify_polytope: simplices are tight everywhere") {
    for (int d = 3; d <= 5; ++d) {
        VerificationReport rep = verify_polytope(simplex(d).lattice);
        CHECK(rep.all_pass());
        for (const auto& row : rep.rows) {
            if (row.check != "skeleton") continue;
            CHECK(row.kappa == static_cast<long long>(row.k + 1) * (d - row.k));
            if (row.k != d - 2) CHECK(row.tight);
        }
    }
}

TEST_CASE("verify_polytope: hypercube(4)") {
    VerificationReport rep = verify_polytope(hypercube(4).lattice);
    CHECK(rep.all_pass());
    REQUIRE(rep.rows.size() == 6);  // k = 0..3, face_count, duality
    CHECK(rep.rows[0].kappa == 4);  // vertex graph of the 4-cube
    for (const auto& row : rep.rows)
        if (row.check == "skeleton") CHECK(row.kappa >= theorem_values(row.k, 4).m_k_d);
}

TEST_CASE("verify_polytope: dual of a prism") {
    auto [dual, map] = polar_dual(prism_over_simplex(4).lattice);
    VerificationReport rep = verify_polytope(dual);
    CHECK(rep.all_pass());
}

TEST_CASE("verify_complex") {
    SECTION("glued simplices satisfy every asserted bound") {
        VerificationReport rep = verify_complex(glued_simplices(4));
        CHECK(rep.all_pass());
        // the top row is informational: kappa drops to 1 there
        const auto& top = rep.rows.back();
        CHECK(top.k == 3);
        CHECK(top.informational);
        CHECK(top.kappa == 1);
    }
    SECTION("boundary complexes inherit the polytope bounds") {
        VerificationReport rep = verify_complex(boundary_complex(hypercube(3).lattice));
        CHECK(rep.all_pass());
    }
    SECTION("impure input is rejected") {
        IncidenceMatrix tri;
        tri.n_vertices = 5;
        tri.facets = {{0, 1}, {1, 2}, {2, 0}};
        IncidenceMatrix seg;
        seg.n_vertices = 5;
        seg.facets = {{3}, {4}};
        CellComplex C = build_complex(5, {tri, seg});
        CHECK_THROWS_AS(verify_complex(C), std::invalid_argument);
    }
}

TEST_CASE("reports are deterministic and serializable") {
    VerificationReport a = verify_polytope(cross_polytope(3).lattice);
    VerificationReport b = verify_polytope(cross_polytope(3).lattice);
    CHECK(report_to_table(a) == report_to_table(b));
    CHECK(report_to_json(a).dump() == report_to_json(b).dump());
    nlohmann::json j = report_to_json(a);
    CHECK(j.at("all_pass").get<bool>());
    CHECK(j.at("rows").size() == a.rows.size());
}

TEST_CASE("default_corpus is well-formed") {
    Corpus corpus = default_corpus();
    CHECK(corpus.polytopes.size() == 52);  // 26 primal + 26 duals
    CHECK(corpus.complexes.size() == 9);
    for (const auto& P : corpus.polytopes) CHECK(validate_polytopal(P.lattice).ok());
    for (const auto& C : corpus.complexes) {
        auto rep = complex_checks(C);
        CHECK(rep.pure);
        CHECK(rep.strongly_connected);
    }
}
