// Command-line front end: polytope generators, lattice operations, skeleton
// graphs, connectivity certificates and the full verification suites.

#include "sklab/sklab.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_output(const std::string& outPath, const std::string& text) {
    if (outPath.empty() || outPath == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(outPath);
    if (!out) throw std::runtime_error("cannot write " + outPath);
    out << text;
}

json polytope_to_json(const sklab::CoordinatizedPolytope& P) {
    json j{{"name", P.lattice.name},
           {"n_vertices", P.lattice.n_vertices},
           {"facets", P.lattice.coatom_sets()}};
    if (P.coords) {
        json coords = json::array();
        for (const auto& row : *P.coords) {
            json r = json::array();
            for (const auto& x : row) r.push_back(sklab::rational_to_string(x));
            coords.push_back(std::move(r));
        }
        j["coords"] = std::move(coords);
    }
    return j;
}

sklab::CoordinatizedPolytope polytope_from_json(const json& j) {
    sklab::IncidenceMatrix inc = j.get<sklab::IncidenceMatrix>();
    sklab::CoordinatizedPolytope P{sklab::build_lattice(inc), std::nullopt};
    if (j.contains("coords")) {
        std::vector<std::vector<sklab::Rational>> coords;
        for (const auto& row : j.at("coords")) {
            std::vector<sklab::Rational> r;
            for (const auto& x : row)
                r.push_back(x.is_string() ? sklab::parse_rational(x.get<std::string>())
                                          : sklab::Rational(x.get<long long>()));
            coords.push_back(std::move(r));
        }
        P.coords = std::move(coords);
    }
    return P;
}

sklab::CoordinatizedPolytope load_polytope(const std::string& path) {
    return polytope_from_json(read_json_file(path));
}

std::string format_graph(const sklab::SkeletonGraph& g, const sklab::FaceLattice* src,
                         const std::string& format) {
    if (format == "dot") return sklab::to_dot(g, src);
    return sklab::graph_to_json(g).dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skeleton-lab: face lattices, skeleton graphs and connectivity of convex polytopes"};
    app.require_subcommand(1);

    std::string family, outPath, inPath, graphPath, format = "json", of1, of2;
    int dimArg = 3, nArg = 0, kArg = 0, rArg = 0, sArg = 1;
    bool asJson = false, certify = false;
    std::vector<int> nodeList, vertexList, faceVertices;

    auto* build = app.add_subcommand("build", "generate a polytope and write the JSON format");
    build->add_option("--family", family,
                      "simplex|hypercube|cross_polytope|cyclic|product|pyramid")->required();
    build->add_option("--d", dimArg, "dimension");
    build->add_option("--n", nArg, "vertex count (cyclic)");
    build->add_option("--of", of1, "input polytope file (product/pyramid)");
    build->add_option("--and", of2, "second input polytope file (product)");
    build->add_option("--out", outPath, "output file (default stdout)");

    auto* lattice = app.add_subcommand("lattice", "face lattice operations");
    lattice->require_subcommand(1);
    auto* lValidate = lattice->add_subcommand("validate", "polytopality checks");
    auto* lFvector = lattice->add_subcommand("fvector", "print the f-vector");
    auto* lDual = lattice->add_subcommand("dual", "polar dual as JSON polytope");
    auto* lFigure = lattice->add_subcommand("figure", "face figure at a face");
    auto* lDump = lattice->add_subcommand("dump", "one face per line: rank, vertices");
    for (auto* sub : {lValidate, lFvector, lDual, lFigure, lDump})
        sub->add_option("--in", inPath, "polytope JSON file")->required();
    lFigure->add_option("--face", faceVertices, "vertex indices of the base face")->required();
    lDual->add_option("--out", outPath);
    lFigure->add_option("--out", outPath);
    lDump->add_option("--out", outPath);

    auto* graph = app.add_subcommand("graph", "skeleton and incidence graphs");
    graph->require_subcommand(1);
    auto* gSkeleton = graph->add_subcommand("skeleton", "G_k(P)");
    auto* gIncidence = graph->add_subcommand("incidence", "(r,s)-incidence graph");
    auto* gGamma = graph->add_subcommand("gamma", "edge adjacency graph");
    auto* gExport = graph->add_subcommand("export", "G_k(P) in the JSON graph format");
    for (auto* sub : {gSkeleton, gIncidence, gGamma, gExport}) {
        sub->add_option("--in", inPath, "polytope JSON file")->required();
        sub->add_option("--format", format, "dot|json");
        sub->add_option("--out", outPath);
    }
    gSkeleton->add_option("-k,--k", kArg, "face dimension")->required();
    gExport->add_option("-k,--k", kArg, "face dimension")->required();
    gIncidence->add_option("-r,--r", rArg)->required();
    gIncidence->add_option("-s,--s", sArg)->required();

    auto* conn = app.add_subcommand("connectivity", "vertex connectivity of a graph file");
    conn->add_option("--graph", graphPath, "graph JSON file")->required();
    conn->add_flag("--certify", certify, "emit the cut and disjoint paths");

    auto* del = app.add_subcommand("delete", "delete nodes and report components");
    del->add_option("--graph", graphPath, "graph JSON file")->required();
    del->add_option("--nodes", nodeList, "node indices to delete")->required()->delimiter(',');

    auto* balinski = app.add_subcommand("balinski", "strengthened Balinski check");
    balinski->add_option("--in", inPath, "polytope JSON file with coords")->required();
    balinski->add_option("--vertices", vertexList, "vertex subset to delete")->required()->delimiter(',');

    auto* complex = app.add_subcommand("complex", "polyhedral cell complexes");
    complex->require_subcommand(1);
    auto* cBuild = complex->add_subcommand("build", "build and summarize a complex");
    auto* cCheck = complex->add_subcommand("check", "purity and strong connectivity");
    auto* cSkeleton = complex->add_subcommand("skeleton", "G_k(C)");
    for (auto* sub : {cBuild, cCheck, cSkeleton})
        sub->add_option("--in", inPath, "complex JSON file")->required();
    cSkeleton->add_option("-k,--k", kArg)->required();
    cSkeleton->add_option("--format", format, "dot|json");
    cSkeleton->add_option("--out", outPath);

    auto* verify = app.add_subcommand("verify", "run the paper's bounds");
    verify->require_subcommand(1);
    auto* vPolytope = verify->add_subcommand("polytope", "all bounds for one polytope");
    auto* vComplex = verify->add_subcommand("complex", "all bounds for one complex");
    auto* vAll = verify->add_subcommand("all", "the whole default corpus");
    vPolytope->add_option("--in", inPath)->required();
    vComplex->add_option("--in", inPath)->required();
    for (auto* sub : {vPolytope, vComplex, vAll}) sub->add_flag("--json", asJson);

    auto* values = app.add_subcommand("values", "connectivity formulas for (k, d)");
    values->add_option("--k", kArg)->required();
    values->add_option("--d", dimArg)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            sklab::CoordinatizedPolytope P;
            if (family == "cyclic")
                P = {sklab::cyclic(nArg, dimArg), std::nullopt};
            else if (family == "product")
                P = sklab::product(load_polytope(of1), load_polytope(of2));
            else if (family == "pyramid")
                P = sklab::pyramid(load_polytope(of1));
            else
                P = sklab::standard_family(family, dimArg);
            write_output(outPath, polytope_to_json(P).dump(2) + "\n");
        } else if (*lValidate) {
            auto L = load_polytope(inPath).lattice;
            auto rep = sklab::validate_polytopal(L);
            std::cout << "graded=" << rep.graded << " atoms=" << rep.atoms_ok
                      << " coatoms=" << rep.coatoms_ok
                      << " intersection_closed=" << rep.intersection_closed
                      << " diamond=" << rep.diamond << " euler=" << rep.euler
                      << " face_count_bound=" << rep.face_count_bound << "\n";
            for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
            std::cout << (rep.ok() ? "valid polytope lattice" : "NOT a polytope lattice") << "\n";
            return rep.ok() ? 0 : kExitFail;
        } else if (*lFvector) {
            auto L = load_polytope(inPath).lattice;
            std::cout << "dim " << L.dim << " f = (";
            auto f = L.f_vector();
            for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? "," : "") << f[i];
            std::cout << ")\n";
        } else if (*lDual) {
            auto P = load_polytope(inPath);
            auto [dual, map] = sklab::polar_dual(P.lattice);
            write_output(outPath, polytope_to_json({std::move(dual), std::nullopt}).dump(2) + "\n");
        } else if (*lFigure) {
            auto P = load_polytope(inPath);
            auto id = P.lattice.find(sklab::make_vertex_set(P.lattice.n_vertices, faceVertices));
            if (!id) throw std::runtime_error("no such face");
            auto [figure, map] = sklab::face_figure(P.lattice, *id);
            write_output(outPath, polytope_to_json({std::move(figure), std::nullopt}).dump(2) + "\n");
        } else if (*lDump) {
            write_output(outPath, sklab::dump_lattice(load_polytope(inPath).lattice));
        } else if (*gSkeleton || *gExport) {
            auto P = load_polytope(inPath);
            auto g = sklab::skeleton_graph(P.lattice, kArg);
            write_output(outPath, format_graph(g, &P.lattice, *gExport ? "json" : format));
        } else if (*gIncidence) {
            auto P = load_polytope(inPath);
            auto g = sklab::incidence_graph(P.lattice, rArg, sArg);
            write_output(outPath, format_graph(g, &P.lattice, format));
        } else if (*gGamma) {
            auto P = load_polytope(inPath);
            auto g = sklab::edge_adjacency_graph(P.lattice);
            write_output(outPath, format_graph(g, &P.lattice, format));
        } else if (*conn) {
            auto g = sklab::graph_from_json(read_json_file(graphPath));
            auto cert = sklab::vertex_connectivity(g);
            json out{{"kappa", cert.kappa}};
            if (certify) {
                if (cert.min_cut) out["cut"] = *cert.min_cut;
                if (cert.pair) out["pair"] = {cert.pair->first, cert.pair->second};
                out["paths"] = cert.paths;
            }
            std::cout << out.dump(2) << "\n";
        } else if (*del) {
            auto g = sklab::graph_from_json(read_json_file(graphPath));
            auto res = sklab::delete_and_check(g, nodeList);
            json out{{"connected", res.connected}, {"components", res.components}};
            std::cout << out.dump(2) << "\n";
        } else if (*balinski) {
            auto P = load_polytope(inPath);
            bool pass = sklab::balinski_affine_check(P, vertexList);
            std::cout << (pass ? "pass: graph minus V is connected"
                               : "FAIL: graph minus V is disconnected (theorem violated!)")
                      << "\n";
            return pass ? 0 : kExitFail;
        } else if (*cBuild) {
            auto C = sklab::complex_from_json(read_json_file(inPath));
            std::cout << "dim " << C.dim << ", " << C.cells.size() << " cells, "
                      << C.maximal.size() << " maximal; f = (";
            auto f = C.f_vector();
            for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? "," : "") << f[i];
            std::cout << ")\n";
        } else if (*cCheck) {
            auto C = sklab::complex_from_json(read_json_file(inPath));
            auto rep = sklab::complex_checks(C);
            std::cout << "dim=" << rep.dim << " pure=" << rep.pure
                      << " strongly_connected=" << rep.strongly_connected << "\n";
            return (rep.pure && rep.strongly_connected) ? 0 : kExitFail;
        } else if (*cSkeleton) {
            auto C = sklab::complex_from_json(read_json_file(inPath));
            auto g = sklab::complex_skeleton_graph(C, kArg);
            write_output(outPath, format_graph(g, nullptr, format));
        } else if (*vPolytope) {
            auto rep = sklab::verify_polytope(load_polytope(inPath).lattice);
            std::cout << (asJson ? sklab::report_to_json(rep).dump(2) + "\n"
                                 : sklab::report_to_table(rep));
            return rep.all_pass() ? 0 : kExitFail;
        } else if (*vComplex) {
            auto rep = sklab::verify_complex(sklab::complex_from_json(read_json_file(inPath)));
            std::cout << (asJson ? sklab::report_to_json(rep).dump(2) + "\n"
                                 : sklab::report_to_table(rep));
            return rep.all_pass() ? 0 : kExitFail;
        } else if (*vAll) {
            auto corpus = sklab::default_corpus();
            bool all = true;
            json rows = json::array();
            for (const auto& P : corpus.polytopes) {
                auto rep = sklab::verify_polytope(P.lattice);
                all = all && rep.all_pass();
                if (asJson) rows.push_back(sklab::report_to_json(rep));
                else std::cout << sklab::report_to_table(rep);
            }
            for (const auto& C : corpus.complexes) {
                auto rep = sklab::verify_complex(C);
                all = all && rep.all_pass();
                if (asJson) rows.push_back(sklab::report_to_json(rep));
                else std::cout << sklab::report_to_table(rep);
            }
            if (asJson) std::cout << json{{"all_pass", all}, {"reports", rows}}.dump(2) << "\n";
            else std::cout << (all ? "ALL BOUNDS PASS" : "BOUND VIOLATED") << "\n";
            return all ? 0 : kExitFail;
        } else if (*values) {
            auto v = sklab::theorem_values(kArg, dimArg);
            std::cout << "m_" << v.k << "(" << v.d << ") = " << v.m_k_d
                      << "  n_k(d) = " << v.n_k_d << "  bounds [" << v.sallee_lower << ", "
                      << v.sallee_upper << "]"
                      << (v.annotation.empty() ? "" : "  (" + v.annotation + ")") << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
