#include "homplex/cyclic.hpp"
#include "homplex/dissection.hpp"
#include "homplex/hom.hpp"
#include "homplex/homology.hpp"
#include "homplex/json_io.hpp"
#include "homplex/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

using namespace homplex;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct HomArgs {
    std::string g, h, mode = "hom", cell;
    bool project = false;
    bool slice = false;
};

std::vector<VertexSet> parse_cell(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("--cell: ") + ex.what());
    }
    if (!j.is_array()) throw std::invalid_argument("--cell: expected a list of vertex lists");
    std::vector<VertexSet> parts;
    for (const auto& p : j) {
        VertexSet s = p.get<VertexSet>();
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        parts.push_back(std::move(s));
    }
    return parts;
}

Json slice_json(const LabelTuple& t, int g, int h) {
    Json join = Json::array();
    for (const auto& p : join_vertices(t, h)) join.push_back(p);
    Json slice = Json::array(), boxed = Json::array();
    const IntMatrix pi = pi_box_matrix(g, h);
    for (const auto& v : cayley_slice(t, g, h)) {
        slice.push_back(rational_vector_to_json(v));
        boxed.push_back(rational_vector_to_json(apply(pi, v)));
    }
    return Json{{"parts", t.parts},
                {"join_vertices", std::move(join)},
                {"slice_vertices", std::move(slice)},
                {"pi_box", std::move(boxed)},
                {"projection", projected_cell_to_json(make_projected_cell(t.parts, h), g)}};
}

int cmd_hom(const HomArgs& a) {
    const Graph g = parse_graph_spec(a.g);
    const Graph h = parse_graph_spec(a.h);
    const HomMode mode = parse_hom_mode(a.mode);
    Json out;
    if (!a.cell.empty()) {
        const auto parts = parse_cell(a.cell);
        if (static_cast<int>(parts.size()) != g.vertex_count())
            throw std::invalid_argument("--cell: need one part per vertex of G");
        for (const auto& p : parts)
            for (int v : p)
                if (v < 0 || v >= h.vertex_count()) throw std::invalid_argument("--cell: vertex out of range");
        const LabelTuple t{parts, is_plus_mode(mode) ? LabelMode::hom_plus : LabelMode::hom};
        out = Json{{"mode", to_string(mode)}, {"cell", parts}, {"is_cell", is_hom_cell(g, h, parts, mode)}};
        if (a.slice) out["slice"] = slice_json(t, g.vertex_count(), h.vertex_count());
        if (a.project) out["projection"] = projected_cell_to_json(make_projected_cell(parts, h.vertex_count()), g.vertex_count());
        std::cout << out.dump(2) << '\n';
        return kOk;
    }

    const auto hc = build_hom(g, h, mode);
    out = hom_complex_to_json(hc);
    if (a.project) {
        if (is_plus_mode(mode)) {
            if (!(g == complete_graph(g.vertex_count())))
                throw std::invalid_argument("--project with a plus mode needs G complete");
            out["projection"] = complex_to_json(projected_simplicial_complex(g.vertex_count(), h, mode));
        } else {
            const auto cells = projected_complex(g, h, mode);
            Json list = Json::array();
            for (const auto& c : cells) list.push_back(projected_cell_to_json(c, g.vertex_count()));
            const auto verdict = common_face_test(cells);
            Json v{{"is_complex", verdict.is_complex}};
            if (verdict.bad_pair) {
                const auto& bp = *verdict.bad_pair;
                Json pts = Json::array();
                for (const auto& p : bp.points) pts.push_back(scaled_point_to_json(p, g.vertex_count()));
                v["bad_pair"] = Json{{"cells", {bp.first, bp.second}},
                                     {"points", std::move(pts)},
                                     {"positive", bp.witness.positive_support},
                                     {"negative", bp.witness.negative_support}};
            }
            out["projection"] = Json{{"cells", std::move(list)}, {"verdict", std::move(v)}};
        }
    }
    if (a.slice) {
        Json list = Json::array();
        for (const auto& t : hc.cells)
            if (t.all_nonempty()) list.push_back(slice_json(t, g.vertex_count(), h.vertex_count()));
        out["slices"] = std::move(list);
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
}

struct DissectArgs {
    int k = 3, m = 1;
    std::string what = "delta";
    bool homology = false;
};

int cmd_dissect(const DissectArgs& a) {
    const DissectionParams params(a.k, a.m);
    Json out{{"k", a.k}, {"m", a.m}, {"N", params.polygon_size()}, {"what", a.what}};
    std::optional<SimplicialComplex> for_homology;
    if (a.what == "delta") {
        Json list = Json::array();
        for (const auto& d : allowable_diagonals(a.k, a.m)) list.push_back({d.a, d.b});
        out["diagonals"] = std::move(list);
    } else if (a.what == "T") {
        for_homology = build_T(a.k, a.m);
        out["complex"] = complex_to_json(*for_homology);
    } else if (a.what == "D") {
        const auto cells = build_D(a.k, a.m);
        Json list = Json::array();
        for (const auto& c : cells) list.push_back(projected_cell_to_json(c, a.m - 1));
        out["cells"] = std::move(list);
        if (a.homology) {
            // D and D_plus have the same homology; the simplicial model is used.
            for_homology = build_D_plus(a.k, a.m);
            out["homology_of"] = "Dplus";
        }
    } else if (a.what == "Dplus") {
        for_homology = build_D_plus(a.k, a.m);
        out["complex"] = complex_to_json(*for_homology);
    } else if (a.what == "Dplus_t") {
        auto t = build_D_plus_t(a.k, a.m);
        out["complex"] = complex_to_json(t.complex);
        out["transversal_faces"] = t.transversal_faces;
        for_homology = std::move(t.complex);
    } else if (a.what == "flip") {
        out["dissections"] = dissections(a.k, a.m);
        out["graph"] = graph_to_json(flip_graph(a.k, a.m));
    } else if (a.what == "ic") {
        for_homology = build_ic_delta(a.k, a.m);
        out["complex"] = complex_to_json(*for_homology);
    } else {
        throw std::invalid_argument("--what: unknown object " + a.what);
    }
    if (a.homology) {
        if (!for_homology) throw std::invalid_argument("--homology needs a complex (T, D, Dplus, Dplus_t or ic)");
        out["homology"] = homology_to_json(reduced_homology(*for_homology));
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
}

struct CyclicArgs {
    std::optional<int> r, s, n, d;
    std::string what = "compositions";
};

int cmd_cyclic(const CyclicArgs& a) {
    int r = 0, s = 0;
    if (a.r && a.s) {
        r = *a.r;
        s = *a.s;
        if ((a.d && *a.d != 2 * s - 2) || (a.n && *a.n != r + 2 * s - 2))
            throw std::invalid_argument("inconsistent parameters: need d = 2s-2 and n = r+d");
    } else if (a.n && a.d && !a.r && !a.s) {
        if (*a.d % 2 != 0 || *a.d < 0) throw std::invalid_argument("d must be even and non-negative");
        r = *a.n - *a.d;
        s = *a.d / 2 + 1;
    } else {
        throw std::invalid_argument("give -r and -s, or -n and -d");
    }
    if (r < 1 || s < 1) throw std::invalid_argument("need r >= 1 and s >= 1");
    const int d = 2 * s - 2, n = r + d;
    Json out{{"r", r}, {"s", s}, {"n", n}, {"d", d}, {"what", a.what}};
    int code = kOk;
    if (a.what == "lower_facets") {
        Json list = Json::array();
        for (const auto& f : lower_facets(n, d)) list.push_back(Json{{"facet", f}, {"composition", chi(f, n, d)}});
        out["lower_facets"] = std::move(list);
    } else if (a.what == "compositions") {
        out["compositions"] = compositions(r, s);
    } else if (a.what == "graph") {
        out["compositions"] = compositions(r, s);
        out["graph"] = graph_to_json(composition_graph(r, s));
    } else if (a.what == "complex") {
        const auto cc = composition_complex(r, s);
        Json cells = Json::array();
        for (std::size_t i = 0; i < cc.cells.size(); ++i)
            cells.push_back(Json{{"path", path_to_json(cc.cells[i])},
                                 {"dimension", cc.cell_dimension[i]},
                                 {"vertices", cc.cell_vertices[i]}});
        out["compositions"] = cc.vertices;
        out["cells"] = std::move(cells);
    } else if (a.what == "phi_psi_check") {
        const auto rep = verify_composition_duality(r, s);
        out["report"] = Json{{"cells", rep.cells},
                             {"injective", rep.injective},
                             {"psi_after_phi", rep.psi_after_phi},
                             {"phi_after_psi", rep.phi_after_psi},
                             {"inclusion_reversing", rep.inclusion_reversing},
                             {"image_is_lower_interval", rep.image_is_lower_interval},
                             {"skeleton_is_composition_graph", rep.skeleton_is_composition_graph}};
        out["passed"] = rep.passed();
        if (!rep.passed()) code = kVerificationFailed;
    } else {
        throw std::invalid_argument("--what: unknown object " + a.what);
    }
    std::cout << out.dump(2) << '\n';
    return code;
}

struct VerifyArgs {
    std::string suite = "all";
    VerifyOptions opt;
    bool timings = false;
};

int cmd_verify(const VerifyArgs& a) {
    const auto reports = run_suite(a.suite, a.opt);
    Json list = Json::array();
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.passed();
        list.push_back(r.to_json(a.timings));
        std::clog << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << '\n';
    }
    std::cout << Json{{"passed", ok}, {"suites", std::move(list)}}.dump(2) << '\n';
    return ok ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hom complexes, dissection complexes and cyclic polytopes"};
    app.require_subcommand(1);

    HomArgs hom;
    auto* h = app.add_subcommand("hom", "Build Hom(G,H) and its projections");
    h->add_option("--G", hom.g, "Graph G: K<n>, C<n>, E<n>, I<k>_<m>, S<r>_<s> or a JSON file")->required();
    h->add_option("--H", hom.h, "Graph H, same syntax")->required();
    h->add_option("--mode", hom.mode, "hom, hom_plus, hom_plus_t, ihom or ihom_plus");
    h->add_option("--cell", hom.cell, "Restrict to one cell given as JSON parts, e.g. [[0,1],[0,2],[1,2]]");
    h->add_flag("--project", hom.project, "Project to V(H)");
    h->add_flag("--slice", hom.slice, "Slice the join simplices at the constant tail");

    DissectArgs dis;
    auto* d = app.add_subcommand("dissect", "Dissection complexes of the N-gon");
    d->add_option("-k", dis.k, "Size of the polygons in the dissection")->required();
    d->add_option("-m", dis.m, "Number of polygons")->required();
    d->add_option("--what", dis.what, "delta, T, D, Dplus, Dplus_t, flip or ic")
        ->check(CLI::IsMember({"delta", "T", "D", "Dplus", "Dplus_t", "flip", "ic"}));
    d->add_flag("--homology", dis.homology, "Append reduced integer homology");

    CyclicArgs cyc;
    auto* c = app.add_subcommand("cyclic", "Cyclic polytopes, compositions and staircases");
    c->add_option("-r", cyc.r, "Sum of the compositions");
    c->add_option("-s", cyc.s, "Number of parts");
    c->add_option("-n", cyc.n, "Vertices of the cyclic polytope");
    c->add_option("-d", cyc.d, "Dimension of the cyclic polytope (even)");
    c->add_option("--what", cyc.what, "lower_facets, compositions, graph, complex or phi_psi_check")
        ->check(CLI::IsMember({"lower_facets", "compositions", "graph", "complex", "phi_psi_check"}));

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Run the verification suites");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    v->add_option("--suite", ver.suite, "Suite name or all")->check(CLI::IsMember(suites));
    v->add_option("--max-size", ver.opt.max_size, "Largest graph size in exhaustive sweeps")->check(CLI::Range(1, 6));
    v->add_option("--jobs", ver.opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
    v->add_option("--samples", ver.opt.samples, "Random pairs in the slice sweep")->check(CLI::NonNegativeNumber);
    v->add_option("--seed", ver.opt.seed, "Seed for the random sweep");
    v->add_flag("--timings", ver.timings, "Include elapsed seconds (output is then not reproducible)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (h->parsed()) return cmd_hom(hom);
        if (d->parsed()) return cmd_dissect(dis);
        if (c->parsed()) return cmd_cyclic(cyc);
        return cmd_verify(ver);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise HOMPLEX_BUDGET to allow more faces)\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kVerificationFailed;
    }
}
