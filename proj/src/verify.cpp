#include "homplex/verify.hpp"

#include "homplex/dissection.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace homplex {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "fail";
}

bool SuiteReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

Json SuiteReport::to_json(bool timings) const {
    Json list = Json::array();
    for (const auto& c : checks) {
        Json j{{"name", c.name}, {"status", to_string(c.status)}, {"measured", c.measured}, {"expected", c.expected}};
        if (!c.note.empty()) j["note"] = c.note;
        if (timings) j["seconds"] = c.seconds;
        list.push_back(std::move(j));
    }
    return Json{{"suite", suite}, {"passed", passed()}, {"checks", std::move(list)}};
}

namespace {

using Body = std::function<void(CheckResult&)>;

// The body sets measured/expected and status; exceptions become failures, an
// exceeded budget becomes a skip.
void run_check(SuiteReport& rep, const std::string& name, const Body& body) {
    CheckResult c;
    c.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const BudgetExceeded& ex) {
        c.status = CheckStatus::skipped;
        c.note = std::string("budget exceeded: ") + ex.what();
    } catch (const std::exception& ex) {
        c.status = CheckStatus::fail;
        c.note = std::string("exception: ") + ex.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.checks.push_back(std::move(c));
}

void expect_equal(CheckResult& c, Json measured, Json expected) {
    c.status = measured == expected ? CheckStatus::pass : CheckStatus::fail;
    c.measured = std::move(measured);
    c.expected = std::move(expected);
}

// Results in index order, independent of the number of workers.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, int jobs, F f) {
    std::vector<std::optional<T>> slots(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex mu;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next++;
            if (i >= n) return;
            try {
                slots[i] = f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error) error = std::current_exception();
            }
        }
    };
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    std::vector<T> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::vector<Graph> graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& g : graphs_up_to_isomorphism(n)) out.push_back(std::move(g));
    return out;
}

Json points_json(const std::vector<Point>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(p);
    return out;
}

// ---------------------------------------------------------------- examples

SuiteReport suite_examples() {
    SuiteReport rep{"examples", {}};

    run_check(rep, "cuboctahedron f-vector of Hom(K2,K4)", [](CheckResult& c) {
        const auto hc = build_hom(complete_graph(2), complete_graph(4), HomMode::hom);
        int triangles = 0, squares = 0;
        for (const auto& t : hc.cells) {
            const auto a = t.parts[0].size(), b = t.parts[1].size();
            if ((a == 1 && b == 3) || (a == 3 && b == 1)) ++triangles;
            if (a == 2 && b == 2) ++squares;
        }
        Json fv = cell_f_vector(hc);
        expect_equal(c, Json{{"f_vector", fv}, {"triangles", triangles}, {"squares", squares}},
                     Json{{"f_vector", {12, 24, 14}}, {"triangles", 8}, {"squares", 6}});
    });

    run_check(rep, "hexagon pipeline", [](CheckResult& c) {
        const LabelTuple t{{{0, 1}, {0, 2}, {1, 2}}, LabelMode::hom_plus};
        const std::vector<Point> simplex{{1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
                                         {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0},
                                         {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1}};
        std::vector<Point> slice{{1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 1}, {1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1},
                                 {0, 1, 0, 1, 0, 0, 0, 0, 1, 1, 1, 1}, {0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1},
                                 {1, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1}, {1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1},
                                 {0, 1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1}, {0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1}};
        std::vector<Point> boxed{{2, 0, 1, 1, 1, 1}, {1, 0, 2, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, {0, 1, 2, 1, 1, 1},
                                 {2, 1, 0, 1, 1, 1}, {1, 1, 1, 1, 1, 1}, {1, 2, 0, 1, 1, 1}, {0, 2, 1, 1, 1, 1}};
        std::vector<Point> hexagon{{2, 0, 1}, {1, 0, 2}, {0, 1, 2}, {2, 1, 0}, {1, 2, 0}, {0, 2, 1}};
        std::sort(slice.begin(), slice.end());
        std::sort(boxed.begin(), boxed.end());
        std::sort(hexagon.begin(), hexagon.end());

        const auto joined = join_vertices(t, 3);
        // Slice vertices come back as rationals; scale by 3 for comparison.
        std::vector<Point> got_slice, got_boxed;
        const IntMatrix pi = pi_box_matrix(3, 3);
        for (const auto& v : cayley_slice(t, 3, 3)) {
            Point p;
            for (const auto& x : v.entries) p.push_back(Rational(x * 3).get_num().get_si());
            got_slice.push_back(std::move(p));
            Point q;
            for (const auto& x : apply(pi, v).entries) q.push_back(Rational(x * 3).get_num().get_si());
            got_boxed.push_back(std::move(q));
        }
        std::sort(got_slice.begin(), got_slice.end());
        std::sort(got_boxed.begin(), got_boxed.end());
        const auto cell = make_projected_cell(t.parts, 3);
        const auto interior = std::count(cell.points.begin(), cell.points.end(), Point{1, 1, 1});
        expect_equal(c,
                     Json{{"simplex", points_json(joined)}, {"slice", points_json(got_slice)},
                          {"pi_box", points_json(got_boxed)}, {"hexagon", points_json(cell.vertices)},
                          {"interior_hits", interior}},
                     Json{{"simplex", points_json(simplex)}, {"slice", points_json(slice)},
                          {"pi_box", points_json(boxed)}, {"hexagon", points_json(hexagon)}, {"interior_hits", 2}});
    });

    run_check(rep, "Minkowski quadrilateral of two edges", [](CheckResult& c) {
        const LabelTuple t{{{0, 1}, {1, 2}}, LabelMode::hom};
        const auto cell = make_projected_cell(t.parts, 3);
        expect_equal(c, Json{{"slice_vertices", cayley_slice(t, 2, 3).size()}, {"hull", points_json(cell.vertices)}},
                     Json{{"slice_vertices", 4}, {"hull", points_json({{0, 1, 1}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}})}});
    });

    run_check(rep, "Hom(K3,C5) is empty", [](CheckResult& c) {
        expect_equal(c, build_hom(complete_graph(3), cycle_graph(5), HomMode::hom).cells.size(), 0);
    });

    run_check(rep, "composition complex C(2,3)", [](CheckResult& c) {
        const auto cc = composition_complex(2, 3);
        const auto top = std::count(cc.cell_dimension.begin(), cc.cell_dimension.end(), 2);
        expect_equal(c, Json{{"vertices", cc.vertices.size()}, {"edges", composition_graph(2, 3).edge_count()}, {"cells", top}},
                     Json{{"vertices", 6}, {"edges", 8}, {"cells", 3}});
    });

    run_check(rep, "chi of {2,3,5,6} in C_4(6)", [](CheckResult& c) {
        expect_equal(c, chi({2, 3, 5, 6}, 6, 4), Json{1, 1, 0});
    });

    run_check(rep, "lower facets of C_4(8)", [](CheckResult& c) { expect_equal(c, lower_facets(8, 4).size(), 15); });

    run_check(rep, "three lower facets around {4,6}", [](CheckResult& c) {
        const std::vector<IndexSet> facets{{4, 5, 6, 7}, {3, 4, 6, 7}, {3, 4, 5, 6}};
        Json comps = Json::array();
        std::set<GridPoint> u;
        for (const auto& f : facets) {
            const auto a = chi(f, 8, 4);
            comps.push_back(a);
            for (const auto& p : minimal_path_of(a)) u.insert(p);
        }
        const LatticePath path(u.begin(), u.end());
        expect_equal(c, Json{{"compositions", comps}, {"phi", phi(path, 4, 3)}},
                     Json{{"compositions", {{3, 0, 1}, {2, 1, 1}, {2, 0, 2}}}, {"phi", {4, 6}}});
    });
    return rep;
}

// ------------------------------------------------------------- dissections

SuiteReport suite_dissections() {
    SuiteReport rep{"dissections", {}};
    run_check(rep, "allowable diagonals and clique number, 3<=k<=7, 2<=m<=6", [](CheckResult& c) {
        Json bad = Json::array();
        for (int k = 3; k <= 7; ++k)
            for (int m = 2; m <= 6; ++m) {
                const auto n = allowable_diagonals(k, m).size();
                const auto expected = static_cast<std::size_t>((m - 1) * (m * (k - 2) + 2) / 2);
                const int omega = clique_number(independence_graph(k, m));
                if (n != expected || omega != m - 1) bad.push_back({k, m, n, omega});
            }
        expect_equal(c, bad, Json::array());
    });
    run_check(rep, "facets of T(4,3) and T(3,3)", [](CheckResult& c) {
        expect_equal(c, Json{build_T(4, 3).facets().size(), build_T(3, 3).facets().size()}, Json{12, 5});
    });
    run_check(rep, "dissection counts match the Fuss-Catalan numbers", [](CheckResult& c) {
        Json bad = Json::array();
        for (int k = 3; k <= 6; ++k)
            for (int m = 2; m <= 5; ++m)
                if (Integer(static_cast<unsigned long>(dissections(k, m).size())) != fuss_count(k, m)) bad.push_back({k, m});
        expect_equal(c, bad, Json::array());
    });
    run_check(rep, "flip graph equals the 1-skeleton of D", [](CheckResult& c) {
        Json bad = Json::array();
        for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 3}, {3, 5}, {5, 3}})
            if (!(flip_graph(k, m) == flip_graph_by_exchange(k, m))) bad.push_back({k, m});
        expect_equal(c, bad, Json::array());
    });
    return rep;
}

// ------------------------------------------------------------------- slice

SuiteReport suite_slice(const VerifyOptions& opt) {
    SuiteReport rep{"slice", {}};
    auto sweep = [&](CheckResult& c, const std::vector<std::pair<Graph, Graph>>& pairs) {
        const auto reports = parallel_map<SliceReport>(pairs.size(), opt.jobs, [&](std::size_t i) {
            return check_slice_identity(pairs[i].first, pairs[i].second);
        });
        Json bad = Json::array();
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto& r = reports[i];
            if (!r.slice_identity || !r.transversal_cells_match || !r.diagram_commutes)
                bad.push_back({graph_to_json(pairs[i].first), graph_to_json(pairs[i].second)});
        }
        c.measured = Json{{"pairs", pairs.size()}, {"failures", bad}};
        c.expected = Json{{"failures", Json::array()}};
        c.status = bad.empty() ? CheckStatus::pass : CheckStatus::fail;
    };
    run_check(rep, "all pairs with at most 4 vertices", [&](CheckResult& c) {
        const auto gs = graphs_up_to(std::min(4, opt.max_size));
        std::vector<std::pair<Graph, Graph>> pairs;
        for (const auto& g : gs)
            for (const auto& h : gs) pairs.emplace_back(g, h);
        sweep(c, pairs);
    });
    run_check(rep, "random pairs with at most 5 vertices", [&](CheckResult& c) {
        std::mt19937 rng(opt.seed);
        auto random_graph = [&] {
            const int n = 1 + static_cast<int>(rng() % 5);
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 2 == 0) g.add_edge(u, v);
            return g;
        };
        std::vector<std::pair<Graph, Graph>> pairs;
        for (int i = 0; i < opt.samples; ++i) {
            Graph g = random_graph();
            Graph h = random_graph();
            pairs.emplace_back(std::move(g), std::move(h));
        }
        sweep(c, pairs);
    });
    return rep;
}

// ------------------------------------------------- polytopality, skeleton

struct SweepItem {
    int g;
    Graph h;
};

std::vector<SweepItem> clique_sweep(int max_size) {
    std::vector<SweepItem> items;
    for (int g = 2; g <= 3; ++g)
        for (auto& h : graphs_up_to(max_size)) items.push_back({g, std::move(h)});
    return items;
}

SuiteReport suite_polytopality(const VerifyOptions& opt) {
    SuiteReport rep{"polytopality", {}};
    run_check(rep, "projected Hom(K2,K4) has a bad pair of internal squares", [](CheckResult& c) {
        const auto cells = projected_complex(complete_graph(2), complete_graph(4), HomMode::hom);
        const auto verdict = common_face_test(cells);
        bool squares = false, circuit = false;
        if (verdict.bad_pair) {
            const auto& bp = *verdict.bad_pair;
            auto is_square = [&](std::size_t i) {
                return cells[i].parts.size() == 2 && cells[i].parts[0].size() == 2 && cells[i].parts[1].size() == 2 &&
                       cells[i].vertices.size() == 4;
            };
            squares = is_square(bp.first) && is_square(bp.second);
            circuit = is_affine_circuit(bp.points, bp.witness);
        }
        expect_equal(c, Json{{"is_complex", verdict.is_complex}, {"squares", squares}, {"circuit", circuit}},
                     Json{{"is_complex", false}, {"squares", true}, {"circuit", true}});
    });
    run_check(rep, "criterion agrees with the geometric test, g in {2,3}", [&](CheckResult& c) {
        const auto items = clique_sweep(opt.max_size);
        const auto reports = parallel_map<PolytopalityReport>(
            items.size(), opt.jobs, [&](std::size_t i) { return check_projection_polytopal(items[i].g, items[i].h); });
        Json bad = Json::array();
        std::size_t nonempty = 0, polytopal = 0;
        bool up_to_g_plus_1 = true;
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (reports[i].empty) continue;
            ++nonempty;
            if (reports[i].geometric) ++polytopal;
            // Observed alternative: complex iff omega(H) <= g + 1.
            if (reports[i].geometric != (clique_number(items[i].h) <= items[i].g + 1)) up_to_g_plus_1 = false;
            if (!reports[i].agree()) bad.push_back({items[i].g, graph_to_json(items[i].h)});
        }
        c.measured = Json{{"graphs", items.size()}, {"nonempty", nonempty}, {"polytopal", polytopal},
                          {"complex_iff_omega_at_most_g_plus_1", up_to_g_plus_1}, {"disagreements", bad}};
        c.expected = Json{{"disagreements", Json::array()}};
        c.status = bad.empty() ? CheckStatus::pass : CheckStatus::fail;
    });
    return rep;
}

SuiteReport suite_skeleton(const VerifyOptions& opt) {
    SuiteReport rep{"skeleton", {}};
    run_check(rep, "projected 1-skeleton lies in the hypersimplex, g in {2,3}", [&](CheckResult& c) {
        const auto items = clique_sweep(opt.max_size);
        const auto ok = parallel_map<char>(items.size(), opt.jobs, [&](std::size_t i) -> char {
            return skeleton_in_hypersimplex_check(items[i].g, items[i].h) ? 1 : 0;
        });
        Json bad = Json::array();
        for (std::size_t i = 0; i < items.size(); ++i)
            if (!ok[i]) bad.push_back({items[i].g, graph_to_json(items[i].h)});
        c.measured = Json{{"graphs", items.size()}, {"failures", bad}};
        c.expected = Json{{"failures", Json::array()}};
        c.status = bad.empty() ? CheckStatus::pass : CheckStatus::fail;
    });
    run_check(rep, "projected 1-skeleton of Hom(K2,K4) is the octahedron", [](CheckResult& c) {
        const auto sk = projected_one_skeleton(2, complete_graph(4));
        const auto oct = hypersimplex_one_skeleton(2, 4);
        expect_equal(c, Json{{"vertices", sk.vertices.size()}, {"edges", sk.edges.size()}, {"equal", sk.vertices == oct.vertices && sk.edges == oct.edges}},
                     Json{{"vertices", 6}, {"edges", 12}, {"equal", true}});
    });
    return rep;
}

// ------------------------------------------------------------------- table

struct TableEntry {
    int k;
    int m;
    int plus_lo, plus_hi;  // facet dimensions of D_+
    int d_lo, d_hi;        // cell dimensions of D; -1 when not printed
    std::map<int, int> ranks;
    bool asserted;
};

std::vector<TableEntry> table_entries() {
    return {
        {3, 3, 2, 2, 1, 1, {{1, 1}}, true},
        {3, 4, 3, 4, 1, 2, {{2, 1}}, true},
        {4, 3, 3, 3, 2, 2, {{1, 1}}, true},
        {3, 5, 4, 5, 1, 2, {{3, 1}}, false},
        {3, 6, 5, 7, 1, 3, {{4, 1}}, false},
        {4, 4, 4, 6, 2, 4, {{3, 1}}, false},
        {5, 3, 4, 4, 3, 3, {{1, 1}}, false},
        {6, 3, 5, 5, 4, 4, {{1, 1}}, false},
        {7, 3, 6, 6, 5, 5, {{1, 1}}, false},
        {4, 5, 5, 7, 2, 4, {{3, 4}, {4, 4}}, false},
        {5, 4, 5, 8, 3, 6, {{3, 1}}, false},
        {6, 4, 6, 10, 4, 8, {{3, 1}}, false},
        {3, 7, 7, 8, 2, 3, {{5, 1}}, false},
    };
}

Json ranks_json(const std::map<int, int>& ranks) {
    Json out = Json::object();
    for (auto [d, r] : ranks) out["r" + std::to_string(d)] = r;
    return out;
}

SuiteReport suite_table(const VerifyOptions& opt) {
    SuiteReport rep{"table", {}};
    for (const auto& e : table_entries()) {
        const std::string name = "D_plus(" + std::to_string(e.k) + "," + std::to_string(e.m) + ")";
        run_check(rep, name, [&](CheckResult& c) {
            Json expected{{"facet_dims", {e.plus_lo, e.plus_hi}}, {"ranks", ranks_json(e.ranks)}, {"torsion", false}};
            if (e.asserted) expected["D_dims"] = {e.d_lo, e.d_hi};
            c.expected = expected;
            const auto diagonals = allowable_diagonals(e.k, e.m).size();
            if (!e.asserted && static_cast<int>(diagonals) > 4 * opt.max_size) {
                c.status = CheckStatus::skipped;
                c.note = "not asserted; " + std::to_string(diagonals) + " diagonals exceed the sweep size";
                return;
            }
            const auto dplus = build_D_plus(e.k, e.m);
            int lo = -1, hi = -1;
            for (const auto& f : dplus.facets()) {
                const int d = static_cast<int>(f.size()) - 1;
                lo = lo < 0 ? d : std::min(lo, d);
                hi = std::max(hi, d);
            }
            const auto h = reduced_homology(dplus);
            std::map<int, int> ranks;
            for (const auto& g : h)
                if (g.rank > 0) ranks[g.dimension] = static_cast<int>(g.rank);
            Json measured{{"facet_dims", {lo, hi}}, {"ranks", ranks_json(ranks)}, {"torsion", has_torsion(h)}};
            if (e.asserted) {
                const auto dr = dimension_of_D(e.k, e.m);
                measured["D_dims"] = {dr.min_cell_dim_D, dr.dim_D};
            }
            c.measured = measured;
            if (e.asserted) {
                c.status = measured == expected ? CheckStatus::pass : CheckStatus::fail;
            } else {
                c.status = CheckStatus::skipped;
                c.note = std::string("not asserted; ") + (measured == expected ? "matches" : "differs from") +
                         " the printed entry";
            }
        });
    }
    for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 3}, {5, 3}}) {
        const std::string name = "T(" + std::to_string(k) + "," + std::to_string(m) + ") is a wedge of spheres";
        run_check(rep, name, [k = k, m = m](CheckResult& c) {
            const auto h = reduced_homology(build_T(k, m));
            std::map<int, int> ranks;
            for (const auto& g : h)
                if (g.rank > 0) ranks[g.dimension] = static_cast<int>(g.rank);
            expect_equal(c, Json{{"ranks", ranks_json(ranks)}, {"torsion", has_torsion(h)}},
                         Json{{"ranks", ranks_json({{m - 2, static_cast<int>(wedge_count(k, m).get_si())}})},
                              {"torsion", false}});
        });
    }
    return rep;
}

// ---------------------------------------------------------------- ic_delta

SuiteReport suite_ic_delta() {
    SuiteReport rep{"ic_delta", {}};
    for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 3}, {4, 4}}) {
        const std::string name = "IC_Delta(" + std::to_string(k) + "," + std::to_string(m) + ")";
        run_check(rep, name, [k = k, m = m](CheckResult& c) {
            const auto ic = build_ic_delta(k, m);
            const auto dpt = build_D_plus_t(k, m);
            const auto h = static_cast<int>(allowable_diagonals(k, m).size());
            const bool transversal_equal = ic_delta_transversal_faces(k, m) == dpt.transversal_faces;
            const bool d_plus_inside = is_subcomplex(dpt.complex, ic);
            const bool proper_in_simplex = is_subcomplex(ic, full_simplex(h)) && !(ic == full_simplex(h));
            std::size_t ic_faces = 0, dp_faces = 0;
            for (auto n : f_vector(ic)) ic_faces += n;
            for (auto n : f_vector(dpt.complex)) dp_faces += n;
            c.measured = Json{{"transversal_equal", transversal_equal},
                              {"D_plus_subcomplex", d_plus_inside},
                              {"proper_in_simplex", proper_in_simplex},
                              {"faces", {ic_faces, dp_faces}}};
            c.expected = Json{{"transversal_equal", true}, {"D_plus_subcomplex", true}, {"proper_in_simplex", true}};
            c.status = transversal_equal && d_plus_inside && proper_in_simplex ? CheckStatus::pass : CheckStatus::fail;
        });
    }
    return rep;
}

// --------------------------------------------------------------- dimension

SuiteReport suite_dimension() {
    SuiteReport rep{"dimension", {}};
    for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 3}, {4, 4}, {5, 3}}) {
        const std::string name = "dimensions of D and D_plus (" + std::to_string(k) + "," + std::to_string(m) + ")";
        run_check(rep, name, [k = k, m = m](CheckResult& c) {
            const auto r = dimension_of_D(k, m);
            expect_equal(c, Json{r.dim_D, r.dim_D_plus}, Json{r.formula_D, r.formula_D_plus});
        });
    }
    return rep;
}

// ----------------------------------------------------------------- duality

SuiteReport suite_duality(const VerifyOptions& opt) {
    SuiteReport rep{"duality", {}};
    run_check(rep, "chi round trip and lower facet counts, r<=6, 2<=s<=4", [](CheckResult& c) {
        Json bad = Json::array();
        for (int r = 1; r <= 6; ++r)
            for (int s = 2; s <= 4; ++s) {
                const int d = 2 * s - 2, n = r + d;
                const auto lf = lower_facets(n, d);
                std::set<Composition> seen;
                bool ok = true;
                for (const auto& f : lf) {
                    const auto a = chi(f, n, d);
                    ok = ok && chi_inverse(a) == f && std::accumulate(a.begin(), a.end(), 0) == r;
                    seen.insert(a);
                }
                const auto all = compositions(r, s);
                ok = ok && seen.size() == lf.size() && seen == std::set<Composition>(all.begin(), all.end());
                if (!ok) bad.push_back({r, s});
            }
        expect_equal(c, bad, Json::array());
    });
    std::vector<std::pair<int, int>> params;
    for (int r = 1; r <= 5; ++r)
        for (int s = 2; s <= 4; ++s) params.emplace_back(r, s);
    run_check(rep, "phi/psi anti-isomorphism and composition graph, r<=5, 2<=s<=4", [&](CheckResult& c) {
        const auto reports = parallel_map<DualityReport>(
            params.size(), opt.jobs, [&](std::size_t i) { return verify_composition_duality(params[i].first, params[i].second); });
        Json bad = Json::array();
        std::size_t cells = 0;
        for (std::size_t i = 0; i < params.size(); ++i) {
            cells += reports[i].cells;
            if (!reports[i].passed()) bad.push_back({params[i].first, params[i].second});
        }
        c.measured = Json{{"cases", params.size()}, {"cells", cells}, {"failures", bad}};
        c.expected = Json{{"failures", Json::array()}};
        c.status = bad.empty() ? CheckStatus::pass : CheckStatus::fail;
    });
    return rep;
}

// --------------------------------------------------------------- staircase

SuiteReport suite_staircase() {
    SuiteReport rep{"staircase", {}};
    for (auto [k, m, r, s] : std::vector<std::array<int, 4>>{{4, 3, 2, 2}, {4, 6, 4, 3}}) {
        const std::string name = "staircase embedding (k,m,r,s)=(" + std::to_string(k) + "," + std::to_string(m) + "," +
                                 std::to_string(r) + "," + std::to_string(s) + ")";
        run_check(rep, name, [k = k, m = m, r = r, s = s](CheckResult& c) {
            const auto e = verify_staircase_embedding(k, m, r, s);
            c.measured = Json{{"hom_facets_are_full_paths", e.hom_facets_are_full_paths},
                              {"ihom_equals_hom", e.ihom_equals_hom},
                              {"is_subgraph", e.is_subgraph},
                              {"is_induced", e.is_induced},
                              {"paths_in_D_plus", e.paths_in_D_plus},
                              {"slice_in_D", e.slice_in_D},
                              {"full_paths", e.full_path_count},
                              {"hom_facets", e.hom_facet_count},
                              {"extra_independent_pairs", e.extra_independent_pairs}};
            c.expected = Json{{"all", true}};
            c.status = e.passed() ? CheckStatus::pass : CheckStatus::fail;
            for (const auto& n : e.notes) c.note += (c.note.empty() ? "" : "; ") + n;
        });
    }
    return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"examples", "dissections", "slice",     "polytopality", "skeleton",
            "table",    "ic_delta",    "dimension", "duality",      "staircase"};
}

std::vector<SuiteReport> run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "all") {
        std::vector<SuiteReport> out;
        for (const auto& n : suite_names())
            for (auto& r : run_suite(n, opt)) out.push_back(std::move(r));
        return out;
    }
    if (name == "examples") return {suite_examples()};
    if (name == "dissections") return {suite_dissections()};
    if (name == "slice") return {suite_slice(opt)};
    if (name == "polytopality") return {suite_polytopality(opt)};
    if (name == "skeleton") return {suite_skeleton(opt)};
    if (name == "table") return {suite_table(opt)};
    if (name == "ic_delta") return {suite_ic_delta()};
    if (name == "dimension") return {suite_dimension()};
    if (name == "duality") return {suite_duality(opt)};
    if (name == "staircase") return {suite_staircase()};
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace homplex
