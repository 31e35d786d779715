#include "homplex/json_io.hpp"

#include "homplex/dissection.hpp"

#include <fstream>
#include <regex>
#include <stdexcept>

namespace homplex {

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
    try {
        const int n = j.at("n").get<int>();
        if (n < 0) throw std::invalid_argument("graph JSON: negative vertex count");
        Graph g(n);
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: edge must be a pair");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
        return g;
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("graph JSON: ") + ex.what());
    }
}

Graph parse_graph_spec(const std::string& spec) {
    static const std::regex one(R"(([KCE])(\d+))");
    static const std::regex two(R"(([IS])(\d+)_(\d+))");
    std::smatch mt;
    if (std::regex_match(spec, mt, one)) {
        const int n = std::stoi(mt[2]);
        if (mt[1] == "K") return complete_graph(n);
        if (mt[1] == "E") return empty_graph(n);
        if (n < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
        return cycle_graph(n);
    }
    if (std::regex_match(spec, mt, two)) {
        const int a = std::stoi(mt[2]);
        const int b = std::stoi(mt[3]);
        if (mt[1] == "I") return independence_graph(a, b);
        return staircase_graph(a, b);
    }
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("unknown graph family or unreadable file: " + spec);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument("cannot parse " + spec + ": " + ex.what());
    }
    return graph_from_json(j);
}

std::string fraction(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Json rational_vector_to_json(const RationalVector& v) {
    Json out = Json::array();
    for (const auto& x : v.entries) out.push_back(fraction(x));
    return out;
}

Json scaled_point_to_json(const Point& p, int scale) {
    Json out = Json::array();
    for (auto x : p) out.push_back(fraction(Rational(static_cast<long>(x), static_cast<long>(scale))));
    return out;
}

Json complex_to_json(const SimplicialComplex& k, std::size_t budget) {
    Json fv = Json::array();
    for (auto c : f_vector(k, budget)) fv.push_back(c);
    return Json{{"vertex_count", k.vertex_count()},
                {"dimension", k.dimension()},
                {"f_vector", std::move(fv)},
                {"facets", k.facets()}};
}

Json label_tuple_to_json(const LabelTuple& t) { return Json{{"parts", t.parts}, {"dimension", t.dimension()}}; }

Json projected_cell_to_json(const ProjectedCell& c, int scale) {
    Json pts = Json::array();
    for (const auto& p : c.points) pts.push_back(scaled_point_to_json(p, scale));
    Json verts = Json::array();
    for (const auto& p : c.vertices) verts.push_back(scaled_point_to_json(p, scale));
    return Json{{"parts", c.parts}, {"points", std::move(pts)}, {"vertices", std::move(verts)}};
}

Json hom_complex_to_json(const HomComplex& hc, std::size_t budget) {
    Json cells = Json::array();
    for (const auto& t : hc.cells) cells.push_back(label_tuple_to_json(t));
    Json fv = Json::array();
    for (auto c : cell_f_vector(hc, budget)) fv.push_back(c);
    return Json{{"G", graph_to_json(hc.G)},
                {"H", graph_to_json(hc.H)},
                {"mode", to_string(hc.mode)},
                {"empty", hc.cells.empty()},
                {"f_vector", std::move(fv)},
                {"maximal_cells", std::move(cells)}};
}

Json homology_to_json(const std::vector<HomologyGroup>& groups) {
    Json out = Json::array();
    for (const auto& g : groups) {
        Json tor = Json::array();
        for (const auto& t : g.torsion) tor.push_back(t.get_str());
        out.push_back(Json{{"dimension", g.dimension}, {"rank", g.rank}, {"torsion", std::move(tor)}});
    }
    return out;
}

Json path_to_json(const LatticePath& p) {
    Json out = Json::array();
    for (const auto& q : p) out.push_back({q.i, q.j});
    return out;
}

}  // namespace homplex
