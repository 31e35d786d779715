#include "homplex/json_io.hpp"
#include "homplex/dissection.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

using namespace homplex;

TEST_CASE("graph families") {
    CHECK(parse_graph_spec("K4") == complete_graph(4));
    CHECK(parse_graph_spec("C5") == cycle_graph(5));
    CHECK(parse_graph_spec("E3") == empty_graph(3));
    CHECK(parse_graph_spec("I4_3") == independence_graph(4, 3));
    CHECK(parse_graph_spec("S2_3") == staircase_graph(2, 3));
    CHECK_THROWS_AS(parse_graph_spec("C2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("Q7"), std::invalid_argument);
}

TEST_CASE("graph JSON round trip") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(rng() % 7);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        CHECK(graph_from_json(graph_to_json(g)) == g);
        CHECK(graph_from_json(Json::parse(graph_to_json(g).dump())) == g);
    }
    CHECK(graph_to_json(Graph(3, {{1, 2}})).dump() == R"({"n":3,"edges":[[1,2]]})");
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"edges":[[0,2]]})")), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"edges":[[0]]})")), std::invalid_argument);
}

TEST_CASE("graph from a file") {
    const std::string path = "homplex_test_graph.json";
    {
        std::ofstream out(path);
        out << R"({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]})";
    }
    CHECK(parse_graph_spec(path) == cycle_graph(4));
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(parse_graph_spec(path), std::invalid_argument);
    std::remove(path.c_str());
}

TEST_CASE("fractions and points") {
    CHECK(fraction(Rational(4, 6)) == "2/3");
    CHECK(fraction(Rational(-3, 6)) == "-1/2");
    CHECK(fraction(Rational(8, 2)) == "4");
    CHECK(scaled_point_to_json({3, 0, 2}, 3).dump() == R"(["1","0","2/3"])");
}

TEST_CASE("complex and homology JSON") {
    const auto j = complex_to_json(simplex_boundary(3));
    CHECK(j.at("vertex_count") == 3);
    CHECK(j.at("dimension") == 1);
    CHECK(j.at("f_vector") == Json{3, 3});
    CHECK(j.at("facets").size() == 3);
    const auto h = homology_to_json(reduced_homology(simplex_boundary(3)));
    CHECK(h.dump() == R"([{"dimension":0,"rank":0,"torsion":[]},{"dimension":1,"rank":1,"torsion":[]}])");
}

TEST_CASE("hom complex JSON") {
    const auto j = hom_complex_to_json(build_hom(complete_graph(2), complete_graph(4), HomMode::hom));
    CHECK(j.at("mode") == "hom");
    CHECK(j.at("empty") == false);
    CHECK(j.at("f_vector") == Json{12, 24, 14});
    CHECK(j.at("maximal_cells").size() == 14);
    const auto e = hom_complex_to_json(build_hom(complete_graph(3), cycle_graph(5), HomMode::hom));
    CHECK(e.at("empty") == true);
    CHECK(path_to_json({{1, 1}, {2, 1}}).dump() == "[[1,1],[2,1]]");
}
