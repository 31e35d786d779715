#include "homplex/complex.hpp"
#include "homplex/hom.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace homplex;

TEST_CASE("simplicial complex normalisation") {
    const SimplicialComplex k(4, {{2, 1}, {1, 2, 3}, {0}, {0}});
    CHECK(k.facets() == std::vector<VertexSet>{{0}, {1, 2, 3}});
    CHECK(k.dimension() == 2);
    CHECK(k.contains({1, 3}));
    CHECK_FALSE(k.contains({0, 1}));
    CHECK(f_vector(k) == std::vector<std::size_t>{4, 3, 1});
    CHECK(f_vector(simplex_boundary(4)) == std::vector<std::size_t>{4, 6, 4});
    CHECK(f_vector(skeleton(full_simplex(4), 1)) == std::vector<std::size_t>{4, 6});
    CHECK(is_subcomplex(simplex_boundary(4), full_simplex(4)));
    CHECK_FALSE(is_subcomplex(full_simplex(4), simplex_boundary(4)));
}

TEST_CASE("face budget is enforced") {
    CHECK_THROWS_AS(f_vector(full_simplex(12), 100), BudgetExceeded);
}

TEST_CASE("label tuple dimensions and faces") {
    const LabelTuple hom{{{0, 1}, {2, 3, 4}}, LabelMode::hom};
    const LabelTuple plus{{{0, 1}, {2, 3, 4}}, LabelMode::hom_plus};
    CHECK(hom.dimension() == 3);
    CHECK(plus.dimension() == 4);
    CHECK(faces_of_cell(hom).size() == 3 * 7);
    CHECK(faces_of_cell(plus).size() == 31);
}

TEST_CASE("projected cells") {
    const auto c = make_projected_cell({{0, 1}, {1, 2}}, 3);
    // Minkowski sum of two non-parallel segments: a parallelogram.
    CHECK(c.points == std::vector<Point>{{0, 1, 1}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}});
    CHECK(c.vertices == c.points);
    const auto d = make_projected_cell({{0, 1}, {0, 1}}, 2);
    // e0+e1 arises twice and is the midpoint of the segment.
    CHECK(d.points == std::vector<Point>{{0, 2}, {1, 1}, {1, 1}, {2, 0}});
    CHECK(d.vertices == std::vector<Point>{{0, 2}, {2, 0}});
}

TEST_CASE("proper intersection matches the circuit oracle") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 150; ++trial) {
        const int h = 3 + static_cast<int>(rng() % 2);
        auto random_parts = [&]() {
            std::vector<VertexSet> parts(2);
            for (auto& p : parts) {
                for (int v = 0; v < h; ++v)
                    if (rng() % 2) p.push_back(v);
                if (p.empty()) p.push_back(static_cast<int>(rng() % h));
            }
            return parts;
        };
        const auto p = make_projected_cell(random_parts(), h);
        const auto q = make_projected_cell(random_parts(), h);
        std::vector<Point> pts;
        for (const auto& x : p.vertices) pts.push_back(x);
        for (const auto& x : q.vertices)
            if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
        std::set<int> ps, qs;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (std::find(p.vertices.begin(), p.vertices.end(), pts[i]) != p.vertices.end()) ps.insert(static_cast<int>(i));
            if (std::find(q.vertices.begin(), q.vertices.end(), pts[i]) != q.vertices.end()) qs.insert(static_cast<int>(i));
        }
        BadPair w;
        const bool got = intersect_properly(p, q, &w);
        CHECK(got == oracle::intersect_properly(pts, ps, qs));
        if (!got) CHECK(is_affine_circuit(w.points, w.witness));
    }
}

TEST_CASE("common face test on small projections") {
    // Hom(K2, K3) projects onto the boundary of a triangle.
    const auto tri = projected_complex(complete_graph(2), complete_graph(3), HomMode::hom);
    CHECK(common_face_test(tri).is_complex);
    // Hom(K2, K4) contains two squares crossing in the interior of the octahedron.
    const auto k4 = projected_complex(complete_graph(2), complete_graph(4), HomMode::hom);
    const auto verdict = common_face_test(k4);
    CHECK_FALSE(verdict.is_complex);
    REQUIRE(verdict.bad_pair);
    CHECK(is_affine_circuit(verdict.bad_pair->points, verdict.bad_pair->witness));
}
