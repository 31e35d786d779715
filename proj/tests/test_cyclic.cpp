#include "homplex/cyclic.hpp"
#include "homplex/dissection.hpp"
#include "homplex/homology.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace homplex;

namespace {

Integer binom(int n, int k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

// Facets of the cyclic polytope on the moment curve t_i = i by orientation
// determinants. A lower facet has every other point above its hyperplane.
struct MomentCurve {
    int n, d;

    std::vector<Integer> row(int t) const {
        std::vector<Integer> r{1};
        Integer x = 1;
        for (int e = 1; e <= d; ++e) {
            x *= t;
            r.push_back(x);
        }
        return r;
    }

    int orientation(const IndexSet& s, const std::vector<Integer>& last) const {
        oracle::Matrix m;
        for (int i : s) m.push_back(row(i));
        m.push_back(last);
        return sgn(oracle::det(m));
    }

    // 0: not a facet, 1: lower facet, -1: upper facet.
    int classify(const IndexSet& s) const {
        int side = 0;
        for (int q = 1; q <= n; ++q) {
            if (std::find(s.begin(), s.end(), q) != s.end()) continue;
            const int o = orientation(s, row(q));
            if (o == 0 || (side != 0 && o != side)) return 0;
            side = o;
        }
        std::vector<Integer> up(static_cast<std::size_t>(d + 1), 0);
        up.back() = 1;
        return side == orientation(s, up) ? 1 : -1;
    }
};

std::vector<IndexSet> all_subsets(int n, int k) {
    std::vector<IndexSet> out;
    oracle::subsets(static_cast<std::size_t>(n), static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& s) {
        IndexSet x;
        for (auto i : s) x.push_back(static_cast<int>(i) + 1);
        out.push_back(std::move(x));
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("facets and lower facets agree with the moment curve") {
    for (int d = 2; d <= 6; d += 2)
        for (int n = d + 1; n <= d + 4; ++n) {
            CAPTURE(n);
            CAPTURE(d);
            const MomentCurve mc{n, d};
            std::vector<IndexSet> facets, lower;
            for (const auto& s : all_subsets(n, d)) {
                const int c = mc.classify(s);
                if (c != 0) facets.push_back(s);
                if (c == 1) lower.push_back(s);
            }
            CHECK(cyclic_facets(n, d) == facets);
            CHECK(lower_facets(n, d) == lower);
        }
    CHECK(lower_facets(8, 4).size() == 15);
}

TEST_CASE("Gale evenness") {
    CHECK(satisfies_gale_evenness({2, 3, 5, 6}, 6));
    CHECK_FALSE(satisfies_gale_evenness({2, 4}, 5));
    CHECK(satisfies_gale_evenness({1, 4, 5}, 5));
    CHECK(is_cyclic_facet({1, 2, 3, 6}, 6, 4));
    CHECK_FALSE(is_lower_facet({1, 2, 3, 6}, 6, 4));
    CHECK_FALSE(is_cyclic_facet({1, 3, 5, 6}, 6, 4));
    CHECK(is_lower_facet({2, 3, 5, 6}, 6, 4));
    CHECK_FALSE(is_lower_facet({1, 3, 4, 6}, 6, 4));
    CHECK(is_cyclic_face({3}, 6, 4));
}

TEST_CASE("strict lower faces by brute force") {
    const int n = 7, d = 4;
    const auto facets = cyclic_facets(n, d);
    for (int size = 0; size <= d; ++size)
        for (const auto& g : all_subsets(n, size)) {
            bool face = false, all_lower = true;
            for (const auto& f : facets)
                if (std::includes(f.begin(), f.end(), g.begin(), g.end())) {
                    face = true;
                    all_lower = all_lower && is_lower_facet(f, n, d);
                }
            CHECK(is_cyclic_face(g, n, d) == face);
            CHECK(is_strict_lower_face(g, n, d) == (face && all_lower));
        }
}

TEST_CASE("chi and its inverse") {
    CHECK(chi({2, 3, 5, 6}, 6, 4) == Composition{1, 1, 0});
    CHECK(chi_inverse({1, 1, 0}) == IndexSet{2, 3, 5, 6});
    CHECK(chi_inverse({0, 0}) == IndexSet{1, 2});
    for (int r = 1; r <= 4; ++r)
        for (int s = 2; s <= 4; ++s) {
            const int d = 2 * s - 2;
            const auto comps = compositions(r, s);
            CHECK(Integer(static_cast<unsigned long>(comps.size())) == binom(r + s - 1, s - 1));
            CHECK(std::is_sorted(comps.begin(), comps.end()));
            std::vector<IndexSet> images;
            for (const auto& c : comps) {
                const auto f = chi_inverse(c);
                CHECK(is_lower_facet(f, r + d, d));
                CHECK(chi(f, r + d, d) == c);
                images.push_back(f);
            }
            std::sort(images.begin(), images.end());
            CHECK(images == lower_facets(r + d, d));
        }
}

TEST_CASE("composition adjacency") {
    CHECK(composition_adjacent({2, 0, 0}, {1, 1, 0}));
    CHECK(composition_adjacent({2, 0, 0}, {1, 0, 1}));
    CHECK_FALSE(composition_adjacent({1, 1, 0}, {0, 1, 1}));
    CHECK_FALSE(composition_adjacent({2, 0, 0}, {0, 2, 0}));
    CHECK_FALSE(composition_adjacent({1, 1}, {1, 1}));
    CHECK(composition_graph(2, 3).edge_count() == 8);
}

TEST_CASE("staircase triangulation") {
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 4; ++s) {
            const auto st = staircase_triangulation(r, s);
            CHECK(Integer(static_cast<unsigned long>(st.facets().size())) == binom(r + s - 2, r - 1));
            CHECK(st.dimension() == r + s - 2);
            if (r * s > 1)
                for (const auto& g : reduced_homology(st)) CHECK(g.rank == 0);
            for (const auto& p : partial_paths(r, s)) CHECK(is_partial_path(p, r, s));
        }
    CHECK(grid_vertex({2, 3}, 4) == 6);
    CHECK(grid_point(6, 4) == GridPoint{2, 3});
    CHECK_FALSE(is_partial_path({{1, 2}, {2, 1}}, 2, 2));
}

TEST_CASE("paths and compositions") {
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 3; ++s) {
            const auto mins = minimal_paths(r, s);
            CHECK(mins.size() == compositions(r, s).size());
            for (const auto& p : mins) CHECK(minimal_path_of(a_vector(p, s)) == p);
            for (const auto& p : transversal_paths(r, s)) {
                std::set<int> cols;
                for (const auto& q : p) cols.insert(q.i);
                CHECK(static_cast<int>(cols.size()) == r);
            }
        }
    CHECK(minimal_path_of({2, 0, 1}) == LatticePath{{1, 1}, {2, 1}, {3, 3}});
}

TEST_CASE("phi and psi are inverse on the composition complex") {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {4, 2}}) {
        for (const auto& p : transversal_paths(r, s)) {
            const auto g = phi(p, r, s);
            CHECK(is_strict_lower_face(g, r + 2 * s - 2, 2 * s - 2));
            CHECK(psi(g, r, s) == p);
        }
        CHECK(verify_composition_duality(r, s).passed());
    }
    const auto cc = composition_complex(2, 3);
    CHECK(cc.vertices.size() == 6);
    CHECK(std::count(cc.cell_dimension.begin(), cc.cell_dimension.end(), 2) == 3);
}

TEST_CASE("staircase embedding into the independence graph") {
    const auto e = embed_staircase(4, 3, 2, 2);
    CHECK(e.size() == 4);
    const auto ind = independence_graph(4, 3);
    const auto st = staircase_graph(2, 2);
    for (auto [u, v] : st.edges()) CHECK(ind.adjacent(e[static_cast<std::size_t>(u)], e[static_cast<std::size_t>(v)]));
    CHECK(verify_staircase_embedding(4, 3, 2, 2).passed());
    CHECK_THROWS_AS(embed_staircase(4, 3, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(embed_staircase(4, 3, 2, 4), std::invalid_argument);
    const auto big = verify_staircase_embedding(4, 6, 4, 3);
    CHECK(big.is_subgraph);
    CHECK_FALSE(big.is_induced);
    CHECK(big.extra_independent_pairs == 9);
}
