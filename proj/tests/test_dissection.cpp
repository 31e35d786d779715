#include "homplex/dissection.hpp"
#include "homplex/homology.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <numeric>

using namespace homplex;

namespace {

// Number of components of the crossing graph restricted to the mask, by union-find.
int crossing_components(const std::vector<Diagonal>& diags, unsigned mask) {
    std::vector<int> parent(diags.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    int count = 0;
    for (std::size_t i = 0; i < diags.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        ++count;
        for (std::size_t j = 0; j < i; ++j) {
            if (!(mask >> j & 1)) continue;
            const auto [a, b] = std::pair{diags[i].a, diags[i].b};
            const auto [c, d] = std::pair{diags[j].a, diags[j].b};
            const bool cross = (a < c && c < b && b < d) || (c < a && a < d && d < b);
            if (!cross) continue;
            const int x = find(static_cast<int>(i)), y = find(static_cast<int>(j));
            if (x != y) {
                parent[static_cast<std::size_t>(x)] = y;
                --count;
            }
        }
    }
    return count;
}

VertexSet from_mask(unsigned mask, std::size_t n) {
    VertexSet out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace

TEST_CASE("allowable diagonals are those occurring in some dissection") {
    for (int k = 3; k <= 6; ++k)
        for (int m = 1; m <= 5; ++m) {
            const int n = m * (k - 2) + 2;
            std::set<std::pair<int, int>> seen;
            for (const auto& d : oracle::dissections(0, n - 1, k)) seen.insert(d.begin(), d.end());
            std::set<std::pair<int, int>> got;
            for (const auto& d : allowable_diagonals(k, m)) got.insert({d.a, d.b});
            CHECK(got == seen);
            CHECK(got.size() == static_cast<std::size_t>((m - 1) * n / 2));
        }
}

TEST_CASE("dissections agree with the recursive enumeration") {
    for (int k = 3; k <= 5; ++k)
        for (int m = 2; m <= 5; ++m) {
            const auto diags = allowable_diagonals(k, m);
            std::map<std::pair<int, int>, int> index;
            for (std::size_t i = 0; i < diags.size(); ++i) index[{diags[i].a, diags[i].b}] = static_cast<int>(i);
            std::vector<VertexSet> want;
            for (const auto& d : oracle::dissections(0, m * (k - 2) + 1, k)) {
                VertexSet v;
                for (const auto& e : d) v.push_back(index.at(e));
                std::sort(v.begin(), v.end());
                want.push_back(std::move(v));
            }
            std::sort(want.begin(), want.end());
            CHECK(dissections(k, m) == want);
            CHECK(Integer(static_cast<unsigned long>(want.size())) == fuss_count(k, m));
            CHECK(build_T(k, m).facets() == want);
        }
}

TEST_CASE("Fuss-Catalan and wedge counts") {
    CHECK(fuss_count(3, 3) == 5);
    CHECK(fuss_count(3, 4) == 14);
    CHECK(fuss_count(4, 3) == 12);
    CHECK(fuss_count(4, 4) == 55);
    CHECK(wedge_count(3, 3) == 1);
    CHECK(wedge_count(3, 4) == 1);
    CHECK(wedge_count(4, 3) == 5);
    CHECK(wedge_count(5, 3) == 12);
}

TEST_CASE("T is a wedge of spheres of the predicted count") {
    for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 3}, {5, 3}, {3, 5}}) {
        CAPTURE(k);
        CAPTURE(m);
        const auto h = reduced_homology(build_T(k, m));
        for (const auto& g : h) {
            if (g.dimension == m - 2) CHECK(Integer(static_cast<unsigned long>(g.rank)) == wedge_count(k, m));
            else CHECK(g.rank == 0);
            CHECK(g.torsion.empty());
        }
    }
}

TEST_CASE("crossing") {
    CHECK(crossing({0, 2}, {1, 3}, 4));
    CHECK_FALSE(crossing({0, 2}, {2, 4}, 6));
    CHECK_FALSE(crossing({0, 3}, {1, 2}, 6));
    CHECK(independence_graph(3, 3) == complement(crossing_graph(3, 3)));
    CHECK(clique_number(independence_graph(4, 4)) == 3);
}

TEST_CASE("transversal faces and membership in D_plus agree with brute force") {
    for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 3}}) {
        CAPTURE(k);
        CAPTURE(m);
        const auto diags = allowable_diagonals(k, m);
        const std::size_t h = diags.size();
        std::vector<bool> transversal(1u << h);
        for (unsigned mask = 1; mask < (1u << h); ++mask)
            transversal[mask] = crossing_components(diags, mask) >= m - 1;
        const auto dpt = build_D_plus_t(k, m);
        const auto dplus = build_D_plus(k, m);
        CHECK(dplus == dpt.complex);
        std::vector<VertexSet> want_transversal;
        for (unsigned mask = 1; mask < (1u << h); ++mask) {
            const auto x = from_mask(mask, h);
            CHECK(is_transversal_face(x, k, m) == transversal[mask]);
            if (transversal[mask]) want_transversal.push_back(x);
            bool in_d_plus = false;
            for (unsigned sup = mask; sup < (1u << h) && !in_d_plus; sup = (sup + 1) | mask)
                in_d_plus = transversal[sup];
            CHECK(is_face_of_D_plus(x, k, m) == in_d_plus);
            CHECK(dplus.contains(x) == in_d_plus);
        }
        std::sort(want_transversal.begin(), want_transversal.end());
        CHECK(dpt.transversal_faces == want_transversal);
    }
}

TEST_CASE("IC_Delta faces have clique components") {
    const int k = 3, m = 4;
    const auto diags = allowable_diagonals(k, m);
    const std::size_t h = diags.size();
    const auto ic = build_ic_delta(k, m);
    const auto cg = crossing_graph(k, m);
    for (unsigned mask = 1; mask < (1u << h); ++mask) {
        const auto x = from_mask(mask, h);
        bool ok = true;
        for (const auto& comp : components_within(cg, x))
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (std::size_t j = i + 1; j < comp.size(); ++j) ok = ok && cg.adjacent(comp[i], comp[j]);
        CHECK(ic.contains(x) == ok);
    }
    CHECK(ic_delta_transversal_faces(k, m) == build_D_plus_t(k, m).transversal_faces);
}

TEST_CASE("D_plus homology in small cases") {
    CHECK(reduced_ranks(reduced_homology(build_D_plus(4, 3))) == std::vector<std::size_t>{0, 1, 0, 0});
    for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 3}})
        CHECK_FALSE(has_torsion(reduced_homology(build_D_plus(k, m))));
}

TEST_CASE("dimensions and flips") {
    for (auto [k, m] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 3}, {4, 4}}) {
        CHECK(dimension_of_D(k, m).matches());
        CHECK(flip_graph(k, m) == flip_graph_by_exchange(k, m));
    }
    // Flips of triangulations of a pentagon form a 5-cycle.
    CHECK(flip_graph(3, 3).edge_count() == 5);
    CHECK_THROWS_AS(DissectionParams(2, 3), std::invalid_argument);
}

TEST_CASE("intersecting cells by matching") {
    const auto r = intersect_cells_by_matching({{0, 1}, {2}}, {{2, 3}, {1}});
    REQUIRE(r);
    CHECK(*r == std::vector<VertexSet>{{1}, {2}});
    CHECK_FALSE(intersect_cells_by_matching({{0}, {1}}, {{2}, {3}}));
}
