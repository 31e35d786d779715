#include "homplex/homology.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace homplex;

namespace {

SimplicialComplex random_complex(std::mt19937& rng, int n) {
    std::vector<VertexSet> facets;
    const int count = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < count; ++i) {
        VertexSet f;
        for (int v = 0; v < n; ++v)
            if (rng() % 3 == 0) f.push_back(v);
        if (f.empty()) f.push_back(static_cast<int>(rng() % n));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(n, std::move(facets));
}

// Euler characteristic from faces and from reduced Betti numbers.
long euler_from_faces(const SimplicialComplex& k) {
    long chi = 0, sign = 1;
    for (auto f : f_vector(k)) {
        chi += sign * static_cast<long>(f);
        sign = -sign;
    }
    return chi;
}

}  // namespace

TEST_CASE("spheres") {
    for (int n = 2; n <= 7; ++n) {
        std::vector<std::size_t> ranks(static_cast<std::size_t>(n - 1), 0);
        ranks.back() = 1;
        CHECK(reduced_ranks(reduced_homology(simplex_boundary(n))) == ranks);
    }
    CHECK(reduced_ranks(reduced_homology(full_simplex(5))) == std::vector<std::size_t>(5, 0));
    CHECK_THROWS_AS(reduced_homology(SimplicialComplex()), std::invalid_argument);
}

TEST_CASE("seven-vertex torus") {
    std::vector<VertexSet> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    const SimplicialComplex torus(7, facets);
    CHECK(f_vector(torus) == std::vector<std::size_t>{7, 21, 14});
    const auto h = reduced_homology(torus);
    CHECK(reduced_ranks(h) == std::vector<std::size_t>{0, 2, 1});
    CHECK_FALSE(has_torsion(h));
}

TEST_CASE("six-vertex real projective plane") {
    const SimplicialComplex rp2(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                    {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
    CHECK(f_vector(rp2) == std::vector<std::size_t>{6, 15, 10});
    const auto h = reduced_homology(rp2);
    REQUIRE(h.size() == 3);
    CHECK(h[1].rank == 0);
    CHECK(h[1].torsion == std::vector<Integer>{2});
    CHECK(h[2].rank == 0);
    CHECK(has_torsion(h));
}

TEST_CASE("boundary of a boundary vanishes") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const auto k = random_complex(rng, 3 + static_cast<int>(rng() % 5));
        const auto data = boundary_matrices(k);
        for (std::size_t d = 2; d < data.boundary.size(); ++d)
            CHECK((data.boundary[d - 1] * data.boundary[d]).nonzeros() == 0);
    }
}

TEST_CASE("Euler characteristic matches reduced Betti numbers") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const auto k = random_complex(rng, 3 + static_cast<int>(rng() % 5));
        long betti = 1;  // reduced: chi = 1 + sum (-1)^d rank
        long sign = 1;
        for (const auto& g : reduced_homology(k)) {
            betti += sign * static_cast<long>(g.rank);
            sign = -sign;
        }
        CHECK(betti == euler_from_faces(k));
    }
}

TEST_CASE("sparse smith normal form agrees with the dense one and the oracle") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        SparseIntMatrix s;
        s.rows = 1 + rng() % 5;
        s.cols = 1 + rng() % 5;
        s.columns.resize(s.cols);
        oracle::Matrix o(s.rows, std::vector<Integer>(s.cols));
        for (std::size_t c = 0; c < s.cols; ++c)
            for (std::size_t r = 0; r < s.rows; ++r) {
                if (rng() % 2) continue;
                const long v = static_cast<long>(rng() % 7) - 3;
                if (v == 0) continue;
                s.columns[c].push_back({static_cast<int>(r), Integer(v)});
                o[r][c] = v;
            }
        const auto sparse = smith_normal_form(s);
        CHECK(sparse == smith_normal_form(s.to_dense()));
        CHECK(sparse == oracle::invariant_factors(o));
    }
}
