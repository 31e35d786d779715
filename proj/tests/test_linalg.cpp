#include "homplex/linalg.hpp"
#include "homplex/lp.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace homplex;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % (2 * range + 1)) - range;
    return m;
}

oracle::Matrix to_oracle(const IntMatrix& m) {
    oracle::Matrix out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
    CHECK(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}) == std::vector<Integer>{2, 4});
    CHECK(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}).empty());
    CHECK(smith_normal_form(IntMatrix(0, 3)).empty());
}

TEST_CASE("smith normal form matches determinantal divisors") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        const auto m = random_matrix(rng, r, c, 4);
        const auto snf = smith_normal_form(m);
        CHECK(snf == oracle::invariant_factors(to_oracle(m)));
        for (std::size_t i = 1; i < snf.size(); ++i) CHECK(snf[i] % snf[i - 1] == 0);
        CHECK(snf.size() == rank(m));
    }
}

TEST_CASE("rational kernel vectors are annihilated and independent") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        const auto m = random_matrix(rng, r, c, 3);
        const auto ker = rational_kernel(m);
        CHECK(ker.size() + rank(m) == c);
        std::vector<std::vector<Rational>> rows;
        for (const auto& k : ker) {
            for (std::size_t i = 0; i < r; ++i) {
                Rational s = 0;
                for (std::size_t j = 0; j < c; ++j) s += Rational(m(i, j)) * k[j];
                CHECK(s == 0);
            }
            std::size_t first = 0;
            while (k[first] == 0) ++first;
            CHECK(k[first] == 1);
            rows.push_back(k.entries);
        }
        CHECK(oracle::rank(rows) == ker.size());
    }
}

TEST_CASE("affine circuits agree with brute force") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3 + rng() % 4;
        std::vector<Point> pts;
        for (std::size_t i = 0; i < n; ++i) pts.push_back({static_cast<long>(rng() % 3), static_cast<long>(rng() % 3)});
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        std::set<oracle::SignedCircuit> expected;
        for (auto& c : oracle::circuits(pts))
            if (c.first.front() < c.second.front()) expected.insert(c);
        std::set<oracle::SignedCircuit> got;
        for (const auto& c : affine_circuits(pts, pts.size())) {
            CHECK(is_affine_circuit(pts, c));
            Rational sp = 0, sn = 0;
            for (const auto& x : c.positive_coefficients) sp += x;
            for (const auto& x : c.negative_coefficients) sn += x;
            CHECK(sp == 1);
            CHECK(sn == 1);
            got.insert({c.positive_support, c.negative_support});
        }
        CHECK(got == expected);
    }
}

TEST_CASE("circuit examples") {
    const std::vector<Point> square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    const auto cs = affine_circuits(square, 4);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].positive_support == std::vector<int>{0, 3});
    CHECK(cs[0].negative_support == std::vector<int>{1, 2});
    CHECK(cs[0].positive_coefficients == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK_THROWS_AS(affine_circuits(square, 5), std::invalid_argument);
    const std::vector<Point> line{{0}, {1}, {2}};
    const auto lc = affine_circuits(line, 3);
    REQUIRE(lc.size() == 1);
    CHECK(lc[0].positive_support == std::vector<int>{0, 2});
    CHECK(lc[0].negative_support == std::vector<int>{1});
}

TEST_CASE("conformal decomposition splits a dependency into sign-compatible circuits") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Point> pts;
        for (int i = 0; i < 6; ++i) pts.push_back({static_cast<long>(rng() % 4), static_cast<long>(rng() % 4)});
        // A random dependency from the kernel of the lifted matrix.
        std::vector<int> cols{0, 1, 2, 3, 4, 5};
        const auto ker = affine_kernel(pts, cols);
        if (ker.empty()) continue;
        std::vector<Rational> w(6);
        for (const auto& k : ker) {
            const long f = static_cast<long>(rng() % 5) - 2;
            for (std::size_t i = 0; i < 6; ++i) w[i] += f * k[i];
        }
        if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; })) continue;
        for (const auto& c : conformal_decomposition(pts, w)) {
            CHECK(is_affine_circuit(pts, c));
            for (int i : c.positive_support) CHECK(w[static_cast<std::size_t>(i)] > 0);
            for (int i : c.negative_support) CHECK(w[static_cast<std::size_t>(i)] < 0);
        }
    }
}

TEST_CASE("exact simplex") {
    // max x + y s.t. x + 2y + s = 4, 3x + y + t = 6
    const std::vector<std::vector<Rational>> a{{1, 2, 1, 0}, {3, 1, 0, 1}};
    const auto r = maximize(a, {4, 6}, {1, 1, 0, 0});
    REQUIRE(r.status == LpResult::Status::optimal);
    CHECK(r.value == Rational(14, 5));
    CHECK(maximize({{1, 1}}, {-1}, {1, 0}).status == LpResult::Status::infeasible);
    CHECK(maximize({{1, -1}}, {0}, {1, 0}).status == LpResult::Status::unbounded);
}

TEST_CASE("hull vertex flags") {
    std::vector<RationalVector> pts{to_rational({0, 0}), to_rational({2, 0}), to_rational({0, 2}), to_rational({1, 1}),
                                    to_rational({2, 0}), to_rational({1, 0})};
    CHECK(hull_vertex_flags(pts) == std::vector<bool>{true, true, true, false, false, false});
    const auto w = convex_weights(to_rational({1, 1}), {to_rational({0, 0}), to_rational({2, 2})});
    REQUIRE(w);
    CHECK((*w)[0] == Rational(1, 2));
    CHECK_FALSE(convex_weights(to_rational({3, 3}), {to_rational({0, 0}), to_rational({2, 2})}));
}

TEST_CASE("smallest face containing a centroid") {
    const std::vector<RationalVector> square{to_rational({0, 0}), to_rational({1, 0}), to_rational({0, 1}),
                                             to_rational({1, 1})};
    CHECK(smallest_face_containing(square, {0, 1}) == std::vector<int>{0, 1});
    CHECK(smallest_face_containing(square, {0, 3}) == std::vector<int>{0, 1, 2, 3});
    CHECK(smallest_face_containing(square, {2}) == std::vector<int>{2});
}

TEST_CASE("fraction strings") {
    CHECK(to_fraction_string(Rational(2, 6)) == "1/3");
    CHECK(to_fraction_string(Rational(-4, 2)) == "-2");
    CHECK(to_fraction_string(Rational(0)) == "0");
}
