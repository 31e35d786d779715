#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace homplex {

using Integer = mpz_class;
using Rational = mpq_class;

// Integer point; projected cells store g-scaled coordinates.
using Point = std::vector<std::int64_t>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix transposed() const;
    bool is_zero() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

struct RationalVector {
    std::vector<Rational> entries;

    std::size_t size() const { return entries.size(); }
    Rational& operator[](std::size_t i) { return entries[i]; }
    const Rational& operator[](std::size_t i) const { return entries[i]; }

    friend bool operator==(const RationalVector& a, const RationalVector& b) { return a.entries == b.entries; }
    friend bool operator<(const RationalVector& a, const RationalVector& b) { return a.entries < b.entries; }
};

// Minimal affine dependency sum_{i in P} a_i p_i = sum_{j in N} b_j p_j with
// a, b > 0 and sum a = sum b = 1. Supports are sorted index lists.
struct Circuit {
    std::vector<int> positive_support;
    std::vector<int> negative_support;
    std::vector<Rational> positive_coefficients;
    std::vector<Rational> negative_coefficients;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

// Nonzero invariant factors d_1 | d_2 | ... (all positive).
std::vector<Integer> smith_normal_form(IntMatrix m);

std::size_t rank(const IntMatrix& m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows, std::size_t cols);

// Basis of {x : m x = 0}; one vector per free column, first nonzero entry 1.
std::vector<RationalVector> rational_kernel(const IntMatrix& m);

// Kernel of the lifted matrix [p_i; 1] restricted to the given columns.
std::vector<RationalVector> affine_kernel(std::span<const Point> points, std::span<const int> columns);

// All circuits with support size <= max_support, positive side holding the
// smallest index. Throws if points differ in dimension.
std::vector<Circuit> affine_circuits(std::span<const Point> points, std::size_t max_support);

// True iff c is a minimal affine dependency among points.
bool is_affine_circuit(std::span<const Point> points, const Circuit& c);

// Splits an affine dependency w (sum w_i (p_i,1) = 0) into circuits whose
// signs agree with w. Positive parts of the result are subsets of {w > 0}.
std::vector<Circuit> conformal_decomposition(std::span<const Point> points, std::span<const Rational> w);

// "p/q", or "p" when q = 1.
std::string to_fraction_string(const Rational& q);

}  // namespace homplex
