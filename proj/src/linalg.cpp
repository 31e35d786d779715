#include "homplex/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace homplex {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : row) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// Moves the smallest nonzero |entry| of the trailing block to (t, t).
bool place_min_pivot(IntMatrix& m, std::size_t t) {
    std::size_t br = 0, bc = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < m.rows(); ++i)
        for (std::size_t j = t; j < m.cols(); ++j) {
            const Integer& x = m(i, j);
            if (x == 0) continue;
            if (!found || abs(x) < best) {
                best = abs(x);
                br = i;
                bc = j;
                found = true;
                if (best == 1) goto done;
            }
        }
done:
    if (!found) return false;
    swap_rows(m, t, br);
    swap_cols(m, t, bc);
    return true;
}

}  // namespace

std::vector<Integer> smith_normal_form(IntMatrix m) {
    const std::size_t limit = std::min(m.rows(), m.cols());
    std::vector<Integer> diag;
    Integer q;
    for (std::size_t t = 0; t < limit; ++t) {
        if (!place_min_pivot(m, t)) break;
        for (;;) {
            bool clean = true;
            // Column below the pivot.
            for (std::size_t i = t + 1; i < m.rows(); ++i) {
                if (m(i, t) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t j = t; j < m.cols(); ++j) m(i, j) -= q * m(t, j);
                if (m(i, t) != 0) clean = false;
            }
            // Row right of the pivot.
            for (std::size_t j = t + 1; j < m.cols(); ++j) {
                if (m(t, j) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
                for (std::size_t i = t; i < m.rows(); ++i) m(i, j) -= q * m(i, t);
                if (m(t, j) != 0) clean = false;
            }
            if (!clean) {
                place_min_pivot(m, t);
                continue;
            }
            // Pivot must divide the trailing block; otherwise fold an offending row in.
            bool divides = true;
            for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < m.cols(); ++j)
                    if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
                        for (std::size_t c = t; c < m.cols(); ++c) m(t, c) += m(i, c);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        diag.push_back(abs(m(t, t)));
    }
    return diag;
}

std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        if (rows[r][c] != 1) {
            Rational inv = 1 / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

namespace {

std::vector<std::vector<Rational>> to_rational_rows(const IntMatrix& m) {
    std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

std::vector<RationalVector> kernel_from_rows(std::vector<std::vector<Rational>> rows, std::size_t cols) {
    const auto pivots = rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v{std::vector<Rational>(cols)};
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        // First nonzero entry normalized to 1.
        for (std::size_t j = 0; j < cols; ++j)
            if (v[j] != 0) {
                Rational lead = v[j];
                for (auto& x : v.entries) x /= lead;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t common_dimension(std::span<const Point> points) {
    if (points.empty()) return 0;
    const std::size_t d = points.front().size();
    for (const auto& p : points)
        if (p.size() != d) throw std::invalid_argument("points differ in dimension");
    return d;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
    auto rows = to_rational_rows(m);
    return rref(rows, m.cols()).size();
}

std::vector<RationalVector> rational_kernel(const IntMatrix& m) {
    return kernel_from_rows(to_rational_rows(m), m.cols());
}

std::vector<RationalVector> affine_kernel(std::span<const Point> points, std::span<const int> columns) {
    const std::size_t d = common_dimension(points);
    std::vector<std::vector<Rational>> rows(d + 1, std::vector<Rational>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const Point& p = points[static_cast<std::size_t>(columns[c])];
        for (std::size_t i = 0; i < d; ++i) rows[i][c] = static_cast<long>(p[i]);
        rows[d][c] = 1;
    }
    return kernel_from_rows(std::move(rows), columns.size());
}

namespace {

// Circuit from a dependency vector v over the given columns (full support).
Circuit circuit_from_vector(std::span<const int> columns, std::span<const Rational> v, bool flip) {
    Circuit c;
    Rational pos_sum = 0, neg_sum = 0;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        Rational x = flip ? Rational(-v[i]) : v[i];
        if (x > 0) {
            c.positive_support.push_back(columns[i]);
            c.positive_coefficients.push_back(x);
            pos_sum += x;
        } else if (x < 0) {
            c.negative_support.push_back(columns[i]);
            c.negative_coefficients.push_back(-x);
            neg_sum -= x;
        }
    }
    for (auto& x : c.positive_coefficients) x /= pos_sum;
    for (auto& x : c.negative_coefficients) x /= neg_sum;
    // Keep supports sorted with coefficients attached.
    auto sort_side = [](std::vector<int>& idx, std::vector<Rational>& co) {
        std::vector<std::size_t> order(idx.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return idx[a] < idx[b]; });
        std::vector<int> i2;
        std::vector<Rational> c2;
        for (auto o : order) {
            i2.push_back(idx[o]);
            c2.push_back(co[o]);
        }
        idx = std::move(i2);
        co = std::move(c2);
    };
    sort_side(c.positive_support, c.positive_coefficients);
    sort_side(c.negative_support, c.negative_coefficients);
    return c;
}

}  // namespace

std::vector<Circuit> affine_circuits(std::span<const Point> points, std::size_t max_support) {
    common_dimension(points);
    const std::size_t n = points.size();
    if (max_support > n) throw std::invalid_argument("affine_circuits: max_support exceeds point count");
    std::vector<Circuit> out;
    for (std::size_t size = 2; size <= max_support; ++size) {
        std::vector<int> cols(size);
        for (std::size_t i = 0; i < size; ++i) cols[i] = static_cast<int>(i);
        for (;;) {
            auto ker = affine_kernel(points, cols);
            if (ker.size() == 1) {
                const auto& v = ker.front().entries;
                if (std::none_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) {
                    // Smallest index on the positive side.
                    out.push_back(circuit_from_vector(cols, v, v.front() < 0));
                }
            }
            // Next combination.
            std::size_t i = size;
            while (i > 0 && static_cast<std::size_t>(cols[i - 1]) == n - size + i - 1) --i;
            if (i == 0) break;
            ++cols[i - 1];
            for (std::size_t j = i; j < size; ++j) cols[j] = cols[j - 1] + 1;
        }
    }
    return out;
}

bool is_affine_circuit(std::span<const Point> points, const Circuit& c) {
    const std::size_t d = common_dimension(points);
    if (c.positive_support.empty() || c.negative_support.empty()) return false;
    if (c.positive_support.size() != c.positive_coefficients.size() ||
        c.negative_support.size() != c.negative_coefficients.size())
        return false;
    Rational ps = 0, ns = 0;
    std::vector<Rational> lhs(d), rhs(d);
    for (std::size_t i = 0; i < c.positive_support.size(); ++i) {
        if (c.positive_coefficients[i] <= 0) return false;
        ps += c.positive_coefficients[i];
        const Point& p = points[static_cast<std::size_t>(c.positive_support[i])];
        for (std::size_t k = 0; k < d; ++k) lhs[k] += c.positive_coefficients[i] * static_cast<long>(p[k]);
    }
    for (std::size_t i = 0; i < c.negative_support.size(); ++i) {
        if (c.negative_coefficients[i] <= 0) return false;
        ns += c.negative_coefficients[i];
        const Point& p = points[static_cast<std::size_t>(c.negative_support[i])];
        for (std::size_t k = 0; k < d; ++k) rhs[k] += c.negative_coefficients[i] * static_cast<long>(p[k]);
    }
    if (ps != 1 || ns != 1 || lhs != rhs) return false;
    std::vector<int> all = c.positive_support;
    all.insert(all.end(), c.negative_support.begin(), c.negative_support.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    // Minimal iff the kernel on the support is one-dimensional.
    return affine_kernel(points, all).size() == 1;
}

std::vector<Circuit> conformal_decomposition(std::span<const Point> points, std::span<const Rational> w) {
    common_dimension(points);
    if (w.size() != points.size()) throw std::invalid_argument("conformal_decomposition: length mismatch");
    std::vector<Rational> residual(w.begin(), w.end());
    std::vector<Circuit> out;
    for (;;) {
        std::vector<int> support;
        for (std::size_t i = 0; i < residual.size(); ++i)
            if (residual[i] != 0) support.push_back(static_cast<int>(i));
        if (support.empty()) break;

        // Shrink a conformal copy of residual until its support is a circuit.
        std::vector<int> cols = support;
        std::vector<Rational> cur;
        for (int i : cols) cur.push_back(residual[static_cast<std::size_t>(i)]);
        for (;;) {
            auto ker = affine_kernel(points, cols);
            if (ker.empty()) throw std::invalid_argument("conformal_decomposition: w is not an affine dependency");
            if (ker.size() == 1) break;
            // A kernel vector not parallel to cur.
            const std::vector<Rational>* u = nullptr;
            for (const auto& k : ker) {
                bool parallel = true;
                std::size_t first = 0;
                while (k[first] == 0) ++first;
                const Rational ratio = cur[first] / k[first];
                for (std::size_t i = 0; i < k.size(); ++i)
                    if (cur[i] != ratio * k[i]) {
                        parallel = false;
                        break;
                    }
                if (!parallel) {
                    u = &k.entries;
                    break;
                }
            }
            std::vector<Rational> dir = *u;
            bool has_agree = false;
            for (std::size_t i = 0; i < dir.size(); ++i)
                if (dir[i] * cur[i] > 0) has_agree = true;
            if (!has_agree)
                for (auto& x : dir) x = -x;
            bool have_t = false;
            Rational t;
            for (std::size_t i = 0; i < dir.size(); ++i)
                if (dir[i] * cur[i] > 0) {
                    Rational r = cur[i] / dir[i];
                    if (!have_t || r < t) {
                        t = r;
                        have_t = true;
                    }
                }
            std::vector<int> ncols;
            std::vector<Rational> ncur;
            for (std::size_t i = 0; i < cur.size(); ++i) {
                Rational x = cur[i] - t * dir[i];
                if (x != 0) {
                    ncols.push_back(cols[i]);
                    ncur.push_back(x);
                }
            }
            cols = std::move(ncols);
            cur = std::move(ncur);
        }
        // Subtract the largest multiple of cur that keeps residual conformal.
        bool have_t = false;
        Rational t;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            Rational r = residual[static_cast<std::size_t>(cols[i])] / cur[i];
            if (!have_t || r < t) {
                t = r;
                have_t = true;
            }
        }
        for (std::size_t i = 0; i < cols.size(); ++i) residual[static_cast<std::size_t>(cols[i])] -= t * cur[i];
        out.push_back(circuit_from_vector(cols, cur, false));
    }
    return out;
}

std::string to_fraction_string(const Rational& in) {
    Rational q = in;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace homplex
