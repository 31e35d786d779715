#include "homplex/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace homplex {

namespace {

using Row = std::vector<Rational>;

class Tableau {
public:
    Tableau(std::vector<Row> rows, std::vector<int> basis) : t_(std::move(rows)), basis_(std::move(basis)) {}

    // Objective row holds reduced costs; last entry holds the current value.
    void set_objective(const std::vector<Rational>& c) {
        const std::size_t width = t_.front().size();
        obj_.assign(width, Rational(0));
        for (std::size_t j = 0; j < c.size(); ++j) obj_[j] = -c[j];
        for (std::size_t i = 0; i < t_.size(); ++i) {
            const Rational f = obj_[static_cast<std::size_t>(basis_[i])];
            if (f == 0) continue;
            for (std::size_t j = 0; j < width; ++j)
                if (t_[i][j] != 0) obj_[j] -= f * t_[i][j];
        }
    }

    // false when unbounded.
    bool optimize(std::size_t eligible_cols) {
        for (;;) {
            std::size_t enter = eligible_cols;
            for (std::size_t j = 0; j < eligible_cols; ++j)
                if (obj_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == eligible_cols) return true;
            const std::size_t rhs = t_.front().size() - 1;
            std::size_t leave = t_.size();
            Rational best;
            for (std::size_t i = 0; i < t_.size(); ++i) {
                if (t_[i][enter] <= 0) continue;
                Rational ratio = t_[i][rhs] / t_[i][enter];
                if (leave == t_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == t_.size()) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const std::size_t width = t_[r].size();
        const Rational inv = 1 / t_[r][c];
        for (std::size_t j = 0; j < width; ++j)
            if (t_[r][j] != 0) t_[r][j] *= inv;
        auto eliminate = [&](Row& row) {
            const Rational f = row[c];
            if (f == 0) return;
            for (std::size_t j = 0; j < width; ++j)
                if (t_[r][j] != 0) row[j] -= f * t_[r][j];
        };
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (i != r) eliminate(t_[i]);
        eliminate(obj_);
        basis_[r] = static_cast<int>(c);
    }

    const Rational& value() const { return obj_.back(); }
    std::vector<Row>& rows() { return t_; }
    std::vector<int>& basis() { return basis_; }

private:
    std::vector<Row> t_;
    std::vector<int> basis_;
    Row obj_;
};

}  // namespace

LpResult maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw std::invalid_argument("maximize: rhs length mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("maximize: row length mismatch");

    LpResult result;
    if (m == 0) {
        result.x.assign(n, Rational(0));
        for (const auto& cj : c)
            if (cj > 0) {
                result.status = LpResult::Status::unbounded;
                return result;
            }
        result.status = LpResult::Status::optimal;
        result.value = 0;
        return result;
    }

    // Phase 1 with one artificial per row.
    std::vector<Row> rows(m, Row(n + m + 1));
    std::vector<int> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        rows[i][n + i] = 1;
        rows[i][n + m] = flip ? Rational(-b[i]) : b[i];
        basis[i] = static_cast<int>(n + i);
    }
    Tableau tab(std::move(rows), std::move(basis));
    std::vector<Rational> phase1(n + m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
    tab.set_objective(phase1);
    tab.optimize(n + m);
    if (tab.value() < 0) return result;

    // Drive artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab.rows().size();) {
        if (static_cast<std::size_t>(tab.basis()[i]) < n) {
            ++i;
            continue;
        }
        std::size_t col = n;
        for (std::size_t j = 0; j < n; ++j)
            if (tab.rows()[i][j] != 0) {
                col = j;
                break;
            }
        if (col < n) {
            tab.pivot(i, col);
            ++i;
        } else {
            tab.rows().erase(tab.rows().begin() + static_cast<std::ptrdiff_t>(i));
            tab.basis().erase(tab.basis().begin() + static_cast<std::ptrdiff_t>(i));
        }
    }
    for (auto& row : tab.rows()) {
        Rational rhs = row.back();
        row.resize(n);
        row.push_back(rhs);
    }

    if (tab.rows().empty()) {
        // All rows were redundant: every x >= 0 is feasible.
        result.x.assign(n, Rational(0));
        for (const auto& cj : c)
            if (cj > 0) {
                result.status = LpResult::Status::unbounded;
                return result;
            }
        result.status = LpResult::Status::optimal;
        result.value = 0;
        return result;
    }

    tab.set_objective(c);
    if (!tab.optimize(n)) {
        result.status = LpResult::Status::unbounded;
        return result;
    }
    result.status = LpResult::Status::optimal;
    result.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < tab.rows().size(); ++i)
        result.x[static_cast<std::size_t>(tab.basis()[i])] = tab.rows()[i].back();
    result.value = tab.value();
    return result;
}

std::optional<RelativeInterior> relative_interior(const std::vector<std::vector<Rational>>& a,
                                                  const std::vector<Rational>& b) {
    const std::size_t n = a.empty() ? 0 : a.front().size();
    std::vector<bool> found(n, false);
    std::vector<Rational> sum(n, Rational(0));
    std::size_t samples = 0;
    for (;;) {
        std::vector<Rational> c(n, Rational(0));
        bool any = false;
        for (std::size_t j = 0; j < n; ++j)
            if (!found[j]) {
                c[j] = 1;
                any = true;
            }
        if (!any && samples > 0) break;
        LpResult r = maximize(a, b, c);
        if (r.status == LpResult::Status::infeasible) {
            if (samples == 0) return std::nullopt;
            throw std::logic_error("relative_interior: feasibility changed between iterations");
        }
        if (r.status == LpResult::Status::unbounded) throw std::invalid_argument("relative_interior: unbounded polyhedron");
        for (std::size_t j = 0; j < n; ++j) {
            sum[j] += r.x[j];
            if (r.x[j] > 0) found[j] = true;
        }
        ++samples;
        if (r.value == 0) break;
    }
    RelativeInterior out;
    out.support = found;
    out.point = std::move(sum);
    for (auto& x : out.point) x /= static_cast<long>(samples);
    return out;
}

std::optional<std::vector<Rational>> convex_weights(const RationalVector& target,
                                                    const std::vector<RationalVector>& points) {
    const std::size_t d = target.size();
    const std::size_t n = points.size();
    std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(n));
    std::vector<Rational> b(d + 1);
    for (std::size_t j = 0; j < n; ++j) {
        if (points[j].size() != d) throw std::invalid_argument("convex_weights: dimension mismatch");
        for (std::size_t i = 0; i < d; ++i) a[i][j] = points[j][i];
        a[d][j] = 1;
    }
    for (std::size_t i = 0; i < d; ++i) b[i] = target[i];
    b[d] = 1;
    LpResult r = maximize(a, b, std::vector<Rational>(n, Rational(0)));
    if (r.status != LpResult::Status::optimal) return std::nullopt;
    return r.x;
}

std::vector<bool> hull_vertex_flags(const std::vector<RationalVector>& points) {
    std::vector<bool> flags(points.size(), false);
    std::vector<std::size_t> distinct;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool seen = false;
        for (auto j : distinct)
            if (points[j] == points[i]) {
                seen = true;
                break;
            }
        if (!seen) distinct.push_back(i);
    }
    for (auto i : distinct) {
        std::vector<RationalVector> others;
        for (auto j : distinct)
            if (j != i) others.push_back(points[j]);
        flags[i] = others.empty() || !convex_weights(points[i], others);
    }
    return flags;
}

std::vector<int> smallest_face_containing(const std::vector<RationalVector>& points, const std::vector<int>& subset) {
    if (points.empty() || subset.empty()) throw std::invalid_argument("smallest_face_containing: empty input");
    const std::size_t d = points.front().size();
    RationalVector y{std::vector<Rational>(d)};
    for (int s : subset)
        for (std::size_t i = 0; i < d; ++i) y[i] += points[static_cast<std::size_t>(s)][i];
    for (auto& x : y.entries) x /= static_cast<long>(subset.size());
    const std::size_t n = points.size();
    std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(n));
    std::vector<Rational> b(d + 1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < d; ++i) a[i][j] = points[j][i];
        a[d][j] = 1;
    }
    for (std::size_t i = 0; i < d; ++i) b[i] = y[i];
    b[d] = 1;
    auto ri = relative_interior(a, b);
    if (!ri) throw std::logic_error("smallest_face_containing: centroid outside hull");
    std::vector<int> out;
    for (std::size_t j = 0; j < n; ++j)
        if (ri->support[j]) out.push_back(static_cast<int>(j));
    return out;
}

RationalVector to_rational(const Point& p) {
    RationalVector v;
    v.entries.reserve(p.size());
    for (auto x : p) v.entries.emplace_back(static_cast<long>(x));
    return v;
}

}  // namespace homplex
