#include "homplex/homology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace homplex {

IntMatrix SparseIntMatrix::to_dense() const {
    IntMatrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [r, v] : columns[j]) m(static_cast<std::size_t>(r), j) = v;
    return m;
}

std::size_t SparseIntMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("SparseIntMatrix: dimension mismatch in product");
    SparseIntMatrix out{a.rows, b.cols, std::vector<std::vector<std::pair<int, Integer>>>(b.cols)};
    std::vector<Integer> acc(a.rows);
    std::vector<int> touched;
    for (std::size_t j = 0; j < b.cols; ++j) {
        touched.clear();
        for (const auto& [k, bv] : b.columns[j])
            for (const auto& [i, av] : a.columns[static_cast<std::size_t>(k)]) {
                if (acc[static_cast<std::size_t>(i)] == 0) touched.push_back(i);
                acc[static_cast<std::size_t>(i)] += av * bv;
            }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (int i : touched) {
            auto& x = acc[static_cast<std::size_t>(i)];
            if (x != 0) out.columns[j].emplace_back(i, x);
            x = 0;
        }
    }
    return out;
}

namespace {

using Column = std::vector<std::pair<int, Integer>>;

class UnitEliminator {
public:
    explicit UnitEliminator(const SparseIntMatrix& m)
        : rows_(m.rows), cols_(m.columns), col_alive_(m.cols, true), row_cols_(m.rows), row_count_(m.rows, 0) {
        for (std::size_t j = 0; j < cols_.size(); ++j)
            for (const auto& [r, v] : cols_[j]) {
                row_cols_[static_cast<std::size_t>(r)].push_back(static_cast<int>(j));
                ++row_count_[static_cast<std::size_t>(r)];
            }
    }

    std::size_t run() {
        std::size_t pivots = 0;
        for (;;) {
            std::vector<std::size_t> order;
            for (std::size_t j = 0; j < cols_.size(); ++j)
                if (col_alive_[j] && !cols_[j].empty()) order.push_back(j);
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return cols_[a].size() < cols_[b].size(); });
            std::size_t round = 0;
            for (auto j : order) {
                if (!col_alive_[j] || cols_[j].empty()) continue;
                int best_row = -1;
                std::size_t best_count = 0;
                for (const auto& [r, v] : cols_[j])
                    if ((v == 1 || v == -1) &&
                        (best_row < 0 || row_count_[static_cast<std::size_t>(r)] < best_count)) {
                        best_row = r;
                        best_count = row_count_[static_cast<std::size_t>(r)];
                    }
                if (best_row < 0) continue;
                pivot(j, best_row);
                ++round;
            }
            pivots += round;
            if (round == 0) break;
        }
        return pivots;
    }

    IntMatrix residual() const {
        std::vector<std::size_t> live_cols;
        std::vector<int> row_map(rows_, -1);
        std::size_t live_rows = 0;
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            if (!col_alive_[j] || cols_[j].empty()) continue;
            live_cols.push_back(j);
            for (const auto& [r, v] : cols_[j])
                if (row_map[static_cast<std::size_t>(r)] < 0) row_map[static_cast<std::size_t>(r)] = static_cast<int>(live_rows++);
        }
        IntMatrix m(live_rows, live_cols.size());
        for (std::size_t c = 0; c < live_cols.size(); ++c)
            for (const auto& [r, v] : cols_[live_cols[c]]) m(static_cast<std::size_t>(row_map[static_cast<std::size_t>(r)]), c) = v;
        return m;
    }

private:
    static const Integer* entry(const Column& c, int row) {
        auto it = std::lower_bound(c.begin(), c.end(), row, [](const auto& e, int r) { return e.first < r; });
        return it != c.end() && it->first == row ? &it->second : nullptr;
    }

    // Clears row r outside column j, then drops column j and row r.
    void pivot(std::size_t j, int r) {
        const Column pc = cols_[j];
        const Integer pv = *entry(pc, r);
        auto users = row_cols_[static_cast<std::size_t>(r)];
        for (int k : users) {
            const auto ks = static_cast<std::size_t>(k);
            if (ks == j || !col_alive_[ks]) continue;
            const Integer* e = entry(cols_[ks], r);
            if (!e) continue;
            const Integer f = *e * pv;  // pv is a unit, so e / pv = e * pv
            axpy(ks, f, pc);
        }
        for (const auto& [row, v] : pc) --row_count_[static_cast<std::size_t>(row)];
        cols_[j].clear();
        col_alive_[j] = false;
        row_cols_[static_cast<std::size_t>(r)].clear();
    }

    // cols_[k] -= f * pc
    void axpy(std::size_t k, const Integer& f, const Column& pc) {
        Column out;
        out.reserve(cols_[k].size() + pc.size());
        auto a = cols_[k].begin();
        auto b = pc.begin();
        while (a != cols_[k].end() || b != pc.end()) {
            if (b == pc.end() || (a != cols_[k].end() && a->first < b->first)) {
                out.push_back(std::move(*a++));
            } else if (a == cols_[k].end() || b->first < a->first) {
                out.emplace_back(b->first, -f * b->second);
                row_cols_[static_cast<std::size_t>(b->first)].push_back(static_cast<int>(k));
                ++row_count_[static_cast<std::size_t>(b->first)];
                ++b;
            } else {
                Integer v = a->second - f * b->second;
                if (v != 0)
                    out.emplace_back(a->first, std::move(v));
                else
                    --row_count_[static_cast<std::size_t>(a->first)];
                ++a;
                ++b;
            }
        }
        cols_[k] = std::move(out);
    }

    std::size_t rows_;
    std::vector<Column> cols_;
    std::vector<bool> col_alive_;
    std::vector<std::vector<int>> row_cols_;  // may hold stale column ids
    std::vector<std::size_t> row_count_;
};

}  // namespace

std::vector<Integer> smith_normal_form(const SparseIntMatrix& m) {
    UnitEliminator elim(m);
    const std::size_t units = elim.run();
    std::vector<Integer> out(units, Integer(1));
    for (auto& d : smith_normal_form(elim.residual())) out.push_back(std::move(d));
    return out;
}

ChainComplexData boundary_matrices(const SimplicialComplex& k, std::size_t budget) {
    ChainComplexData data;
    data.faces = k.faces_by_dimension(budget);
    for (std::size_t d = 0; d < data.faces.size(); ++d) {
        SparseIntMatrix b;
        b.cols = data.faces[d].size();
        b.rows = d == 0 ? 0 : data.faces[d - 1].size();
        b.columns.resize(b.cols);
        if (d > 0) {
            const auto& lower = data.faces[d - 1];
            VertexSet sub;
            for (std::size_t j = 0; j < b.cols; ++j) {
                const auto& f = data.faces[d][j];
                for (std::size_t i = 0; i < f.size(); ++i) {
                    sub.assign(f.begin(), f.end());
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
                    auto it = std::lower_bound(lower.begin(), lower.end(), sub);
                    b.columns[j].emplace_back(static_cast<int>(it - lower.begin()), i % 2 == 0 ? 1 : -1);
                }
                std::sort(b.columns[j].begin(), b.columns[j].end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
            }
        }
        data.boundary.push_back(std::move(b));
    }
    return data;
}

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& k, std::size_t budget) {
    if (k.facets().empty()) throw std::invalid_argument("reduced_homology: empty complex");
    const auto data = boundary_matrices(k, budget);
    const std::size_t top = data.faces.size();
    std::vector<std::size_t> rank(top + 1, 0);
    std::vector<std::vector<Integer>> torsion(top + 1);
    rank[0] = 1;  // augmentation
    for (std::size_t d = 1; d < top; ++d) {
        for (auto& f : smith_normal_form(data.boundary[d])) {
            ++rank[d];
            if (f > 1) torsion[d].push_back(std::move(f));
        }
    }
    std::vector<HomologyGroup> out;
    for (std::size_t d = 0; d < top; ++d) {
        HomologyGroup h;
        h.dimension = static_cast<int>(d);
        h.rank = data.faces[d].size() - rank[d] - rank[d + 1];
        h.torsion = torsion[d + 1];
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<std::size_t> reduced_ranks(const std::vector<HomologyGroup>& groups) {
    std::vector<std::size_t> out;
    for (const auto& g : groups) out.push_back(g.rank);
    return out;
}

bool has_torsion(const std::vector<HomologyGroup>& groups) {
    return std::any_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return !g.torsion.empty(); });
}

}  // namespace homplex
