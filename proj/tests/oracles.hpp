#pragma once

// Brute-force reference implementations. They share only the basic types
// (Graph, Integer, Rational) with the library and deliberately use the
// slowest obvious method.

#include "homplex/graph.hpp"
#include "homplex/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using homplex::Graph;
using homplex::Integer;
using homplex::Rational;
using Matrix = std::vector<std::vector<Integer>>;

inline Graph random_graph(std::mt19937& rng, int n, unsigned percent = 50) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 100 < percent) g.add_edge(u, v);
    return g;
}

// Determinant by cofactor expansion.
inline Integer det(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        Matrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Integer> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        const Integer term = m[0][c] * det(minor);
        total += c % 2 == 0 ? term : Integer(-term);
    }
    return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

// Invariant factors from determinantal divisors: d_k = gcd of the k x k minors.
inline std::vector<Integer> invariant_factors(const Matrix& m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<Integer> d{Integer(1)};
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        Integer g = 0;
        subsets(rows, k, [&](const std::vector<std::size_t>& rs) {
            subsets(cols, k, [&](const std::vector<std::size_t>& cs) {
                Matrix sub;
                for (auto r : rs) {
                    std::vector<Integer> row;
                    for (auto c : cs) row.push_back(m[r][c]);
                    sub.push_back(std::move(row));
                }
                Integer x = det(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            });
        });
        if (g == 0) break;
        d.push_back(g);
    }
    std::vector<Integer> out;
    for (std::size_t k = 1; k < d.size(); ++k) out.push_back(d[k] / d[k - 1]);
    return out;
}

// Rank over Q by plain Gaussian elimination on rationals.
inline std::size_t rank(std::vector<std::vector<Rational>> a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

// Affine rank of a point set (dimension of its affine hull plus one).
inline std::size_t affine_rank(const std::vector<homplex::Point>& pts) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : pts) {
        std::vector<Rational> row{Rational(1)};
        for (auto x : p) row.emplace_back(static_cast<long>(x));
        rows.push_back(std::move(row));
    }
    return rank(rows);
}

// Signed circuit: (positive indices, negative indices) of a minimal affine dependency.
using SignedCircuit = std::pair<std::vector<int>, std::vector<int>>;

// All circuits, both orientations. A subset S is a circuit support iff it is
// affinely dependent and every proper subset is independent, i.e. rank(S) =
// |S| - 1 and rank(S \ x) = |S| - 1 for every x. Signs come from the
// unique dependency scaled so that its first coefficient is 1.
inline std::vector<SignedCircuit> circuits(const std::vector<homplex::Point>& pts) {
    std::vector<SignedCircuit> out;
    const std::size_t n = pts.size();
    for (std::size_t k = 2; k <= n; ++k)
        subsets(n, k, [&](const std::vector<std::size_t>& s) {
            std::vector<homplex::Point> sub;
            for (auto i : s) sub.push_back(pts[i]);
            if (affine_rank(sub) != k - 1) return;
            for (std::size_t drop = 0; drop < k; ++drop) {
                auto smaller = sub;
                smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
                if (affine_rank(smaller) != k - 1) return;
            }
            // Solve sum c_i (p_i, 1) = 0 with c_0 = 1.
            const std::size_t dim = pts[0].size() + 1;
            std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(k + 1));
            for (std::size_t j = 0; j < k; ++j) {
                a[0][j] = 1;
                for (std::size_t r = 1; r < dim; ++r) a[r][j] = static_cast<long>(sub[j][r - 1]);
            }
            // Extra row fixing c_0 = 1.
            std::vector<Rational> fix(k + 1);
            fix[0] = 1;
            fix[k] = 1;
            a.push_back(fix);
            // Reduced row echelon form of [A | b].
            std::size_t r = 0;
            std::vector<std::size_t> pivots;
            for (std::size_t c = 0; c < k && r < a.size(); ++c) {
                std::size_t p = r;
                while (p < a.size() && a[p][c] == 0) ++p;
                if (p == a.size()) continue;
                std::swap(a[p], a[r]);
                const Rational inv = 1 / a[r][c];
                for (auto& x : a[r]) x *= inv;
                for (std::size_t i = 0; i < a.size(); ++i) {
                    if (i == r || a[i][c] == 0) continue;
                    const Rational f = a[i][c];
                    for (std::size_t j = 0; j <= k; ++j) a[i][j] -= f * a[r][j];
                }
                pivots.push_back(c);
                ++r;
            }
            std::vector<Rational> c(k);
            for (std::size_t i = 0; i < pivots.size(); ++i) c[pivots[i]] = a[i][k];
            SignedCircuit pos, neg;
            for (std::size_t j = 0; j < k; ++j) {
                const int idx = static_cast<int>(s[j]);
                if (c[j] > 0) {
                    pos.first.push_back(idx);
                    neg.second.push_back(idx);
                } else {
                    pos.second.push_back(idx);
                    neg.first.push_back(idx);
                }
            }
            out.push_back(std::move(pos));
            out.push_back(std::move(neg));
        });
    return out;
}

// Proper intersection of conv(P) and conv(Q) for vertex sets given as indices
// into pts: every circuit with positive part in P and negative part in Q must
// lie inside P intersect Q.
inline bool intersect_properly(const std::vector<homplex::Point>& pts, const std::set<int>& p, const std::set<int>& q) {
    for (const auto& [pos, neg] : circuits(pts)) {
        const bool pos_in_p = std::all_of(pos.begin(), pos.end(), [&](int i) { return p.count(i); });
        const bool neg_in_q = std::all_of(neg.begin(), neg.end(), [&](int i) { return q.count(i); });
        if (!pos_in_p || !neg_in_q) continue;
        for (int i : pos)
            if (!q.count(i)) return false;
        for (int i : neg)
            if (!p.count(i)) return false;
    }
    return true;
}

inline int clique_number(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

inline int independence_number(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

inline std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<unsigned> cliques;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) ok = false;
        if (ok) cliques.push_back(mask);
    }
    std::vector<std::vector<int>> out;
    for (unsigned c : cliques) {
        bool maximal = true;
        for (unsigned d : cliques)
            if (d != c && (d & c) == c) maximal = false;
        if (!maximal) continue;
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (c >> v & 1) s.push_back(v);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

enum class Kind { hom, hom_plus, transversal, ihom, ihom_plus };

// Maximal cells by exhaustion over all tuples of subsets of V(H).
inline std::vector<std::vector<std::vector<int>>> hom_cells(const Graph& g, const Graph& h, Kind kind) {
    const int gn = g.vertex_count(), hn = h.vertex_count();
    const bool plus = kind == Kind::hom_plus || kind == Kind::ihom_plus;
    const bool induced = kind == Kind::ihom || kind == Kind::ihom_plus;
    auto independent = [&](unsigned m) {
        for (int u = 0; u < hn; ++u)
            for (int v = u + 1; v < hn; ++v)
                if ((m >> u & 1) && (m >> v & 1) && h.adjacent(u, v)) return false;
        return true;
    };
    std::vector<std::vector<unsigned>> valid;
    std::vector<unsigned> cur(static_cast<std::size_t>(gn));
    std::function<void(int)> rec = [&](int x) {
        if (x == gn) {
            if (std::all_of(cur.begin(), cur.end(), [](unsigned m) { return m == 0; })) return;
            for (auto [a, b] : g.edges()) {
                const unsigned ma = cur[static_cast<std::size_t>(a)], mb = cur[static_cast<std::size_t>(b)];
                for (int u = 0; u < hn; ++u)
                    for (int v = 0; v < hn; ++v)
                        if ((ma >> u & 1) && (mb >> v & 1) && (u == v || !h.adjacent(u, v))) return;
                if (induced && (!independent(ma) || !independent(mb))) return;
            }
            valid.push_back(cur);
            return;
        }
        for (unsigned m = plus ? 0u : 1u; m < (1u << hn); ++m) {
            cur[static_cast<std::size_t>(x)] = m;
            rec(x + 1);
        }
    };
    rec(0);
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& c : valid) {
        bool maximal = true;
        for (const auto& d : valid) {
            if (d == c) continue;
            bool contains = true;
            for (std::size_t i = 0; i < c.size() && contains; ++i) contains = (d[i] & c[i]) == c[i];
            if (contains) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        std::vector<std::vector<int>> parts;
        for (unsigned m : c) {
            std::vector<int> p;
            for (int v = 0; v < hn; ++v)
                if (m >> v & 1) p.push_back(v);
            parts.push_back(std::move(p));
        }
        out.push_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Dissections of the convex polygon on vertices lo..hi into k-gons, as sets of
// diagonals (a, b), a < b. The side (lo, hi) lies in exactly one k-gon.
inline std::vector<std::set<std::pair<int, int>>> dissections(int lo, int hi, int k) {
    const int size = hi - lo + 1;
    if (size == 2) return {{}};
    if (size < k || (size - 2) % (k - 2) != 0) return {};
    std::vector<std::set<std::pair<int, int>>> out;
    // Choose the k-gon containing (lo, hi): lo = v_0 < v_1 < ... < v_{k-1} = hi.
    std::vector<int> verts{lo};
    std::function<void()> rec = [&]() {
        if (static_cast<int>(verts.size()) == k - 1) {
            verts.push_back(hi);
            std::vector<std::set<std::pair<int, int>>> partial{{}};
            for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
                const int a = verts[i], b = verts[i + 1];
                const auto sub = dissections(a, b, k);
                std::vector<std::set<std::pair<int, int>>> next;
                for (const auto& p : partial)
                    for (const auto& s : sub) {
                        auto u = p;
                        u.insert(s.begin(), s.end());
                        if (b - a > 1) u.insert({a, b});
                        next.push_back(std::move(u));
                    }
                partial = std::move(next);
            }
            verts.pop_back();
            for (auto& p : partial) out.push_back(std::move(p));
            return;
        }
        for (int v = verts.back() + 1; v < hi; ++v) {
            verts.push_back(v);
            rec();
            verts.pop_back();
        }
    };
    rec();
    return out;
}

}  // namespace oracle
