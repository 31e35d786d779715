#include "homplex/hom.hpp"

#include "homplex/lp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace homplex {

std::string to_string(HomMode mode) {
    switch (mode) {
        case HomMode::hom: return "hom";
        case HomMode::hom_plus: return "hom_plus";
        case HomMode::hom_plus_transversal: return "hom_plus_t";
        case HomMode::ihom: return "ihom";
        case HomMode::ihom_plus: return "ihom_plus";
    }
    return "hom";
}

HomMode parse_hom_mode(const std::string& s) {
    if (s == "hom") return HomMode::hom;
    if (s == "hom_plus") return HomMode::hom_plus;
    if (s == "hom_plus_t" || s == "hom_plus_transversal") return HomMode::hom_plus_transversal;
    if (s == "ihom") return HomMode::ihom;
    if (s == "ihom_plus") return HomMode::ihom_plus;
    throw std::invalid_argument("unknown hom mode: " + s);
}

bool is_plus_mode(HomMode mode) {
    return mode == HomMode::hom_plus || mode == HomMode::hom_plus_transversal || mode == HomMode::ihom_plus;
}

bool is_induced_mode(HomMode mode) { return mode == HomMode::ihom || mode == HomMode::ihom_plus; }

namespace {

LabelMode label_mode(HomMode mode) { return is_plus_mode(mode) ? LabelMode::hom_plus : LabelMode::hom; }

bool empties_allowed(HomMode mode) { return mode == HomMode::hom_plus || mode == HomMode::ihom_plus; }

bool independent_in(const Graph& h, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (h.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_complete_graph(const Graph& g) {
    return g.edge_count() == static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(g.vertex_count() - 1) / 2;
}

// Vertices adjacent to every vertex of s; all of V(H) when s is empty.
Bitset common_neighbourhood(const Graph& h, const Bitset& s) {
    Bitset out(static_cast<std::size_t>(h.vertex_count()));
    out.set();
    for (auto v = s.find_first(); v != Bitset::npos; v = s.find_next(v)) out &= h.neighbours(static_cast<int>(v));
    return out;
}

std::vector<Bitset> subsets_of(const Bitset& allowed, bool include_empty) {
    const auto members = to_vertex_set(allowed);
    if (members.size() >= 30) throw BudgetExceeded("hom enumeration: candidate set too large");
    std::vector<Bitset> out;
    for (std::uint32_t mask = include_empty ? 0 : 1; mask < (1u << members.size()); ++mask) {
        Bitset b(allowed.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            if (mask >> i & 1) b.set(static_cast<std::size_t>(members[i]));
        out.push_back(std::move(b));
    }
    return out;
}

VertexSet maximum_independent_set(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 24) throw std::invalid_argument("maximum_independent_set: graph too large");
    VertexSet best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) <= best.size()) continue;
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        if (independent_in(g, s)) best = s;
    }
    return best;
}

// Backtracking over tuples for an arbitrary G. Non-induced modes fill a
// maximum independent set of G by common neighbourhoods (maximal cells are
// exactly the fixpoints of that map).
class GeneralHomEnumerator {
public:
    GeneralHomEnumerator(const Graph& g, const Graph& h, HomMode mode) : g_(g), h_(h), mode_(mode) {
        const auto gn = static_cast<std::size_t>(g.vertex_count());
        sigma_.assign(gn, Bitset(static_cast<std::size_t>(h.vertex_count())));
        assigned_.assign(gn, false);
        if (!is_induced_mode(mode)) {
            fixed_ = maximum_independent_set(g);
            for (int v = 0; v < g.vertex_count(); ++v)
                if (!std::binary_search(fixed_.begin(), fixed_.end(), v)) free_.push_back(v);
        } else {
            for (int v = 0; v < g.vertex_count(); ++v) free_.push_back(v);
        }
    }

    std::vector<std::vector<VertexSet>> run() {
        rec(0);
        return std::move(out_);
    }

private:
    Bitset allowed_for(int x) const {
        Bitset allowed(static_cast<std::size_t>(h_.vertex_count()));
        allowed.set();
        for (int y = 0; y < g_.vertex_count(); ++y)
            if (g_.adjacent(x, y) && assigned_[static_cast<std::size_t>(y)])
                allowed &= common_neighbourhood(h_, sigma_[static_cast<std::size_t>(y)]);
        return allowed;
    }

    bool has_neighbour(int x) const { return g_.neighbours(x).any(); }

    void rec(std::size_t idx) {
        if (idx == free_.size()) {
            leaf();
            return;
        }
        const int x = free_[idx];
        const bool allow_empty = empties_allowed(mode_);
        for (auto& s : subsets_of(allowed_for(x), allow_empty)) {
            if (is_induced_mode(mode_) && has_neighbour(x) && !independent_in(h_, to_vertex_set(s))) continue;
            sigma_[static_cast<std::size_t>(x)] = s;
            assigned_[static_cast<std::size_t>(x)] = true;
            rec(idx + 1);
            assigned_[static_cast<std::size_t>(x)] = false;
        }
        sigma_[static_cast<std::size_t>(x)].reset();
    }

    void leaf() {
        std::vector<Bitset> full = sigma_;
        if (!is_induced_mode(mode_)) {
            for (int x : fixed_) {
                Bitset c(static_cast<std::size_t>(h_.vertex_count()));
                c.set();
                for (int y = 0; y < g_.vertex_count(); ++y)
                    if (g_.adjacent(x, y)) c &= common_neighbourhood(h_, full[static_cast<std::size_t>(y)]);
                full[static_cast<std::size_t>(x)] = c;
            }
        }
        std::vector<VertexSet> parts;
        for (const auto& b : full) parts.push_back(to_vertex_set(b));
        if (!is_hom_cell(g_, h_, parts, mode_)) return;
        if (!is_induced_mode(mode_)) {
            // Fixpoint: no part can grow.
            for (int x : free_) {
                Bitset c(static_cast<std::size_t>(h_.vertex_count()));
                c.set();
                for (int y = 0; y < g_.vertex_count(); ++y)
                    if (g_.adjacent(x, y)) c &= common_neighbourhood(h_, full[static_cast<std::size_t>(y)]);
                if (c != full[static_cast<std::size_t>(x)]) return;
            }
        }
        out_.push_back(std::move(parts));
    }

    const Graph& g_;
    const Graph& h_;
    HomMode mode_;
    VertexSet fixed_;
    std::vector<int> free_;
    std::vector<Bitset> sigma_;
    std::vector<bool> assigned_;
    std::vector<std::vector<VertexSet>> out_;
};

bool can_grow(const Graph& g, const Graph& h, std::vector<VertexSet> parts, HomMode mode) {
    for (std::size_t x = 0; x < parts.size(); ++x)
        for (int w = 0; w < h.vertex_count(); ++w) {
            if (std::binary_search(parts[x].begin(), parts[x].end(), w)) continue;
            auto saved = parts[x];
            parts[x].insert(std::lower_bound(parts[x].begin(), parts[x].end(), w), w);
            const bool ok = is_hom_cell(g, h, parts, mode);
            parts[x] = std::move(saved);
            if (ok) return true;
        }
    return false;
}

// Maximal cells for G = K_g with empty parts allowed: a maximal k-partite cell
// (k <= g) whose union has no common neighbour, spread over g slots.
std::vector<std::vector<VertexSet>> complete_plus_cells(int g, const Graph& h, bool induced) {
    std::vector<std::vector<VertexSet>> out;
    for (int k = 1; k <= g; ++k) {
        MultipartiteOptions opt;
        opt.induced = induced;
        opt.maximal_only = true;
        opt.ordered = false;
        for (const auto& ps : enumerate_multipartite_cells(h, k, opt)) {
            if (k < g) {
                Bitset uni(static_cast<std::size_t>(h.vertex_count()));
                for (const auto& p : ps.parts)
                    for (int v : p) uni.set(static_cast<std::size_t>(v));
                if (common_neighbourhood(h, uni).any()) continue;
            }
            // Assign the k parts to distinct slots in every order.
            std::vector<int> slots(static_cast<std::size_t>(g));
            for (int i = 0; i < g; ++i) slots[static_cast<std::size_t>(i)] = i < k ? i : k;
            std::sort(slots.begin(), slots.end());
            do {
                std::vector<VertexSet> parts(static_cast<std::size_t>(g));
                for (int i = 0; i < g; ++i) {
                    const int s = slots[static_cast<std::size_t>(i)];
                    if (s < k) parts[static_cast<std::size_t>(i)] = ps.parts[static_cast<std::size_t>(s)];
                }
                out.push_back(std::move(parts));
            } while (std::next_permutation(slots.begin(), slots.end()));
        }
    }
    return out;
}

}  // namespace

bool is_hom_cell(const Graph& g, const Graph& h, const std::vector<VertexSet>& parts, HomMode mode) {
    if (parts.size() != static_cast<std::size_t>(g.vertex_count())) return false;
    bool any = false;
    for (const auto& p : parts) {
        if (!std::is_sorted(p.begin(), p.end()) || std::adjacent_find(p.begin(), p.end()) != p.end()) return false;
        for (int v : p)
            if (v < 0 || v >= h.vertex_count()) return false;
        if (p.empty() && !empties_allowed(mode)) return false;
        if (!p.empty()) any = true;
    }
    if (!any) return false;
    for (auto [x, y] : g.edges()) {
        const auto& a = parts[static_cast<std::size_t>(x)];
        const auto& b = parts[static_cast<std::size_t>(y)];
        for (int u : a)
            for (int v : b)
                if (u == v || !h.adjacent(u, v)) return false;
        if (is_induced_mode(mode) && (!independent_in(h, a) || !independent_in(h, b))) return false;
    }
    return true;
}

HomComplex build_hom(const Graph& g, const Graph& h, HomMode mode) {
    HomComplex hc{g, h, mode, {}};
    if (g.vertex_count() == 0 || h.vertex_count() == 0) return hc;
    std::vector<std::vector<VertexSet>> tuples;
    // K_1 has no edges, so the induced condition is vacuous there; the
    // multipartite path would force its single part to be independent.
    if (is_complete_graph(g) && g.vertex_count() >= 2) {
        const int k = g.vertex_count();
        if (mode == HomMode::hom_plus || mode == HomMode::ihom_plus) {
            tuples = complete_plus_cells(k, h, mode == HomMode::ihom_plus);
        } else {
            MultipartiteOptions opt;
            opt.induced = mode == HomMode::ihom;
            opt.maximal_only = true;
            opt.ordered = true;
            for (auto& ps : enumerate_multipartite_cells(h, k, opt)) tuples.push_back(std::move(ps.parts));
        }
    } else {
        const HomMode base = mode == HomMode::hom_plus_transversal ? HomMode::hom : mode;
        tuples = GeneralHomEnumerator(g, h, base).run();
        if (is_induced_mode(mode))
            std::erase_if(tuples, [&](const std::vector<VertexSet>& t) { return can_grow(g, h, t, base); });
    }
    for (auto& t : tuples) hc.cells.push_back(LabelTuple{std::move(t), label_mode(mode)});
    std::sort(hc.cells.begin(), hc.cells.end());
    hc.cells.erase(std::unique(hc.cells.begin(), hc.cells.end()), hc.cells.end());
    return hc;
}

std::vector<LabelTuple> all_cells(const HomComplex& hc, std::size_t budget) {
    std::set<LabelTuple> seen;
    for (const auto& c : hc.cells)
        for (auto& f : faces_of_cell(c)) {
            if (hc.mode == HomMode::hom_plus_transversal && !f.all_nonempty()) continue;
            seen.insert(std::move(f));
            if (seen.size() > budget) throw BudgetExceeded("cell budget exceeded");
        }
    return {seen.begin(), seen.end()};
}

std::vector<std::size_t> cell_f_vector(const HomComplex& hc, std::size_t budget) {
    std::vector<std::size_t> f;
    for (const auto& c : all_cells(hc, budget)) {
        const auto d = static_cast<std::size_t>(c.dimension());
        if (f.size() <= d) f.resize(d + 1, 0);
        ++f[d];
    }
    return f;
}

std::vector<Point> join_vertices(const LabelTuple& t, int h) {
    const auto g = t.parts.size();
    const auto width = g * static_cast<std::size_t>(h) + g;
    std::vector<Point> rows;
    for (std::size_t i = 0; i < g; ++i)
        for (int v : t.parts[i]) {
            Point p(width, 0);
            p[i * static_cast<std::size_t>(h) + static_cast<std::size_t>(v)] = 1;
            p[g * static_cast<std::size_t>(h) + i] = 1;
            rows.push_back(std::move(p));
        }
    return rows;
}

std::vector<RationalVector> cayley_slice(const LabelTuple& t, int g, int h) {
    if (t.parts.size() != static_cast<std::size_t>(g)) throw std::invalid_argument("cayley_slice: part count differs from g");
    if (!t.all_nonempty()) throw std::invalid_argument("cayley_slice: an empty part does not meet the slice");
    const auto gs = static_cast<std::size_t>(g), hs = static_cast<std::size_t>(h);
    const Rational w(1, g);
    std::vector<RationalVector> out;
    std::vector<std::size_t> idx(gs, 0);
    for (;;) {
        RationalVector p{std::vector<Rational>(gs * hs + gs)};
        for (std::size_t i = 0; i < gs; ++i) {
            p[i * hs + static_cast<std::size_t>(t.parts[i][idx[i]])] += w;
            p[gs * hs + i] = w;
        }
        out.push_back(std::move(p));
        std::size_t i = 0;
        while (i < gs && ++idx[i] == t.parts[i].size()) idx[i++] = 0;
        if (i == gs) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix pi_box_matrix(int g, int h) {
    const auto gs = static_cast<std::size_t>(g), hs = static_cast<std::size_t>(h);
    IntMatrix m(hs + gs, gs * hs + gs);
    for (std::size_t i = 0; i < gs; ++i) {
        for (std::size_t v = 0; v < hs; ++v) m(v, i * hs + v) = 1;
        m(hs + i, gs * hs + i) = 1;
    }
    return m;
}

RationalVector apply(const IntMatrix& m, const RationalVector& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
    RationalVector out{std::vector<Rational>(m.rows())};
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0 && v[c] != 0) out[r] += Rational(m(r, c)) * v[c];
    return out;
}

ProjectedCell project_pi(const LabelTuple& t, int h) {
    if (!t.all_nonempty()) throw std::invalid_argument("project_pi: empty part");
    return make_projected_cell(t.parts, h);
}

std::vector<ProjectedCell> projected_complex(const Graph& g, const Graph& h, HomMode mode) {
    if (mode != HomMode::hom && mode != HomMode::ihom)
        throw std::invalid_argument("projected_complex: use projected_simplicial_complex for plus modes");
    const auto hc = build_hom(g, h, mode);
    std::vector<ProjectedCell> cells;
    for (const auto& c : hc.cells) cells.push_back(project_pi(c, h.vertex_count()));
    std::sort(cells.begin(), cells.end(), [](const ProjectedCell& a, const ProjectedCell& b) {
        return a.vertices != b.vertices ? a.vertices < b.vertices : a.parts < b.parts;
    });
    cells.erase(std::unique(cells.begin(), cells.end(),
                            [](const ProjectedCell& a, const ProjectedCell& b) { return a.vertices == b.vertices; }),
                cells.end());
    std::sort(cells.begin(), cells.end(), [](const ProjectedCell& a, const ProjectedCell& b) { return a.parts < b.parts; });
    return cells;
}

SimplicialComplex projected_simplicial_complex(int g, const Graph& h, HomMode mode) {
    if (!is_plus_mode(mode)) throw std::invalid_argument("projected_simplicial_complex: plus mode required");
    if (g < 1) throw std::invalid_argument("projected_simplicial_complex: g must be positive");
    const auto hc = build_hom(complete_graph(g), h, mode);
    std::vector<VertexSet> facets;
    for (const auto& c : hc.cells) {
        VertexSet u;
        for (const auto& p : c.parts) u.insert(u.end(), p.begin(), p.end());
        std::sort(u.begin(), u.end());
        facets.push_back(std::move(u));
    }
    return SimplicialComplex(h.vertex_count(), std::move(facets));
}

PolytopalityReport check_projection_polytopal(int g, const Graph& h) {
    PolytopalityReport r;
    if (h.vertex_count() == 0 || clique_number(h) < g) {
        r.empty = true;
        return r;
    }
    r.criterion = clique_number(h) == g;
    const auto cells = projected_complex(complete_graph(g), h, HomMode::hom);
    r.cell_count = cells.size();
    auto verdict = common_face_test(cells);
    r.geometric = verdict.is_complex;
    r.witness = std::move(verdict.bad_pair);
    return r;
}

std::optional<bool> is_projection_polytopal(int g, const Graph& h, PolytopalityMethod method) {
    if (h.vertex_count() == 0 || clique_number(h) < g) return std::nullopt;
    if (method == PolytopalityMethod::criterion) return clique_number(h) == g;
    return common_face_test(projected_complex(complete_graph(g), h, HomMode::hom)).is_complex;
}

OneSkeleton projected_one_skeleton(int g, const Graph& h) {
    MultipartiteOptions opt;
    opt.maximal_only = true;
    opt.ordered = false;
    const auto cells = enumerate_multipartite_cells(h, g, opt);
    std::set<Point> verts;
    std::set<std::pair<Point, Point>> edges;
    const auto hs = static_cast<std::size_t>(h.vertex_count());
    for (const auto& ps : cells) {
        const auto& parts = ps.parts;
        std::vector<std::size_t> idx(parts.size(), 0);
        for (;;) {
            Point base(hs, 0);
            for (std::size_t i = 0; i < parts.size(); ++i) ++base[static_cast<std::size_t>(parts[i][idx[i]])];
            verts.insert(base);
            // Edges: swap the choice in one part for a larger element.
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = idx[i] + 1; j < parts[i].size(); ++j) {
                    Point other = base;
                    --other[static_cast<std::size_t>(parts[i][idx[i]])];
                    ++other[static_cast<std::size_t>(parts[i][j])];
                    edges.insert(std::minmax(base, other));
                }
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] == parts[i].size()) idx[i++] = 0;
            if (i == idx.size()) break;
        }
    }
    OneSkeleton out;
    out.vertices.assign(verts.begin(), verts.end());
    auto index = [&](const Point& p) {
        return static_cast<int>(std::lower_bound(out.vertices.begin(), out.vertices.end(), p) - out.vertices.begin());
    };
    for (const auto& [a, b] : edges) out.edges.emplace_back(index(a), index(b));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

bool skeleton_in_hypersimplex_check(int g, const Graph& h) {
    const auto sk = projected_one_skeleton(g, h);
    for (const auto& p : sk.vertices) {
        std::int64_t ones = 0;
        for (auto x : p) {
            if (x != 0 && x != 1) return false;
            ones += x;
        }
        if (ones != g) return false;
    }
    for (auto [a, b] : sk.edges) {
        int dist = 0;
        const auto& p = sk.vertices[static_cast<std::size_t>(a)];
        const auto& q = sk.vertices[static_cast<std::size_t>(b)];
        for (std::size_t i = 0; i < p.size(); ++i) dist += p[i] != q[i] ? 1 : 0;
        if (dist != 2) return false;
    }
    return true;
}

OneSkeleton hypersimplex_one_skeleton(int g, int h) {
    OneSkeleton out;
    for (std::uint32_t mask = 0; mask < (1u << h); ++mask) {
        if (__builtin_popcount(mask) != g) continue;
        Point p(static_cast<std::size_t>(h), 0);
        for (int i = 0; i < h; ++i) p[static_cast<std::size_t>(i)] = mask >> i & 1;
        out.vertices.push_back(std::move(p));
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    for (std::size_t a = 0; a < out.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < out.vertices.size(); ++b) {
            int dist = 0;
            for (std::size_t i = 0; i < out.vertices[a].size(); ++i) dist += out.vertices[a][i] != out.vertices[b][i];
            if (dist == 2) out.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return out;
}

std::vector<MinkowskiPoint> minkowski_vertices(const std::vector<VertexSet>& parts, const std::vector<Rational>& weights,
                                               int h) {
    if (parts.size() != weights.size()) throw std::invalid_argument("minkowski_vertices: one weight per part");
    Rational total = 0;
    for (const auto& w : weights) {
        if (w <= 0) throw std::invalid_argument("minkowski_vertices: weights must be positive");
        total += w;
    }
    if (total != 1) throw std::invalid_argument("minkowski_vertices: weights must sum to 1");
    for (const auto& p : parts) {
        if (p.empty()) throw std::invalid_argument("minkowski_vertices: empty part");
        for (int v : p)
            if (v < 0 || v >= h) throw std::invalid_argument("minkowski_vertices: vertex out of range");
    }
    std::set<RationalVector> pts;
    std::vector<std::size_t> idx(parts.size(), 0);
    for (;;) {
        RationalVector p{std::vector<Rational>(static_cast<std::size_t>(h))};
        for (std::size_t i = 0; i < parts.size(); ++i) p[static_cast<std::size_t>(parts[i][idx[i]])] += weights[i];
        pts.insert(std::move(p));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == parts[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    std::vector<RationalVector> list(pts.begin(), pts.end());
    const auto flags = hull_vertex_flags(list);
    std::vector<MinkowskiPoint> out;
    for (std::size_t i = 0; i < list.size(); ++i) out.push_back({list[i], flags[i]});
    return out;
}

PermutohedronHom permutohedron_to_hom(const BipartiteSpec& spec) {
    std::vector<VertexSet> parts(static_cast<std::size_t>(spec.left_count));
    for (auto [i, j] : spec.edges) {
        if (i < 0 || i >= spec.left_count || j < 0 || j >= spec.right_count)
            throw std::invalid_argument("permutohedron_to_hom: edge out of range");
        parts[static_cast<std::size_t>(i)].push_back(j);
    }
    for (auto& p : parts) {
        if (p.empty()) throw std::invalid_argument("permutohedron_to_hom: isolated left vertex");
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
    }
    PermutohedronHom out{Graph(spec.left_count), Graph(spec.right_count), LabelTuple{parts, LabelMode::hom}};
    for (int i = 0; i < spec.left_count; ++i)
        for (int j = i + 1; j < spec.left_count; ++j) {
            const auto& a = parts[static_cast<std::size_t>(i)];
            const auto& b = parts[static_cast<std::size_t>(j)];
            VertexSet common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (!common.empty()) continue;
            out.G.add_edge(i, j);
            for (int u : a)
                for (int v : b) out.H.add_edge(u, v);
        }
    return out;
}

namespace {

class BasisSearch {
public:
    BasisSearch(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs)
        : m_(std::move(m)), rhs_(std::move(rhs)), cols_(m_.empty() ? 0 : m_.front().size()) {}

    // Nonnegative basic solutions of m x = rhs.
    std::vector<std::vector<Rational>> run() {
        const std::size_t r = m_.size();
        std::vector<int> chosen;
        std::vector<std::vector<Rational>> echelon;
        std::vector<std::size_t> pivots;
        rec(0, r, chosen, echelon, pivots);
        return std::move(out_);
    }

private:
    void rec(std::size_t start, std::size_t r, std::vector<int>& chosen, std::vector<std::vector<Rational>>& echelon,
             std::vector<std::size_t>& pivots) {
        if (chosen.size() == r) {
            solve(chosen);
            return;
        }
        for (std::size_t c = start; c + (r - chosen.size()) <= cols_; ++c) {
            std::vector<Rational> v(r);
            for (std::size_t i = 0; i < r; ++i) v[i] = m_[i][c];
            for (std::size_t k = 0; k < echelon.size(); ++k)
                if (v[pivots[k]] != 0) {
                    const Rational f = v[pivots[k]];
                    for (std::size_t i = 0; i < r; ++i) v[i] -= f * echelon[k][i];
                }
            std::size_t p = 0;
            while (p < r && v[p] == 0) ++p;
            if (p == r) continue;
            const Rational lead = v[p];
            for (auto& x : v) x /= lead;
            echelon.push_back(v);
            pivots.push_back(p);
            chosen.push_back(static_cast<int>(c));
            rec(c + 1, r, chosen, echelon, pivots);
            chosen.pop_back();
            pivots.pop_back();
            echelon.pop_back();
        }
    }

    void solve(const std::vector<int>& chosen) {
        const std::size_t r = m_.size();
        std::vector<std::vector<Rational>> aug(r, std::vector<Rational>(r + 1));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) aug[i][j] = m_[i][static_cast<std::size_t>(chosen[j])];
            aug[i][r] = rhs_[i];
        }
        rref(aug, r + 1);
        std::vector<Rational> x(cols_, Rational(0));
        for (std::size_t j = 0; j < r; ++j) {
            if (aug[j][r] < 0) return;
            x[static_cast<std::size_t>(chosen[j])] = aug[j][r];
        }
        out_.push_back(std::move(x));
    }

    std::vector<std::vector<Rational>> m_;
    std::vector<Rational> rhs_;
    std::size_t cols_;
    std::vector<std::vector<Rational>> out_;
};

}  // namespace

std::vector<RationalVector> slice_vertices(const std::vector<RationalVector>& points, std::size_t first_tail,
                                           const std::vector<Rational>& tail) {
    if (points.empty()) return {};
    const std::size_t d = points.front().size();
    if (first_tail + tail.size() != d) throw std::invalid_argument("slice_vertices: tail does not fit");
    const std::size_t n = points.size();
    // Rows: fixed coordinates, then the affine row; reduced to independent rows.
    std::vector<std::vector<Rational>> aug;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        std::vector<Rational> row(n + 1);
        for (std::size_t j = 0; j < n; ++j) row[j] = points[j][first_tail + i];
        row[n] = tail[i];
        aug.push_back(std::move(row));
    }
    std::vector<Rational> ones(n + 1, Rational(1));
    aug.push_back(ones);
    const auto pivots = rref(aug, n + 1);
    if (!pivots.empty() && pivots.back() == n) return {};  // inconsistent
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        m.emplace_back(aug[i].begin(), aug[i].begin() + static_cast<std::ptrdiff_t>(n));
        rhs.push_back(aug[i][n]);
    }
    std::set<RationalVector> images;
    for (const auto& lambda : BasisSearch(m, rhs).run()) {
        RationalVector p{std::vector<Rational>(d)};
        for (std::size_t j = 0; j < n; ++j)
            if (lambda[j] != 0)
                for (std::size_t k = 0; k < d; ++k) p[k] += lambda[j] * points[j][k];
        images.insert(std::move(p));
    }
    std::vector<RationalVector> list(images.begin(), images.end());
    const auto flags = hull_vertex_flags(list);
    std::vector<RationalVector> out;
    for (std::size_t i = 0; i < list.size(); ++i)
        if (flags[i]) out.push_back(list[i]);
    return out;
}

SliceReport check_slice_identity(const Graph& g, const Graph& h) {
    SliceReport rep;
    const int gn = g.vertex_count(), hn = h.vertex_count();
    if (gn == 0 || hn == 0) return rep;
    const std::vector<Rational> tail(static_cast<std::size_t>(gn), Rational(1, gn));

    const auto plus = build_hom(g, h, HomMode::hom_plus);
    const auto hom = build_hom(g, h, HomMode::hom);
    const auto transversal = build_hom(g, h, HomMode::hom_plus_transversal);
    rep.hom_cells = hom.cells.size();
    rep.plus_facets = plus.cells.size();

    std::set<std::vector<RationalVector>> geometric, formula;
    for (const auto& f : plus.cells) {
        std::vector<RationalVector> pts;
        for (const auto& p : join_vertices(f, hn)) pts.push_back(to_rational(p));
        auto s = slice_vertices(pts, static_cast<std::size_t>(gn) * static_cast<std::size_t>(hn), tail);
        if (!f.all_nonempty()) {
            if (!s.empty()) rep.slice_identity = false;
            continue;
        }
        geometric.insert(std::move(s));
    }
    for (const auto& c : hom.cells) formula.insert(cayley_slice(c, gn, hn));
    rep.slice_identity = rep.slice_identity && geometric == formula;

    std::vector<std::vector<VertexSet>> a, b;
    for (const auto& c : hom.cells) a.push_back(c.parts);
    for (const auto& c : transversal.cells) b.push_back(c.parts);
    rep.transversal_cells_match = a == b;

    const auto box = pi_box_matrix(gn, hn);
    for (const auto& c : hom.cells) {
        std::vector<RationalVector> lhs_pts;
        for (const auto& v : cayley_slice(c, gn, hn)) lhs_pts.push_back(apply(box, v));
        std::sort(lhs_pts.begin(), lhs_pts.end());
        lhs_pts.erase(std::unique(lhs_pts.begin(), lhs_pts.end()), lhs_pts.end());
        const auto flags = hull_vertex_flags(lhs_pts);
        std::vector<RationalVector> lhs;
        for (std::size_t i = 0; i < lhs_pts.size(); ++i)
            if (flags[i]) lhs.push_back(lhs_pts[i]);

        std::vector<RationalVector> cayley;
        for (const auto& p : join_vertices(c, hn)) cayley.push_back(apply(box, to_rational(p)));
        std::sort(cayley.begin(), cayley.end());
        cayley.erase(std::unique(cayley.begin(), cayley.end()), cayley.end());
        const auto rhs = slice_vertices(cayley, static_cast<std::size_t>(hn), tail);
        if (lhs != rhs) {
            rep.diagram_commutes = false;
            break;
        }
    }
    return rep;
}

}  // namespace homplex
