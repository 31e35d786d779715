#include "homplex/cyclic.hpp"

#include "homplex/dissection.hpp"
#include "homplex/hom.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace homplex {

namespace {

void check_range(const IndexSet& s, int n) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n) throw std::invalid_argument("index set: element out of [n]");
        if (i > 0 && s[i - 1] >= s[i]) throw std::invalid_argument("index set: not strictly increasing");
    }
}

void check_nd(int n, int d) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("cyclic polytope: d must be even and at least 2");
    if (n <= d) throw std::invalid_argument("cyclic polytope: n must exceed d");
}

void check_rs(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("grid: r and s must be positive");
}

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// All size-d subsets of [n] in lexicographic order.
std::vector<IndexSet> subsets_of_size(int n, int d) {
    std::vector<IndexSet> out;
    if (d < 0 || d > n) return out;
    IndexSet cur(static_cast<std::size_t>(d));
    std::iota(cur.begin(), cur.end(), 1);
    for (;;) {
        out.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - d + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

LatticePath path_of_face(const VertexSet& f, int s) {
    LatticePath p;
    for (int v : f) p.push_back(grid_point(v, s));
    return p;
}

}  // namespace

bool satisfies_gale_evenness(const IndexSet& s, int n) {
    check_range(s, n);
    std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
    for (int x : s) in[static_cast<std::size_t>(x)] = true;
    for (int a = 1; a <= n; ++a) {
        if (in[static_cast<std::size_t>(a)]) continue;
        int between = 0;
        for (int b = a + 1; b <= n; ++b) {
            if (in[static_cast<std::size_t>(b)]) {
                ++between;
            } else if (between % 2 != 0) {
                return false;
            }
        }
    }
    return true;
}

bool is_cyclic_facet(const IndexSet& s, int n, int d) {
    check_nd(n, d);
    return static_cast<int>(s.size()) == d && satisfies_gale_evenness(s, n);
}

bool is_lower_facet(const IndexSet& s, int n, int d) {
    if (!is_cyclic_facet(s, n, d)) return false;
    int end_block = 0;
    for (int x = n; x >= 1 && std::binary_search(s.begin(), s.end(), x); --x) ++end_block;
    return end_block % 2 == 0;
}

std::vector<IndexSet> cyclic_facets(int n, int d) {
    check_nd(n, d);
    std::vector<IndexSet> out;
    for (auto& f : subsets_of_size(n, d))
        if (satisfies_gale_evenness(f, n)) out.push_back(std::move(f));
    return out;
}

std::vector<IndexSet> lower_facets(int n, int d) {
    std::vector<IndexSet> out;
    for (auto& f : cyclic_facets(n, d))
        if (is_lower_facet(f, n, d)) out.push_back(std::move(f));
    return out;
}

bool is_cyclic_face(const IndexSet& s, int n, int d) {
    check_range(s, n);
    for (const auto& f : cyclic_facets(n, d))
        if (is_subset(s, f)) return true;
    return false;
}

bool is_strict_lower_face(const IndexSet& s, int n, int d) {
    check_range(s, n);
    bool any = false;
    for (const auto& f : cyclic_facets(n, d)) {
        if (!is_subset(s, f)) continue;
        if (!is_lower_facet(f, n, d)) return false;
        any = true;
    }
    return any;
}

Composition chi(const IndexSet& facet, int n, int d) {
    if (!is_lower_facet(facet, n, d)) throw std::invalid_argument("chi: not a lower facet");
    // Starts of the pairs, with sentinels -1 and n + 1.
    std::vector<int> starts{-1};
    for (std::size_t i = 0; i < facet.size(); i += 2) starts.push_back(facet[i]);
    starts.push_back(n + 1);
    Composition c;
    for (std::size_t j = 1; j < starts.size(); ++j) c.push_back(starts[j] - starts[j - 1] - 2);
    return c;
}

IndexSet chi_inverse(const Composition& c) {
    if (c.size() < 2) throw std::invalid_argument("chi_inverse: need at least two parts");
    for (int x : c)
        if (x < 0) throw std::invalid_argument("chi_inverse: negative part");
    IndexSet out;
    int start = -1;
    for (std::size_t j = 0; j + 1 < c.size(); ++j) {
        start += 2 + c[j];
        out.push_back(start);
        out.push_back(start + 1);
    }
    return out;
}

std::vector<Composition> compositions(int r, int s) {
    if (r < 0 || s < 1) throw std::invalid_argument("compositions: need r >= 0 and s >= 1");
    std::vector<Composition> out;
    Composition cur(static_cast<std::size_t>(s), 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == cur.size()) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            cur[pos] = x;
            self(self, pos + 1, left - x);
        }
    };
    rec(rec, 0, r);
    return out;
}

bool composition_adjacent(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composition_adjacent: lengths differ");
    std::vector<std::size_t> diff;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int d = a[i] - b[i];
        if (d == 0) continue;
        if (d != 1 && d != -1) return false;
        diff.push_back(i);
    }
    if (diff.size() != 2 || a[diff[0]] - b[diff[0]] == a[diff[1]] - b[diff[1]]) return false;
    for (std::size_t i = diff[0] + 1; i < diff[1]; ++i)
        if (a[i] != 0) return false;
    return true;
}

Graph composition_graph(int r, int s) {
    const auto cs = compositions(r, s);
    Graph g(static_cast<int>(cs.size()));
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (composition_adjacent(cs[i], cs[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

int grid_vertex(GridPoint p, int s) { return (p.i - 1) * s + (p.j - 1); }

GridPoint grid_point(int vertex, int s) { return GridPoint{vertex / s + 1, vertex % s + 1}; }

bool is_partial_path(const LatticePath& path, int r, int s) {
    check_rs(r, s);
    for (std::size_t a = 0; a < path.size(); ++a) {
        const auto& p = path[a];
        if (p.i < 1 || p.i > r || p.j < 1 || p.j > s) return false;
        for (std::size_t b = 0; b < path.size(); ++b) {
            const auto& q = path[b];
            if (a != b && p == q) return false;
            if (p.i < q.i && p.j > q.j) return false;
        }
    }
    return true;
}

std::vector<LatticePath> full_paths(int r, int s) {
    check_rs(r, s);
    std::vector<LatticePath> out;
    LatticePath cur{GridPoint{1, 1}};
    auto rec = [&](auto&& self) -> void {
        const GridPoint last = cur.back();
        if (last.i == r && last.j == s) {
            out.push_back(cur);
            return;
        }
        if (last.j < s) {
            cur.push_back(GridPoint{last.i, last.j + 1});
            self(self);
            cur.pop_back();
        }
        if (last.i < r) {
            cur.push_back(GridPoint{last.i + 1, last.j});
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex staircase_triangulation(int r, int s) {
    std::vector<VertexSet> facets;
    for (const auto& p : full_paths(r, s)) {
        VertexSet f;
        for (const auto& q : p) f.push_back(grid_vertex(q, s));
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(r * s, std::move(facets));
}

std::vector<LatticePath> partial_paths(int r, int s) {
    std::vector<LatticePath> out;
    for (const auto& faces : staircase_triangulation(r, s).faces_by_dimension())
        for (const auto& f : faces) out.push_back(path_of_face(f, s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LatticePath> transversal_paths(int r, int s) {
    std::vector<LatticePath> out;
    for (auto& p : partial_paths(r, s)) {
        std::set<int> cols;
        for (const auto& q : p) cols.insert(q.i);
        if (static_cast<int>(cols.size()) == r) out.push_back(std::move(p));
    }
    return out;
}

std::vector<LatticePath> minimal_paths(int r, int s) {
    std::vector<LatticePath> out;
    for (auto& p : transversal_paths(r, s))
        if (static_cast<int>(p.size()) == r) out.push_back(std::move(p));
    return out;
}

Composition a_vector(const LatticePath& path, int s) {
    Composition a(static_cast<std::size_t>(s), 0);
    for (const auto& p : path) {
        if (p.j < 1 || p.j > s) throw std::invalid_argument("a_vector: row out of range");
        ++a[static_cast<std::size_t>(p.j - 1)];
    }
    return a;
}

LatticePath minimal_path_of(const Composition& a) {
    LatticePath out;
    int col = 1;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] < 0) throw std::invalid_argument("minimal_path_of: negative part");
        for (int t = 0; t < a[j]; ++t) out.push_back(GridPoint{col++, static_cast<int>(j) + 1});
    }
    return out;
}

namespace {

// Minimal paths inside a transversal path: one point chosen per column.
std::vector<LatticePath> minimal_subpaths(const LatticePath& path, int r) {
    std::vector<LatticePath> cols(static_cast<std::size_t>(r));
    for (const auto& p : path) cols[static_cast<std::size_t>(p.i - 1)].push_back(p);
    std::vector<LatticePath> out{LatticePath{}};
    for (const auto& c : cols) {
        if (c.empty()) throw std::invalid_argument("path is not transversal");
        std::vector<LatticePath> next;
        for (const auto& prefix : out)
            for (const auto& p : c) {
                auto q = prefix;
                q.push_back(p);
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

CompositionComplex composition_complex(int r, int s) {
    CompositionComplex cc;
    cc.r = r;
    cc.s = s;
    cc.vertices = compositions(r, s);
    cc.cells = transversal_paths(r, s);
    std::map<Composition, int> index;
    for (std::size_t i = 0; i < cc.vertices.size(); ++i) index[cc.vertices[i]] = static_cast<int>(i);
    for (const auto& cell : cc.cells) {
        std::vector<int> vs;
        for (const auto& mu : minimal_subpaths(cell, r)) vs.push_back(index.at(a_vector(mu, s)));
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        cc.cell_vertices.push_back(std::move(vs));
        cc.cell_dimension.push_back(static_cast<int>(cell.size()) - r);
    }
    return cc;
}

IndexSet phi(const LatticePath& path, int r, int s) {
    if (s < 2) throw std::invalid_argument("phi: s must be at least 2");
    if (!is_partial_path(path, r, s)) throw std::invalid_argument("phi: not a partial path");
    std::optional<IndexSet> acc;
    for (const auto& mu : minimal_subpaths(path, r)) {
        const auto f = chi_inverse(a_vector(mu, s));
        if (!acc) {
            acc = f;
            continue;
        }
        IndexSet next;
        std::set_intersection(acc->begin(), acc->end(), f.begin(), f.end(), std::back_inserter(next));
        acc = std::move(next);
    }
    return acc.value_or(IndexSet{});
}

LatticePath psi(const IndexSet& g, int r, int s) {
    if (s < 2) throw std::invalid_argument("psi: s must be at least 2");
    const int d = 2 * s - 2;
    const int n = r + d;
    check_range(g, n);
    std::set<GridPoint> pts;
    for (const auto& f : lower_facets(n, d))
        if (is_subset(g, f))
            for (const auto& p : minimal_path_of(chi(f, n, d))) pts.insert(p);
    return LatticePath(pts.begin(), pts.end());
}

DualityReport verify_composition_duality(int r, int s) {
    if (r < 1 || s < 2) throw std::invalid_argument("verify_composition_duality: need r >= 1 and s >= 2");
    const int d = 2 * s - 2;
    const int n = r + d;
    const auto cc = composition_complex(r, s);
    DualityReport rep;
    rep.cells = cc.cells.size();

    std::vector<IndexSet> images;
    for (const auto& cell : cc.cells) {
        images.push_back(phi(cell, r, s));
        if (psi(images.back(), r, s) != cell) rep.psi_after_phi = false;
    }
    const std::set<IndexSet> image_set(images.begin(), images.end());
    rep.injective = image_set.size() == images.size();

    std::set<IndexSet> target;
    for (int size = s - 1; size <= d; ++size)
        for (auto& g : subsets_of_size(n, size))
            if (is_strict_lower_face(g, n, d)) target.insert(std::move(g));
    rep.image_is_lower_interval = target == image_set;
    for (const auto& g : target) {
        const auto p = psi(g, r, s);
        if (!is_partial_path(p, r, s) || phi(p, r, s) != g) {
            rep.phi_after_psi = false;
            break;
        }
    }

    for (std::size_t a = 0; a < cc.cells.size() && rep.inclusion_reversing; ++a)
        for (std::size_t b = 0; b < cc.cells.size(); ++b) {
            const bool below = std::includes(cc.cells[b].begin(), cc.cells[b].end(), cc.cells[a].begin(),
                                             cc.cells[a].end());
            if (below != is_subset(images[b], images[a])) {
                rep.inclusion_reversing = false;
                break;
            }
        }

    std::set<std::pair<int, int>> edges;
    for (std::size_t c = 0; c < cc.cells.size(); ++c) {
        if (cc.cell_dimension[c] != 1) continue;
        if (cc.cell_vertices[c].size() != 2) {
            rep.skeleton_is_composition_graph = false;
            continue;
        }
        edges.emplace(cc.cell_vertices[c][0], cc.cell_vertices[c][1]);
    }
    const auto expected = composition_graph(r, s).edges();
    rep.skeleton_is_composition_graph =
        rep.skeleton_is_composition_graph && edges == std::set<std::pair<int, int>>(expected.begin(), expected.end());
    return rep;
}

Graph staircase_graph(int r, int s) {
    check_rs(r, s);
    Graph g(r * s);
    for (int v = 0; v < r * s; ++v)
        for (int w = 0; w < r * s; ++w) {
            const auto p = grid_point(v, s);
            const auto q = grid_point(w, s);
            if (p.i < q.i && p.j <= q.j) g.add_edge(v, w);
        }
    return g;
}

std::vector<int> embed_staircase(int k, int m, int r, int s) {
    const DissectionParams params(k, m);
    if (m < 2) throw std::invalid_argument("embed_staircase: m must be at least 2");
    const int r_max = ((m - 1) * (k - 2) + 2) / (k - 1);
    if (r < 1 || r > r_max) throw std::invalid_argument("embed_staircase: r out of range");
    if (s < 1 || s > k - 1) throw std::invalid_argument("embed_staircase: s out of range");
    const int n = params.polygon_size();
    const auto diags = allowable_diagonals(k, m);
    std::vector<int> out;
    for (int b = 0; b < r; ++b)
        for (int j = 0; j < s; ++j) {
            const int x = (b * (k - 1) + j) % n;
            const int y = (b * (k - 1) + j + k - 1) % n;
            const Diagonal dg{std::min(x, y), std::max(x, y)};
            auto it = std::lower_bound(diags.begin(), diags.end(), dg);
            if (it == diags.end() || *it != dg) throw std::logic_error("embed_staircase: image is not allowable");
            out.push_back(static_cast<int>(it - diags.begin()));
        }
    if (std::set<int>(out.begin(), out.end()).size() != out.size())
        throw std::logic_error("embed_staircase: images collide");
    return out;
}

namespace {

std::set<std::vector<VertexSet>> unordered_cells(const HomComplex& hc) {
    std::set<std::vector<VertexSet>> out;
    for (auto parts : hc.cells) {
        std::sort(parts.parts.begin(), parts.parts.end());
        out.insert(std::move(parts.parts));
    }
    return out;
}

// Column slices of a path as grid vertex sets.
std::vector<VertexSet> column_parts(const LatticePath& path, int r, int s) {
    std::vector<VertexSet> parts(static_cast<std::size_t>(r));
    for (const auto& p : path) parts[static_cast<std::size_t>(p.i - 1)].push_back(grid_vertex(p, s));
    return parts;
}

std::vector<VertexSet> mapped_parts(const LatticePath& path, int r, int s, const std::vector<int>& emb,
                                    const VertexSet& extension) {
    std::vector<VertexSet> parts;
    for (const auto& col : column_parts(path, r, s)) {
        VertexSet p;
        for (int v : col) p.push_back(emb[static_cast<std::size_t>(v)]);
        std::sort(p.begin(), p.end());
        parts.push_back(std::move(p));
    }
    for (int e : extension) parts.push_back({e});
    return parts;
}

// Whether the transversal paths, completed by the extension, form a copy of the
// composition complex inside D.
bool slice_matches(int k, int m, int r, int s, const std::vector<int>& emb, const VertexSet& extension,
                   std::string& why) {
    const Graph kg = complete_graph(m - 1);
    const Graph ind = independence_graph(k, m);
    const int h = ind.vertex_count();
    const auto cc = composition_complex(r, s);

    std::map<Composition, Point> vertex_point;
    for (const auto& mu : minimal_paths(r, s)) {
        const auto cell = make_projected_cell(mapped_parts(mu, r, s, emb, extension), h);
        vertex_point[a_vector(mu, s)] = cell.points.front();
    }
    std::set<Point> distinct;
    for (const auto& [c, p] : vertex_point) distinct.insert(p);
    if (distinct.size() != vertex_point.size()) {
        why = "two compositions project to the same point";
        return false;
    }

    std::vector<ProjectedCell> top;
    for (std::size_t c = 0; c < cc.cells.size(); ++c) {
        const auto parts = mapped_parts(cc.cells[c], r, s, emb, extension);
        if (!is_hom_cell(kg, ind, parts, HomMode::hom)) {
            why = "a completed path is not a cell of Hom(K_{m-1}, I)";
            return false;
        }
        auto cell = make_projected_cell(parts, h);
        std::vector<Point> expected;
        for (int v : cc.cell_vertices[c]) expected.push_back(vertex_point.at(cc.vertices[static_cast<std::size_t>(v)]));
        std::sort(expected.begin(), expected.end());
        if (cell.vertices != expected) {
            why = "projected cell vertices differ from the composition cell";
            return false;
        }
        if (static_cast<int>(cc.cells[c].size()) == r + s - 1) top.push_back(std::move(cell));
    }
    if (!common_face_test(top).is_complex) {
        why = "completed full paths do not meet in common faces";
        return false;
    }
    return true;
}

}  // namespace

StaircaseEmbeddingReport verify_staircase_embedding(int k, int m, int r, int s) {
    const auto emb = embed_staircase(k, m, r, s);
    const Graph st = staircase_graph(r, s);
    const Graph ind = independence_graph(k, m);
    StaircaseEmbeddingReport rep;

    for (int u = 0; u < st.vertex_count(); ++u)
        for (int v = u + 1; v < st.vertex_count(); ++v) {
            const bool in_i = ind.adjacent(emb[static_cast<std::size_t>(u)], emb[static_cast<std::size_t>(v)]);
            if (st.adjacent(u, v) && !in_i) rep.is_subgraph = false;
            if (!st.adjacent(u, v) && in_i) ++rep.extra_independent_pairs;
        }
    rep.is_induced = rep.extra_independent_pairs == 0;
    if (!rep.is_induced)
        rep.notes.push_back(std::to_string(rep.extra_independent_pairs) + " non-adjacent grid pairs map to noncrossing diagonals");

    const Graph kr = complete_graph(r);
    const auto hom_cells = unordered_cells(build_hom(kr, st, HomMode::hom));
    const auto ihom_cells = unordered_cells(build_hom(kr, st, HomMode::ihom));
    std::set<std::vector<VertexSet>> path_cells;
    const auto paths = full_paths(r, s);
    for (const auto& p : paths) {
        auto parts = column_parts(p, r, s);
        std::sort(parts.begin(), parts.end());
        path_cells.insert(std::move(parts));
    }
    rep.full_path_count = paths.size();
    rep.hom_facet_count = hom_cells.size();
    rep.hom_facets_are_full_paths = hom_cells == path_cells;
    rep.ihom_equals_hom = ihom_cells == hom_cells;

    for (const auto& p : paths) {
        VertexSet x;
        for (const auto& q : p) x.push_back(emb[static_cast<std::size_t>(grid_vertex(q, s))]);
        std::sort(x.begin(), x.end());
        if (!is_face_of_D_plus(x, k, m)) {
            rep.paths_in_D_plus = false;
            rep.notes.push_back("an embedded full path is not a face of D_plus");
            break;
        }
    }

    // Complete the image by m-1-r diagonals noncrossing with it and each other.
    const int need = m - 1 - r;
    std::vector<VertexSet> extensions;
    if (need == 0) {
        extensions.push_back({});
    } else {
        Bitset cand(static_cast<std::size_t>(ind.vertex_count()));
        cand.set();
        for (int v : emb) {
            cand &= ind.neighbours(v);
            cand.reset(static_cast<std::size_t>(v));
        }
        const auto free = to_vertex_set(cand);
        if (!free.empty())
            for (const auto& c : maximal_cliques(induced_subgraph(ind, free)))
                if (static_cast<int>(c.size()) >= need) {
                    VertexSet e;
                    for (int i = 0; i < need; ++i) e.push_back(free[static_cast<std::size_t>(c[static_cast<std::size_t>(i)])]);
                    extensions.push_back(std::move(e));
                }
    }
    rep.slice_in_D = false;
    std::string why = "no diagonals complete the image to m-1 parts";
    for (const auto& e : extensions)
        if (slice_matches(k, m, r, s, emb, e, why)) {
            rep.slice_in_D = true;
            break;
        }
    if (!rep.slice_in_D) rep.notes.push_back(why);
    return rep;
}

}  // namespace homplex
