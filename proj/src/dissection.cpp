#include "homplex/dissection.hpp"

#include "homplex/hom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace homplex {

DissectionParams::DissectionParams(int k_, int m_) : k(k_), m(m_) {
    if (k < 3) throw std::invalid_argument("dissection: k must be at least 3");
    if (m < 1) throw std::invalid_argument("dissection: m must be at least 1");
}

std::vector<Diagonal> allowable_diagonals(int k, int m) {
    const DissectionParams p(k, m);
    const int n = p.polygon_size();
    std::set<Diagonal> out;
    for (int x = 0; x < n; ++x)
        for (int j = 0; j <= m - 2; ++j) {
            const int y = (x + k - 1 + j * (k - 2)) % n;
            out.insert(Diagonal{std::min(x, y), std::max(x, y)});
        }
    std::vector<Diagonal> list(out.begin(), out.end());
    if (static_cast<int>(list.size()) * 2 != (m - 1) * n)
        throw std::logic_error("allowable_diagonals: cardinality differs from (m-1)N/2");
    return list;
}

bool crossing(Diagonal d1, Diagonal d2, int n) {
    for (int v : {d1.a, d1.b, d2.a, d2.b})
        if (v < 0 || v >= n) throw std::invalid_argument("crossing: endpoint out of range");
    // Labels increase around the cycle, so cyclic interleaving is linear interleaving.
    return (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) || (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b);
}

Graph crossing_graph(int k, int m) {
    const auto diags = allowable_diagonals(k, m);
    const int n = DissectionParams(k, m).polygon_size();
    Graph g(static_cast<int>(diags.size()));
    for (std::size_t i = 0; i < diags.size(); ++i)
        for (std::size_t j = i + 1; j < diags.size(); ++j)
            if (crossing(diags[i], diags[j], n)) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph independence_graph(int k, int m) { return complement(crossing_graph(k, m)); }

std::vector<VertexSet> dissections(int k, int m) {
    const Graph ind = independence_graph(k, m);
    if (ind.vertex_count() == 0) return {};
    // Maximal cliques of the independence graph; all have size m-1.
    auto facets = maximal_cliques(ind);
    for (const auto& f : facets)
        if (static_cast<int>(f.size()) != m - 1) throw std::logic_error("dissections: maximal noncrossing set of wrong size");
    return facets;
}

SimplicialComplex build_T(int k, int m) {
    if (m < 2) throw std::invalid_argument("build_T: m must be at least 2");
    return SimplicialComplex(static_cast<int>(allowable_diagonals(k, m).size()), dissections(k, m));
}

std::vector<ProjectedCell> build_D(int k, int m) {
    if (m < 2) throw std::invalid_argument("build_D: m must be at least 2");
    return projected_complex(complete_graph(m - 1), independence_graph(k, m), HomMode::hom);
}

SimplicialComplex build_D_plus(int k, int m) {
    if (m < 2) throw std::invalid_argument("build_D_plus: m must be at least 2");
    return projected_simplicial_complex(m - 1, independence_graph(k, m), HomMode::hom_plus_transversal);
}

bool is_transversal_face(const VertexSet& x, int k, int m) {
    return static_cast<int>(components_within(crossing_graph(k, m), x).size()) >= m - 1;
}

bool is_face_of_D_plus(const VertexSet& x, int k, int m) {
    const Graph cr = crossing_graph(k, m);
    const int c = static_cast<int>(components_within(cr, x).size());
    if (c >= m - 1) return true;
    const Graph ind = complement(cr);
    Bitset cand(static_cast<std::size_t>(ind.vertex_count()));
    cand.set();
    for (int v : x) cand &= ind.neighbours(v);
    const auto free = to_vertex_set(cand);
    if (free.empty()) return false;
    return clique_number(induced_subgraph(ind, free)) >= m - 1 - c;
}

TransversalComplex build_D_plus_t(int k, int m) {
    TransversalComplex out{build_D_plus(k, m), {}};
    const Graph cr = crossing_graph(k, m);
    for (const auto& faces : out.complex.faces_by_dimension())
        for (const auto& f : faces)
            if (static_cast<int>(components_within(cr, f).size()) >= m - 1) out.transversal_faces.push_back(f);
    std::sort(out.transversal_faces.begin(), out.transversal_faces.end());
    return out;
}

namespace {

// Index of the dissection with the given 0/1 indicator point.
std::map<Point, int> dissection_index(const std::vector<VertexSet>& ds, int h) {
    std::map<Point, int> idx;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        Point p(static_cast<std::size_t>(h), 0);
        for (int v : ds[i]) p[static_cast<std::size_t>(v)] = 1;
        idx[p] = static_cast<int>(i);
    }
    return idx;
}

}  // namespace

Graph flip_graph(int k, int m) {
    if (m < 2) throw std::invalid_argument("flip_graph: m must be at least 2");
    const auto ds = dissections(k, m);
    const Graph ind = independence_graph(k, m);
    const auto idx = dissection_index(ds, ind.vertex_count());
    const auto sk = projected_one_skeleton(m - 1, ind);
    Graph g(static_cast<int>(ds.size()));
    for (auto [a, b] : sk.edges)
        g.add_edge(idx.at(sk.vertices[static_cast<std::size_t>(a)]), idx.at(sk.vertices[static_cast<std::size_t>(b)]));
    return g;
}

Graph flip_graph_by_exchange(int k, int m) {
    const auto ds = dissections(k, m);
    Graph g(static_cast<int>(ds.size()));
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j) {
            VertexSet diff;
            std::set_difference(ds[i].begin(), ds[i].end(), ds[j].begin(), ds[j].end(), std::back_inserter(diff));
            if (diff.size() == 1) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return g;
}

namespace {

class IcDeltaEnumerator {
public:
    IcDeltaEnumerator(const Graph& cr, std::size_t budget) : cr_(cr), budget_(budget) {}

    std::vector<VertexSet> run() {
        std::vector<VertexSet> comps;
        rec(0, comps);
        return std::move(faces_);
    }

    // Whether v can join x: the members of x crossing v form exactly one component.
    static bool can_add(const Graph& cr, const std::vector<VertexSet>& comps, int v) {
        int touched = -1;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            std::size_t hits = 0;
            for (int u : comps[c])
                if (cr.adjacent(u, v)) ++hits;
            if (hits == 0) continue;
            if (hits != comps[c].size() || touched >= 0) return false;
            touched = static_cast<int>(c);
        }
        return true;
    }

private:
    void rec(int start, std::vector<VertexSet>& comps) {
        for (int v = start; v < cr_.vertex_count(); ++v) {
            if (!can_add(cr_, comps, v)) continue;
            auto saved = comps;
            bool merged = false;
            for (auto& c : comps)
                if (cr_.adjacent(c.front(), v)) {
                    c.push_back(v);
                    merged = true;
                    break;
                }
            if (!merged) comps.push_back({v});
            VertexSet face;
            for (const auto& c : comps) face.insert(face.end(), c.begin(), c.end());
            std::sort(face.begin(), face.end());
            faces_.push_back(std::move(face));
            if (faces_.size() > budget_) throw BudgetExceeded("IC_Delta face budget exceeded");
            rec(v + 1, comps);
            comps = std::move(saved);
        }
    }

    const Graph& cr_;
    std::size_t budget_;
    std::vector<VertexSet> faces_;
};

std::vector<VertexSet> ic_delta_faces(const Graph& cr, std::size_t budget) { return IcDeltaEnumerator(cr, budget).run(); }

}  // namespace

SimplicialComplex build_ic_delta(int k, int m, std::size_t budget) {
    const Graph cr = crossing_graph(k, m);
    std::vector<VertexSet> facets;
    for (const auto& f : ic_delta_faces(cr, budget)) {
        const auto comps = components_within(cr, f);
        bool maximal = true;
        for (int v = 0; v < cr.vertex_count() && maximal; ++v)
            if (!std::binary_search(f.begin(), f.end(), v) && IcDeltaEnumerator::can_add(cr, comps, v)) maximal = false;
        if (maximal) facets.push_back(f);
    }
    return SimplicialComplex(cr.vertex_count(), std::move(facets));
}

std::vector<VertexSet> ic_delta_transversal_faces(int k, int m, std::size_t budget) {
    const Graph cr = crossing_graph(k, m);
    std::vector<VertexSet> out;
    for (auto& f : ic_delta_faces(cr, budget))
        if (static_cast<int>(components_within(cr, f).size()) == m - 1) out.push_back(std::move(f));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<VertexSet>> intersect_cells_by_matching(const std::vector<VertexSet>& a,
                                                                  const std::vector<VertexSet>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("intersect_cells_by_matching: part counts differ");
    std::vector<std::size_t> perm(b.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::optional<std::vector<VertexSet>> found;
    do {
        std::vector<VertexSet> face;
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) {
            VertexSet common;
            std::set_intersection(a[i].begin(), a[i].end(), b[perm[i]].begin(), b[perm[i]].end(),
                                  std::back_inserter(common));
            ok = !common.empty();
            face.push_back(std::move(common));
        }
        if (!ok) continue;
        if (found) throw std::logic_error("intersect_cells_by_matching: matching is not unique");
        std::sort(face.begin(), face.end());
        found = std::move(face);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return found;
}

DimensionReport dimension_of_D(int k, int m) {
    if (m < 2) throw std::invalid_argument("dimension_of_D: m must be at least 2");
    DimensionReport r;
    r.formula_D = (m / 2) * (k - 2);
    r.formula_D_plus = r.formula_D + m - 2;
    for (const auto& c : build_D(k, m)) {
        int size = 0;
        for (const auto& p : c.parts) size += static_cast<int>(p.size());
        const int d = size - (m - 1);
        r.dim_D = std::max(r.dim_D, d);
        r.min_cell_dim_D = r.min_cell_dim_D < 0 ? d : std::min(r.min_cell_dim_D, d);
    }
    const auto dplus = build_D_plus(k, m);
    r.dim_D_plus = dplus.dimension();
    for (const auto& f : dplus.facets()) {
        const int d = static_cast<int>(f.size()) - 1;
        r.min_facet_dim_D_plus = r.min_facet_dim_D_plus < 0 ? d : std::min(r.min_facet_dim_D_plus, d);
    }
    return r;
}

Integer fuss_count(int k, int m) {
    DissectionParams p(k, m);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>((k - 1) * m), static_cast<unsigned long>(m - 1));
    return b / m;
}

Integer wedge_count(int k, int m) {
    DissectionParams p(k, m);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m * (k - 2)), static_cast<unsigned long>(m - 1));
    return b / m;
}

}  // namespace homplex
