#include "homplex/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace homplex {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complement(const Graph& h) {
    const int n = h.vertex_count();
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!h.adjacent(u, v)) g.add_edge(u, v);
    return g;
}

Graph induced_subgraph(const Graph& h, const VertexSet& vertices) {
    Graph g(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (h.adjacent(vertices[i], vertices[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Bitset to_bitset(const VertexSet& s, int n) {
    Bitset b(static_cast<std::size_t>(n));
    for (int v : s) b.set(static_cast<std::size_t>(v));
    return b;
}

VertexSet to_vertex_set(const Bitset& b) {
    VertexSet out;
    for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
    return out;
}

namespace {

void check_vertices(const Graph& h, const VertexSet& s) {
    for (int v : s)
        if (v < 0 || v >= h.vertex_count()) throw std::invalid_argument("vertex out of range");
}

// Greedy colouring bound: order[i] can join a clique of size at most bound[i].
void colour_sort(const Graph& h, const Bitset& p, std::vector<int>& order, std::vector<int>& bound) {
    order.clear();
    bound.clear();
    Bitset uncoloured = p;
    int colour = 0;
    while (uncoloured.any()) {
        ++colour;
        Bitset q = uncoloured;
        while (q.any()) {
            auto v = q.find_first();
            q.reset(v);
            q -= h.neighbours(static_cast<int>(v));
            uncoloured.reset(v);
            order.push_back(static_cast<int>(v));
            bound.push_back(colour);
        }
    }
}

void expand_clique(const Graph& h, Bitset p, int size, int& best) {
    std::vector<int> order, bound;
    colour_sort(h, p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
        if (size + bound[i] <= best) return;
        const int v = order[i];
        Bitset next = p & h.neighbours(v);
        if (next.none())
            best = std::max(best, size + 1);
        else
            expand_clique(h, next, size + 1, best);
        p.reset(static_cast<std::size_t>(v));
    }
}

void bron_kerbosch(const Graph& h, Bitset& r, Bitset p, Bitset x, std::vector<VertexSet>& out) {
    if (p.none() && x.none()) {
        out.push_back(to_vertex_set(r));
        return;
    }
    // Pivot with most neighbours in p.
    Bitset px = p | x;
    std::size_t pivot = px.find_first(), best = 0;
    for (auto u = px.find_first(); u != Bitset::npos; u = px.find_next(u)) {
        auto c = (p & h.neighbours(static_cast<int>(u))).count();
        if (c >= best) {
            best = c;
            pivot = u;
        }
    }
    Bitset candidates = p - h.neighbours(static_cast<int>(pivot));
    for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
        const auto& nv = h.neighbours(static_cast<int>(v));
        r.set(v);
        bron_kerbosch(h, r, p & nv, x & nv, out);
        r.reset(v);
        p.reset(v);
        x.set(v);
    }
}

}  // namespace

int clique_number(const Graph& h) {
    if (h.vertex_count() == 0) throw std::invalid_argument("clique_number: empty vertex set");
    Bitset all(static_cast<std::size_t>(h.vertex_count()));
    all.set();
    int best = 1;
    expand_clique(h, all, 0, best);
    return best;
}

std::vector<VertexSet> maximal_cliques(const Graph& h) {
    const auto n = static_cast<std::size_t>(h.vertex_count());
    Bitset r(n), p(n), x(n);
    p.set();
    std::vector<VertexSet> out;
    if (n == 0) return out;
    bron_kerbosch(h, r, p, x, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_complete_bipartite(const Graph& h, const VertexSet& a, const VertexSet& b) {
    check_vertices(h, a);
    check_vertices(h, b);
    for (int u : a)
        for (int v : b)
            if (u != v && !h.adjacent(u, v)) return false;
    return true;
}

bool is_induced_multipartite(const Graph& h, const PartSystem& ps) {
    const auto& parts = ps.parts;
    for (const auto& p : parts) check_vertices(h, p);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            VertexSet common;
            std::set_intersection(parts[i].begin(), parts[i].end(), parts[j].begin(), parts[j].end(),
                                  std::back_inserter(common));
            if (!common.empty()) throw std::invalid_argument("is_induced_multipartite: overlapping parts");
        }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t a = 0; a < parts[i].size(); ++a)
            for (std::size_t b = a + 1; b < parts[i].size(); ++b)
                if (h.adjacent(parts[i][a], parts[i][b])) return false;
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (!is_complete_bipartite(h, parts[i], parts[j])) return false;
    }
    return true;
}

namespace {

class MultipartiteEnumerator {
public:
    MultipartiteEnumerator(const Graph& h, int g, MultipartiteOptions opt) : h_(h), g_(g), opt_(opt) {
        const auto n = static_cast<std::size_t>(h.vertex_count());
        above_.assign(n, Bitset(n));
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t u = v + 1; u < n; ++u) above_[v].set(u);
    }

    std::vector<PartSystem> run() {
        Bitset all(static_cast<std::size_t>(h_.vertex_count()));
        all.set();
        next_part(all, -1);
        return std::move(out_);
    }

private:
    // cand: unused vertices adjacent to everything placed so far.
    void next_part(const Bitset& cand, int last_min) {
        const int remaining = g_ - static_cast<int>(parts_.size());
        if (remaining == 0) {
            emit();
            return;
        }
        Bitset starts = last_min < 0 ? cand : (cand & above_[static_cast<std::size_t>(last_min)]);
        if (static_cast<int>(starts.count()) < remaining) return;
        for (auto v = starts.find_first(); v != Bitset::npos; v = starts.find_next(v)) {
            Bitset pool = cand & above_[v];
            if (opt_.induced) pool -= h_.neighbours(static_cast<int>(v));
            VertexSet part{static_cast<int>(v)};
            grow(part, pool, cand & h_.neighbours(static_cast<int>(v)), remaining);
        }
    }

    void grow(VertexSet& part, const Bitset& pool, const Bitset& next, int remaining) {
        if (remaining == 1 || next.count() >= static_cast<std::size_t>(remaining - 1)) {
            parts_.push_back(part);
            next_part(next, part.front());
            parts_.pop_back();
        }
        for (auto u = pool.find_first(); u != Bitset::npos; u = pool.find_next(u)) {
            Bitset pool2 = pool & above_[u];
            if (opt_.induced) pool2 -= h_.neighbours(static_cast<int>(u));
            part.push_back(static_cast<int>(u));
            grow(part, pool2, next & h_.neighbours(static_cast<int>(u)), remaining);
            part.pop_back();
        }
    }

    bool is_maximal() const {
        const auto n = static_cast<std::size_t>(h_.vertex_count());
        std::vector<Bitset> common(parts_.size(), Bitset(n));
        Bitset used(n);
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            common[i].set();
            for (int x : parts_[i]) {
                common[i] &= h_.neighbours(x);
                used.set(static_cast<std::size_t>(x));
            }
        }
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            Bitset addable(n);
            addable.set();
            addable -= used;
            for (std::size_t j = 0; j < parts_.size(); ++j)
                if (j != i) addable &= common[j];
            if (opt_.induced)
                for (int x : parts_[i]) addable -= h_.neighbours(x);
            if (addable.any()) return false;
        }
        return true;
    }

    void emit() {
        if (opt_.maximal_only && !is_maximal()) return;
        if (!opt_.ordered) {
            out_.push_back(PartSystem{parts_});
            return;
        }
        std::vector<std::size_t> perm(parts_.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            PartSystem ps;
            for (auto i : perm) ps.parts.push_back(parts_[i]);
            out_.push_back(std::move(ps));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    const Graph& h_;
    int g_;
    MultipartiteOptions opt_;
    std::vector<Bitset> above_;
    std::vector<VertexSet> parts_;
    std::vector<PartSystem> out_;
};

}  // namespace

std::vector<PartSystem> enumerate_multipartite_cells(const Graph& h, int g, MultipartiteOptions options) {
    if (g < 1) throw std::invalid_argument("enumerate_multipartite_cells: g must be positive");
    if (h.vertex_count() == 0) return {};
    auto out = MultipartiteEnumerator(h, g, options).run();
    std::sort(out.begin(), out.end());
    return out;
}

bool is_connected(const Graph& h) {
    const int n = h.vertex_count();
    if (n == 0) return true;
    VertexSet all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return components_within(h, all).size() == 1;
}

std::vector<VertexSet> components_within(const Graph& h, const VertexSet& vertices) {
    const auto n = static_cast<std::size_t>(h.vertex_count());
    Bitset remaining = to_bitset(vertices, h.vertex_count());
    std::vector<VertexSet> out;
    while (remaining.any()) {
        Bitset comp(n), frontier(n);
        frontier.set(remaining.find_first());
        while (frontier.any()) {
            comp |= frontier;
            remaining -= frontier;
            Bitset next(n);
            for (auto v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v))
                next |= h.neighbours(static_cast<int>(v));
            frontier = next & remaining;
        }
        out.push_back(to_vertex_set(comp));
    }
    return out;
}

namespace {

// Edge (i, j), i < j, gets bit index in lexicographic pair order.
std::vector<std::vector<int>> pair_index(int n) {
    std::vector<std::vector<int>> idx(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
            idx[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = k;
            ++k;
        }
    return idx;
}

std::uint64_t graph_mask(const Graph& h, const std::vector<std::vector<int>>& idx) {
    std::uint64_t m = 0;
    for (auto [u, v] : h.edges()) m |= std::uint64_t{1} << idx[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    return m;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if (mask >> k & 1) g.add_edge(i, j);
    return g;
}

// Bit permutation tables for every vertex permutation.
std::vector<std::vector<int>> edge_permutations(int n) {
    auto idx = pair_index(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> map;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                map.push_back(idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                                 [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
        out.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::uint64_t apply(const std::vector<int>& map, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < map.size(); ++k)
        if (mask >> k & 1) out |= std::uint64_t{1} << map[k];
    return out;
}

}  // namespace

Graph canonical_form(const Graph& h) {
    const int n = h.vertex_count();
    if (n > 8) throw std::invalid_argument("canonical_form: at most 8 vertices");
    auto idx = pair_index(n);
    const std::uint64_t mask = graph_mask(h, idx);
    std::uint64_t best = mask;
    for (const auto& map : edge_permutations(n)) best = std::min(best, apply(map, mask));
    return graph_from_mask(n, best);
}

std::vector<Graph> graphs_up_to_isomorphism(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("graphs_up_to_isomorphism: 0 <= n <= 6");
    const auto maps = edge_permutations(n);
    const int pairs = n * (n - 1) / 2;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        bool minimal = true;
        for (const auto& map : maps)
            if (apply(map, mask) < mask) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(graph_from_mask(n, mask));
    }
    return out;
}

}  // namespace homplex
