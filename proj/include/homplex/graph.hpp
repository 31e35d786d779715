#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace homplex {

using Bitset = boost::dynamic_bitset<>;

// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<int>;

class Graph {
public:
    explicit Graph(int n = 0);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const;

    // Throws on loops or out-of-range endpoints; repeated edges are ignored.
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
    const Bitset& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_;
    std::vector<Bitset> adj_;
};

struct PartSystem {
    std::vector<VertexSet> parts;
    bool allow_empty = false;
    bool disjoint_required = true;

    friend bool operator==(const PartSystem& a, const PartSystem& b) { return a.parts == b.parts; }
    friend bool operator<(const PartSystem& a, const PartSystem& b) { return a.parts < b.parts; }
};

struct MultipartiteOptions {
    bool induced = false;
    bool maximal_only = false;
    // false: one representative per S_g orbit, parts ordered by minimal element.
    bool ordered = true;
};

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph complement(const Graph& h);
Graph induced_subgraph(const Graph& h, const VertexSet& vertices);

Bitset to_bitset(const VertexSet& s, int n);
VertexSet to_vertex_set(const Bitset& b);

// Throws std::invalid_argument on the empty graph.
int clique_number(const Graph& h);

std::vector<VertexSet> maximal_cliques(const Graph& h);

// Every (a, b) with a in A, b in B, a != b is an edge; vacuous when A or B is empty.
bool is_complete_bipartite(const Graph& h, const VertexSet& a, const VertexSet& b);

// Cross-part pairs are edges and no pair inside a part is. Throws on overlapping parts.
bool is_induced_multipartite(const Graph& h, const PartSystem& parts);

// Cells of Hom(K_g, H) (or IHom when induced), output sorted.
std::vector<PartSystem> enumerate_multipartite_cells(const Graph& h, int g, MultipartiteOptions options = {});

bool is_connected(const Graph& h);

// Connected components of h restricted to the given vertices, each sorted, ordered by minimum.
std::vector<VertexSet> components_within(const Graph& h, const VertexSet& vertices);

// Brute force over all permutations; n <= 8.
Graph canonical_form(const Graph& h);

// One representative per isomorphism class on exactly n vertices, n <= 6.
std::vector<Graph> graphs_up_to_isomorphism(int n);

}  // namespace homplex
