#pragma once

#include "homplex/complex.hpp"
#include "homplex/graph.hpp"

#include <compare>
#include <string>
#include <vector>

namespace homplex {

// Sorted subset of {1, ..., n}.
using IndexSet = std::vector<int>;
// Weak composition (a_1, ..., a_s).
using Composition = std::vector<int>;

// Grid point of [r] x [s]: column i, row j, both 1-based.
struct GridPoint {
    int i = 1;
    int j = 1;

    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Sorted by (i, j).
using LatticePath = std::vector<GridPoint>;

// Any two non-members of [n] have an even number of members of I strictly between them.
bool satisfies_gale_evenness(const IndexSet& s, int n);
bool is_cyclic_facet(const IndexSet& s, int n, int d);
// Facet whose final block (the run ending at n) has even size.
bool is_lower_facet(const IndexSet& s, int n, int d);
// Contained in some facet.
bool is_cyclic_face(const IndexSet& s, int n, int d);
// A face all of whose containing facets are lower.
bool is_strict_lower_face(const IndexSet& s, int n, int d);

std::vector<IndexSet> cyclic_facets(int n, int d);
std::vector<IndexSet> lower_facets(int n, int d);

// Hole sizes of a lower facet {i_1, i_1 + 1, ..., i_{d/2}, i_{d/2} + 1}.
Composition chi(const IndexSet& facet, int n, int d);
// Inverse of chi with s = c.size(), d = 2s - 2, n = sum(c) + d.
IndexSet chi_inverse(const Composition& c);

// Lexicographic order.
std::vector<Composition> compositions(int r, int s);
// Differ by one in two positions separated only by zeros.
bool composition_adjacent(const Composition& a, const Composition& b);
// Vertex i is compositions(r, s)[i].
Graph composition_graph(int r, int s);

// Vertex id of (i, j) in [r] x [s] is (i - 1) s + (j - 1).
int grid_vertex(GridPoint p, int s);
GridPoint grid_point(int vertex, int s);

bool is_partial_path(const LatticePath& path, int r, int s);
std::vector<LatticePath> full_paths(int r, int s);
// The staircase triangulation: faces are partial paths.
SimplicialComplex staircase_triangulation(int r, int s);

std::vector<LatticePath> partial_paths(int r, int s);
// Every column nonempty.
std::vector<LatticePath> transversal_paths(int r, int s);
// Exactly one point per column.
std::vector<LatticePath> minimal_paths(int r, int s);
// Number of points in each row.
Composition a_vector(const LatticePath& path, int s);
// The minimal path with the given row counts.
LatticePath minimal_path_of(const Composition& a);

struct CompositionComplex {
    int r = 0;
    int s = 0;
    std::vector<Composition> vertices;            // compositions(r, s)
    std::vector<LatticePath> cells;               // transversal paths
    std::vector<std::vector<int>> cell_vertices;  // indices into vertices, sorted
    std::vector<int> cell_dimension;              // |path| - r
};

CompositionComplex composition_complex(int r, int s);

// Intersection of chi_inverse(a(mu)) over minimal mu inside the path; d = 2s - 2.
IndexSet phi(const LatticePath& path, int r, int s);
// Union of the minimal paths a^{-1}(chi(F)) over lower facets F containing g.
LatticePath psi(const IndexSet& g, int r, int s);

struct DualityReport {
    std::size_t cells = 0;
    bool injective = true;
    bool psi_after_phi = true;
    bool phi_after_psi = true;
    bool inclusion_reversing = true;
    bool image_is_lower_interval = true;
    bool skeleton_is_composition_graph = true;
    bool passed() const {
        return injective && psi_after_phi && phi_after_psi && inclusion_reversing && image_is_lower_interval &&
               skeleton_is_composition_graph;
    }
};

// phi is an inclusion-reversing bijection from the cells of the composition
// complex onto the lower faces of C_{2s-2}(r + 2s - 2) with at least s - 1 elements.
DualityReport verify_composition_duality(int r, int s);

// Edge (i1, j1) - (i2, j2) iff i1 < i2 and j1 <= j2.
Graph staircase_graph(int r, int s);

// Diagonal index (into allowable_diagonals(k, m)) of each grid vertex.
std::vector<int> embed_staircase(int k, int m, int r, int s);

struct StaircaseEmbeddingReport {
    bool hom_facets_are_full_paths = true;
    bool ihom_equals_hom = true;
    bool is_subgraph = true;
    bool is_induced = true;
    bool paths_in_D_plus = true;
    bool slice_in_D = true;
    std::size_t full_path_count = 0;
    std::size_t hom_facet_count = 0;
    std::size_t extra_independent_pairs = 0;
    std::vector<std::string> notes;
    bool passed() const {
        return hom_facets_are_full_paths && ihom_equals_hom && is_subgraph && is_induced && paths_in_D_plus && slice_in_D;
    }
};

StaircaseEmbeddingReport verify_staircase_embedding(int k, int m, int r, int s);

}  // namespace homplex
