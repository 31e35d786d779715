#pragma once

#include "homplex/complex.hpp"
#include "homplex/graph.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace homplex {

struct DissectionParams {
    int k = 3;
    int m = 1;

    DissectionParams(int k_, int m_);
    int polygon_size() const { return m * (k - 2) + 2; }
};

// Endpoints a < b of a diagonal of the N-gon with vertices 0..N-1.
struct Diagonal {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

std::vector<Diagonal> allowable_diagonals(int k, int m);

// Strict interleaving; shared endpoints never cross.
bool crossing(Diagonal d1, Diagonal d2, int n);

// Vertex i is the i-th allowable diagonal.
Graph independence_graph(int k, int m);
Graph crossing_graph(int k, int m);

// Sets of pairwise non-crossing allowable diagonals.
SimplicialComplex build_T(int k, int m);

// Dissections (facets of T), sorted; vertex ids are diagonal indices.
std::vector<VertexSet> dissections(int k, int m);

std::vector<ProjectedCell> build_D(int k, int m);

// Complex generated by the transversal faces: unions of the parts of cells of
// Hom(K_{m-1}, I(k,m)).
SimplicialComplex build_D_plus(int k, int m);

struct TransversalComplex {
    SimplicialComplex complex;
    std::vector<VertexSet> transversal_faces;  // sorted
};

TransversalComplex build_D_plus_t(int k, int m);

// X is transversal iff the crossing graph on X has at least m-1 components.
bool is_transversal_face(const VertexSet& x, int k, int m);
// X lies in some transversal face.
bool is_face_of_D_plus(const VertexSet& x, int k, int m);

// Vertex i is dissections(k, m)[i]; edges from the 1-cells of D.
Graph flip_graph(int k, int m);
// Same vertex order; edges join dissections differing in exactly one diagonal.
Graph flip_graph_by_exchange(int k, int m);

// Faces: sets whose crossing-graph components are all cliques.
SimplicialComplex build_ic_delta(int k, int m, std::size_t budget = face_budget());
// Faces of IC_Delta with exactly m-1 cliques.
std::vector<VertexSet> ic_delta_transversal_faces(int k, int m, std::size_t budget = face_budget());

// Intersection of two cells of D via the unique part matching, or nullopt when
// no matching exists. Parts are indexed by diagonal.
std::optional<std::vector<VertexSet>> intersect_cells_by_matching(const std::vector<VertexSet>& a,
                                                                  const std::vector<VertexSet>& b);

struct DimensionReport {
    int dim_D = -1;
    int dim_D_plus = -1;
    int min_cell_dim_D = -1;       // smallest maximal-cell dimension of D
    int min_facet_dim_D_plus = -1;
    int formula_D = 0;             // floor(m/2)(k-2)
    int formula_D_plus = 0;        // formula_D + m - 2
    bool matches() const { return dim_D == formula_D && dim_D_plus == formula_D_plus; }
};

DimensionReport dimension_of_D(int k, int m);

// Number of dissections into k-gons, (1/m) binom((k-1)m, m-1).
Integer fuss_count(int k, int m);
// Reduced homology rank of T(k,m) in degree m-2, (1/m) binom(m(k-2), m-1).
Integer wedge_count(int k, int m);

}  // namespace homplex
