#pragma once

#include "homplex/complex.hpp"
#include "homplex/graph.hpp"
#include "homplex/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homplex {

enum class HomMode { hom, hom_plus, hom_plus_transversal, ihom, ihom_plus };

std::string to_string(HomMode mode);
HomMode parse_hom_mode(const std::string& s);
bool is_plus_mode(HomMode mode);
bool is_induced_mode(HomMode mode);

struct HomComplex {
    Graph G;
    Graph H;
    HomMode mode = HomMode::hom;
    std::vector<LabelTuple> cells;  // maximal cells, sorted
};

// Whether parts form a cell of the given mode (not necessarily maximal).
bool is_hom_cell(const Graph& g, const Graph& h, const std::vector<VertexSet>& parts, HomMode mode);

HomComplex build_hom(const Graph& g, const Graph& h, HomMode mode);

// Every cell (all faces of the maximal cells), sorted. Transversal mode keeps
// only faces with all parts nonempty.
std::vector<LabelTuple> all_cells(const HomComplex& hc, std::size_t budget = face_budget());

// Cell counts by dimension.
std::vector<std::size_t> cell_f_vector(const HomComplex& hc, std::size_t budget = face_budget());

// Vertices mu_i(v) x e_i of the join simplex, block by block, as 0/1 rows of length gh + g.
std::vector<Point> join_vertices(const LabelTuple& t, int h);

// Vertex set of the slice of the join simplex at tail (1/g, ..., 1/g), sorted.
std::vector<RationalVector> cayley_slice(const LabelTuple& t, int g, int h);

// [I_h ... I_h 0; 0 ... 0 I_g], size (h + g) x (gh + g).
IntMatrix pi_box_matrix(int g, int h);
RationalVector apply(const IntMatrix& m, const RationalVector& v);

ProjectedCell project_pi(const LabelTuple& t, int h);

// Projected maximal cells of Hom or IHom, deduplicated by hull geometry.
std::vector<ProjectedCell> projected_complex(const Graph& g, const Graph& h, HomMode mode);

// Complex on V(H) generated by the unions of parts of the maximal cells of a plus
// mode for G = K_g. Throws unless mode is a plus mode.
SimplicialComplex projected_simplicial_complex(int g, const Graph& h, HomMode mode);

enum class PolytopalityMethod { criterion, geometric };

struct PolytopalityReport {
    bool empty = false;
    bool criterion = false;
    bool geometric = false;
    std::size_t cell_count = 0;
    std::optional<BadPair> witness;
    bool agree() const { return criterion == geometric; }
};

PolytopalityReport check_projection_polytopal(int g, const Graph& h);
// nullopt when the projection is empty.
std::optional<bool> is_projection_polytopal(int g, const Graph& h, PolytopalityMethod method);

struct OneSkeleton {
    std::vector<Point> vertices;                  // sorted
    std::vector<std::pair<int, int>> edges;       // indices into vertices, sorted
};

OneSkeleton projected_one_skeleton(int g, const Graph& h);
bool skeleton_in_hypersimplex_check(int g, const Graph& h);
// 1-skeleton of the hypersimplex with g ones in R^h.
OneSkeleton hypersimplex_one_skeleton(int g, int h);

struct MinkowskiPoint {
    RationalVector point;
    bool is_vertex = false;
};

std::vector<MinkowskiPoint> minkowski_vertices(const std::vector<VertexSet>& parts, const std::vector<Rational>& weights,
                                               int h);

struct BipartiteSpec {
    int left_count = 0;
    int right_count = 0;
    std::vector<std::pair<int, int>> edges;
};

struct PermutohedronHom {
    Graph G;
    Graph H;
    LabelTuple cell;
};

PermutohedronHom permutohedron_to_hom(const BipartiteSpec& spec);

// Vertices of conv(points) intersected with {x : x[first_tail + i] = tail[i]}, sorted.
std::vector<RationalVector> slice_vertices(const std::vector<RationalVector>& points, std::size_t first_tail,
                                           const std::vector<Rational>& tail);

struct SliceReport {
    bool slice_identity = true;
    bool transversal_cells_match = true;
    bool diagram_commutes = true;
    std::size_t hom_cells = 0;
    std::size_t plus_facets = 0;
};

// Slicing the join simplices of Hom_+ at the constant tail reproduces the
// Cayley slices of the Hom cells, and pi_box commutes with slicing.
SliceReport check_slice_identity(const Graph& g, const Graph& h);

}  // namespace homplex
