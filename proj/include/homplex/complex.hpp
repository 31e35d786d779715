#pragma once

#include "homplex/graph.hpp"
#include "homplex/linalg.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace homplex {

// Thrown when a face enumeration would exceed the configured face budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// HOMPLEX_BUDGET if set, else 5'000'000 faces.
std::size_t face_budget();

class SimplicialComplex {
public:
    SimplicialComplex() = default;
    // Sorts, deduplicates and drops facets contained in other facets.
    SimplicialComplex(int vertex_count, std::vector<VertexSet> facets);

    int vertex_count() const { return vertex_count_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    int dimension() const;
    bool contains(const VertexSet& face) const;

    // faces[d] lists the d-faces in lexicographic order.
    std::vector<std::vector<VertexSet>> faces_by_dimension(std::size_t budget = face_budget()) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertex_count_ == b.vertex_count_ && a.facets_ == b.facets_;
    }

private:
    int vertex_count_ = 0;
    std::vector<VertexSet> facets_;
};

SimplicialComplex full_simplex(int n);
SimplicialComplex simplex_boundary(int n);

std::vector<std::size_t> f_vector(const SimplicialComplex& k, std::size_t budget = face_budget());
SimplicialComplex skeleton(const SimplicialComplex& k, int d);
// Faces of a is a subset of faces of b.
bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b);

enum class LabelMode { hom, hom_plus };

struct LabelTuple {
    std::vector<VertexSet> parts;
    LabelMode mode = LabelMode::hom;

    // Product of simplices (hom) or join simplex (hom_plus).
    int dimension() const;
    bool all_nonempty() const;

    friend bool operator==(const LabelTuple& a, const LabelTuple& b) { return a.parts == b.parts && a.mode == b.mode; }
    friend bool operator<(const LabelTuple& a, const LabelTuple& b) { return a.parts < b.parts; }
};

// Includes t itself.
std::vector<LabelTuple> faces_of_cell(const LabelTuple& t);

// Convex hull of the g-scaled points {sum_i e_{v_i} : v_i in parts[i]}.
struct ProjectedCell {
    std::vector<VertexSet> parts;
    std::vector<Point> points;    // sorted multiset, one entry per choice
    std::vector<Point> vertices;  // hull vertices, sorted; equals points for disjoint parts

    friend bool operator==(const ProjectedCell& a, const ProjectedCell& b) {
        return a.parts == b.parts && a.points == b.points;
    }
};

ProjectedCell make_projected_cell(std::vector<VertexSet> parts, int h);

struct BadPair {
    std::size_t first = 0;
    std::size_t second = 0;
    std::vector<Point> points;  // circuit indices refer to this list
    Circuit witness;            // positive side in cells[first], negative side in cells[second]
};

struct FaceVerdict {
    bool is_complex = true;
    std::optional<BadPair> bad_pair;
};

// Whether conv(p) and conv(q) meet in a common face. On failure fills witness.
bool intersect_properly(const ProjectedCell& p, const ProjectedCell& q, BadPair* witness = nullptr);

FaceVerdict common_face_test(std::span<const ProjectedCell> cells);

}  // namespace homplex
