#pragma once

#include "homplex/complex.hpp"
#include "homplex/linalg.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace homplex {

// Column-major sparse integer matrix; each column sorted by row, no zeros.
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<int, Integer>>> columns;

    IntMatrix to_dense() const;
    std::size_t nonzeros() const;
};

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);

// Unit pivots are eliminated sparsely, the rest goes through dense SNF.
std::vector<Integer> smith_normal_form(const SparseIntMatrix& m);

struct ChainComplexData {
    std::vector<std::vector<VertexSet>> faces;  // faces[d], lexicographic
    // boundary[d] maps d-chains to (d-1)-chains; boundary[0] has no rows.
    std::vector<SparseIntMatrix> boundary;
};

ChainComplexData boundary_matrices(const SimplicialComplex& k, std::size_t budget = face_budget());

struct HomologyGroup {
    int dimension = 0;
    std::size_t rank = 0;
    std::vector<Integer> torsion;

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Reduced homology in dimensions 0..dim K. Throws on the empty complex and
// BudgetExceeded past the face budget.
std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& k, std::size_t budget = face_budget());

// Ranks listed by dimension, e.g. {0, 1} for a circle.
std::vector<std::size_t> reduced_ranks(const std::vector<HomologyGroup>& groups);

bool has_torsion(const std::vector<HomologyGroup>& groups);

}  // namespace homplex
