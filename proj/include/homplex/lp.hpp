#pragma once

#include "homplex/linalg.hpp"

#include <optional>
#include <vector>

namespace homplex {

// Exact simplex for max c.x subject to A x = b, x >= 0 (Bland's rule).
struct LpResult {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::infeasible;
    std::vector<Rational> x;
    Rational value;
};

LpResult maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c);

// Point in the relative interior of the bounded polyhedron {x >= 0 : A x = b}
// with the support of that relative interior. nullopt when infeasible.
struct RelativeInterior {
    std::vector<Rational> point;
    std::vector<bool> support;
};

std::optional<RelativeInterior> relative_interior(const std::vector<std::vector<Rational>>& a,
                                                  const std::vector<Rational>& b);

// Convex weights expressing target over points, or nullopt.
std::optional<std::vector<Rational>> convex_weights(const RationalVector& target,
                                                    const std::vector<RationalVector>& points);

// flags[i] is true iff points[i] is a vertex of conv(points). Repeated points
// are flagged only at their first occurrence.
std::vector<bool> hull_vertex_flags(const std::vector<RationalVector>& points);

// Indices of points lying on the smallest face of conv(points) containing
// the centroid of points[subset].
std::vector<int> smallest_face_containing(const std::vector<RationalVector>& points, const std::vector<int>& subset);

RationalVector to_rational(const Point& p);

}  // namespace homplex
