#pragma once

#include "homplex/complex.hpp"
#include "homplex/cyclic.hpp"
#include "homplex/graph.hpp"
#include "homplex/hom.hpp"
#include "homplex/homology.hpp"
#include "homplex/linalg.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace homplex {

using Json = nlohmann::ordered_json;

// {"n": 4, "edges": [[0, 1], ...]}
Json graph_to_json(const Graph& g);
// Throws std::invalid_argument on malformed input.
Graph graph_from_json(const Json& j);

// Named family (K4, C5, E3, I4_3, S4_3) or a path to a graph JSON file.
Graph parse_graph_spec(const std::string& spec);

// Canonical fraction string: "2/3", "-1/2", "0", "4".
std::string fraction(const Rational& q);
Json rational_vector_to_json(const RationalVector& v);
// Point scaled by 1/scale, as fraction strings.
Json scaled_point_to_json(const Point& p, int scale);

Json complex_to_json(const SimplicialComplex& k, std::size_t budget = face_budget());
Json label_tuple_to_json(const LabelTuple& t);
Json projected_cell_to_json(const ProjectedCell& c, int scale);
Json hom_complex_to_json(const HomComplex& hc, std::size_t budget = face_budget());
Json homology_to_json(const std::vector<HomologyGroup>& groups);
Json path_to_json(const LatticePath& p);

}  // namespace homplex
