#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyspace/polygon.hpp"
#include "polyspace/polytope.hpp"

namespace polyspace {

/// Default closure tolerance (relative to perimeter) applied when reading polygons.
inline constexpr double kReadTolerance = 1e-9;

/// kReadTolerance, or the value of POLYSPACE_TOL when set to a positive number.
double read_tolerance();

/// {"dim": k, "edges": [[x, y, z], ...], "meta": {"alpha": [...], "diagonals": [...]}}.
/// Floats use the shortest decimal that round-trips.
std::string polygon_to_json(const Polygon& p);
std::string polygons_to_json(const std::vector<Polygon>& ps);

/// Parses a polygon document; "meta" is optional and ignored. Throws Parse, NotClosed.
Polygon polygon_from_json(std::string_view text, double tol = read_tolerance());

/// Header "polygon,edge,x,y,z" and one row per edge.
std::string polygons_to_csv(const std::vector<Polygon>& ps);

/// {"variables", "halfspaces": [{"normal", "offset"}], "vertices", "facets", "generic"}
/// with every rational written as a "p/q" string.
std::string polytope_to_json(const RationalPolytope& p);
/// Header "vertex,<variables...>" and one row per vertex.
std::string polytope_to_csv(const RationalPolytope& p);

/// Closed path through the vertices with a dot on each, 800x800 viewBox, autoscaled.
std::string polygon_svg(const Polygon& p);
/// Filled convex region with labeled vertices; dim 1 and 2 only. Throws InvalidArgument.
std::string polytope_svg(const RationalPolytope& p);

}  // namespace polyspace
