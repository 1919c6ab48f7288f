#pragma once

#include <vector>

#include "polyspace/quat.hpp"
#include "polyspace/rational.hpp"

namespace polyspace {

/// Closed polygonal path in R^dim, dim in {1, 2, 3}, given by its edge vectors.
/// Edges are stored in R^3; coordinates at index >= dim are zero.
struct Polygon {
  int dim = 3;
  std::vector<Vec3> edges;

  Polygon() = default;
  Polygon(int d, std::vector<Vec3> e);

  int size() const { return static_cast<int>(edges.size()); }
  /// Edge i, 1-based.
  const Vec3& edge(int i) const { return edges[static_cast<std::size_t>(i - 1)]; }
};

/// Relative tolerance used for "zero" tests on unnormalized polygons.
inline constexpr double kScaleTolerance = 1e-9;
/// Absolute zero-edge tolerance at perimeter 2.
inline constexpr double kZeroEdgeTolerance = 1e-12;

double closure_defect(const Polygon& p);
double perimeter(const Polygon& p);
bool is_closed(const Polygon& p, double rel_tol = kScaleTolerance);

/// Rescales to perimeter 2. Throws ZeroPolygon.
Polygon normalize(const Polygon& p);

/// ell: edge lengths |rho(i)|.
std::vector<double> side_lengths(const Polygon& p);

/// d_i = |rho(1) + ... + rho(i)| for i = 1..m (d_m is the closure defect).
std::vector<double> diagonals(const Polygon& p);

/// m minus the number of zero edges; 0 for the zero polygon.
int stratum_index(const Polygon& p);

bool is_proper(const Polygon& p);
/// Edge span of rank <= 1 (second singular value of the edge matrix below tolerance).
bool is_lined(const Polygon& p);
/// No diagonal d_1..d_{m-1} vanishes.
bool is_prodigal(const Polygon& p);

/// Negates coordinate `axis` of every edge.
Polygon reflect_axis(const Polygon& p, int axis);
/// Reflection through the hyperplane orthogonal to the last coordinate. Throws DimensionOne.
Polygon reflect(const Polygon& p);

/// Applies a linear map to every edge.
Polygon transform(const Polygon& p, const Eigen::Matrix3d& m);

/// e(rho)(i) = rho(2i-1) + rho(2i); for odd m the last new edge is rho(m).
Polygon even_step(const Polygon& p);
std::vector<double> even_diagonals(const Polygon& p);

// ---------------------------------------------------------------------------
// Exact side-length vectors.

/// Maximum number of sides accepted by the brute-force sign enumerations.
inline constexpr int kMaxBruteForceSides = 24;

/// True iff no sign vector eps has sum eps_i alpha_i = 0. Throws TooManySides.
bool is_generic_lengths(const RationalVector& alpha);

/// Every eps in {+1,-1}^m with sum eps_i alpha_i = 0 and eps_1 = +1.
std::vector<std::vector<int>> enumerate_lined(const RationalVector& alpha);

/// min over eps of |sum eps_i alpha_i|; zero iff alpha is not generic.
Rational wall_distance(const RationalVector& alpha);

}  // namespace polyspace
