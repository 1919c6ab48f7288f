#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyspace/rational.hpp"

namespace polyspace {

/// normal . x <= offset
struct Halfspace {
  RationalVector normal;
  Rational offset;

  bool contains(const RationalVector& x) const;
  bool on_boundary(const RationalVector& x) const;
};

/// normal . x == offset
struct Hyperplane {
  RationalVector normal;
  Rational offset;
};

/// Exact H-polytope with its vertices enumerated (for dim <= 3).
struct RationalPolytope {
  int dim = 0;
  std::vector<std::string> variables;
  std::vector<Halfspace> halfspaces;
  std::vector<Hyperplane> equalities;
  /// Vertices; for dim 2 in counterclockwise order.
  std::vector<RationalVector> vertices;
  /// Facets of a full-dimensional polytope (sides when dim = 2, endpoints when dim = 1).
  int facet_count = 0;
  bool generic = true;

  bool contains(const RationalVector& x) const;
};

// ---------------------------------------------------------------------------
// Generic machinery

/// Drops duplicate halfspaces (after scaling the normal to primitive form).
std::vector<Halfspace> canonical_halfspaces(const std::vector<Halfspace>& hs);

/// Clips a convex polygon (counterclockwise vertex list) by a halfspace.
std::vector<RationalVector> clip_polygon(const std::vector<RationalVector>& poly, const Halfspace& h);

/// Drops repeated and collinear vertices of a convex polygon.
std::vector<RationalVector> simplify_polygon(const std::vector<RationalVector>& poly);

/// Twice the signed area.
Rational doubled_area(const std::vector<RationalVector>& poly);

/// Vertices of {x : h.x <= b} in dimension n <= 3 by brute force over n-subsets.
std::vector<RationalVector> enumerate_vertices(int n, const std::vector<Halfspace>& hs);

/// Halfspaces supporting >= n affinely independent vertices.
int count_facets(int n, const std::vector<Halfspace>& hs, const std::vector<RationalVector>& vertices);

/// Number of maximal edges of a 2-D polytope. Throws Degenerate when the area is 0.
int count_sides(const RationalPolytope& p);

/// Builds a full polytope (vertices, facets) from halfspaces; 2-D uses clipping
/// from `bounding_box`, other dimensions use brute force. Throws EmptyPolytope.
RationalPolytope build_polytope(std::vector<std::string> variables, std::vector<Halfspace> hs,
                                const std::vector<std::pair<Rational, Rational>>& bounding_box);

// ---------------------------------------------------------------------------
// Moment polytopes

/// {0 <= x_i <= 1, sum x_i = 2}, with its C(m,2) vertices.
RationalPolytope hypersimplex(int m);
bool in_hypersimplex(const RationalVector& x);

struct MembershipReport {
  bool member = false;
  /// Smallest slack over all inequalities (negative when violated).
  Rational min_slack;
  /// 1-based index of the first violated triangle (i -> (d_{i-1}, ell_i, d_i)), and
  /// which of its three inequalities (0: ell <= d + d', 1: d <= ell + d', 2: d' <= ell + d).
  std::optional<int> violated_triangle;
  std::optional<int> violated_inequality;
  bool perimeter_ok = true;
  bool ends_ok = true;
};

/// Exact test of (ell, d) against the triangle inequalities, d_0 = d_m = 0 and sum ell = 2.
/// `l` and `d` have m entries (d_m included).
MembershipReport gc_membership(const RationalVector& l, const RationalVector& d);
/// Same test in floating point with slack tolerance `tol`.
bool gc_membership_float(const std::vector<double>& l, const std::vector<double>& d, double tol);

/// Slice of the Gel'fand-Cetlin polytope at ell = alpha, in the free diagonals d_2..d_{m-2}.
/// Vertex enumeration for m <= 6. Throws EmptyPolytope.
RationalPolytope diag_slice(const RationalVector& alpha);

/// The m = 5 moment polytope I_alpha intersected with Omega_alpha in (d_2, d_3).
RationalPolytope pentagon_polytope(const RationalVector& alpha);
/// No corner of I_alpha on the lines x + y = a3, y = x - a3, y = x + a3.
bool pentagon_generic(const RationalVector& alpha);

/// Even-step polytope: the box prod [|a_2i - a_2i-1|, a_2i + a_2i-1] intersected with the
/// cone on the hypersimplex, sliced at x_n = alpha_m when m is odd. m in 4..6.
RationalPolytope even_step_polytope(const RationalVector& alpha);
RationalPolytope hexagon_even_polytope(const RationalVector& alpha);

// ---------------------------------------------------------------------------
// Classification

struct Interval {
  Rational lo;
  Rational hi;
  bool empty() const { return lo > hi; }
  Rational length() const { return hi - lo; }
};

/// [|a - b|, a + b]: the range of |u + v| for |u| = a, |v| = b.
Interval pair_interval(const Rational& a, const Rational& b);
Interval intersect(const Interval& x, const Interval& y);

struct QuadInterval {
  Interval first;   ///< I_1 = [|a1 - a2|, a1 + a2]
  Interval second;  ///< I_2 = [|a4 - a3|, a4 + a3]
  Interval range;   ///< I_1 cap I_2, the image of d_2
  bool generic = false;           ///< endpoints of I_1 and I_2 all distinct
  bool diagonal_nonvanishing = false;  ///< a1 != a2 or a3 != a4
  std::string planar_oriented;    ///< "S¹ ⊔ S¹" or "S¹"
};

/// Throws EmptyPolytope.
QuadInterval quad_interval(const RationalVector& alpha);

/// Lengths of the variation intervals of |rho1 + rho2| and |rho2 + rho3|. Throws EmptyPolytope.
std::pair<Rational, Rational> dh_interval_equality(const RationalVector& alpha);

struct ClassificationReport {
  int m = 0;
  bool generic = false;
  int sides = 0;
  std::string row;  ///< "3", "4a", "4b", "5", "6", "7" for pentagons
  bool orientable = false;
  std::string spatial;          ///< moduli of spatial polygons up to rotation
  std::string planar;           ///< planar polygons up to isometry
  std::string planar_oriented;  ///< planar polygons up to rotation
  int euler_planar = 0;
};

/// Throws NonGeneric, EmptyPolytope.
ClassificationReport classify_pentagon(const RationalVector& alpha);
/// Throws NonGeneric, EmptyPolytope.
ClassificationReport classify_quadrilateral(const RationalVector& alpha);

/// Euler characteristic of a closed-surface label ("S²", "T²", "T² ⊔ T²", "Σ₂", ...).
std::optional<int> surface_euler(const std::string& label);

}  // namespace polyspace
