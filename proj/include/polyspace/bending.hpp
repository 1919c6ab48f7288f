#pragma once

#include <functional>
#include <vector>

#include "polyspace/frames.hpp"
#include "polyspace/polygon.hpp"

namespace polyspace {

/// Consecutive block of edges p..q (1-based, inclusive) whose sum is the bending axis.
struct DiagonalRange {
  int p = 1;
  int q = 1;
};

/// Rotation of angle theta about unit axis n (right-hand rule), Rodrigues form.
Vec3 rotate(const Vec3& v, const Vec3& n, double theta);

/// Rotates edges r.p..r.q by theta about their sum. Throws ZeroDiagonal.
Polygon bend_range(const Polygon& p, DiagonalRange r, double theta);

/// Bending about the i-th standard diagonal: edges 1..i rotated about d_i.
Polygon bend(const Polygon& p, int i, double theta);

/// Bend by pi computed inside the plane, so planar polygons stay exactly planar.
Polygon flip(const Polygon& p, int i);

/// Max edge deviation between B1(t1) B2(t2) p and B2(t2) B1(t1) p.
double commute_defect(const Polygon& p, DiagonalRange r1, DiagonalRange r2, double t1, double t2);

/// Max edge deviation ||p.edge(i) - q.edge(i)||.
double max_edge_deviation(const Polygon& p, const Polygon& q);

/// Rotation R minimizing sum ||R p_i - q_i||^2 (Kabsch, det R = +1).
Eigen::Matrix3d best_rotation(const Polygon& from, const Polygon& to);

/// Signed dihedral angle at standard diagonal i (2 <= i <= m-2) between the
/// triangles (0, v_{i-1}, v_i) and (0, v_i, v_{i+1}).
double dihedral_angle(const Polygon& p, int i);

// ---------------------------------------------------------------------------
// Structures on products of spheres.

/// Point of W(alpha) = prod S^2_{alpha_i}.
struct SphereProductPoint {
  std::vector<Vec3> x;
  std::vector<double> radii;

  static SphereProductPoint from_polygon(const Polygon& p);
  Polygon to_polygon() const;
  int size() const { return static_cast<int>(x.size()); }
};

/// <x / r^2, u x v>, r = |x|. Throws NotTangent.
double km_form(const Vec3& x, const Vec3& u, const Vec3& v);
/// (1/r) x cross v. Throws NotTangent.
Vec3 km_complex(const Vec3& x, const Vec3& v);
/// (1/r)<u, v> - (i/r^2)<x, u x v>. Throws NotTangent.
Complex km_metric(const Vec3& x, const Vec3& u, const Vec3& v);

/// Sum of the factors: the SO(3) moment map.
Vec3 so3_moment(const SphereProductPoint& w);

using Hamiltonian = std::function<double(const SphereProductPoint&)>;

struct FlowOptions {
  int steps = 2000;
  double fd_step = 1e-6;
  /// When nonempty, these standard diagonals must stay above 1e-9 * perimeter along the path.
  std::vector<int> prodigal_diagonals;
};

/// Hamiltonian vector field of H for the Kapovich-Millson form, per factor
/// solving omega(X, .) = dH(.) on the tangent plane with dH by central differences.
std::vector<Vec3> hamiltonian_vector_field(const SphereProductPoint& w, const Hamiltonian& h, double fd_step = 1e-6);

/// Fixed-step RK4 flow for time t with projection back onto the spheres after
/// every step. Throws LeftProdigalRegion.
SphereProductPoint hamiltonian_flow(const SphereProductPoint& w, const Hamiltonian& h, double t,
                                    const FlowOptions& options = {});

/// H = d_i as a Hamiltonian on W(alpha).
Hamiltonian diagonal_hamiltonian(int i);

/// Direction of the flow of d_i relative to bend(., i, +t): +1 or -1.
/// Measured once on a fixed reference pentagon.
int bending_flow_sign();

// ---------------------------------------------------------------------------
// Comparison with the Grassmannian structure on one row of a frame.

/// Central-difference differential of hopf at q along v (as C^2 vectors).
Vec3 hopf_differential(Complex u, Complex v, Complex du, Complex dv, double step = 1e-6);

/// Flat form -Im<u, v> on C^2.
double flat_form(const Eigen::Vector2cd& u, const Eigen::Vector2cd& v);

struct KahlerProbe {
  double numerator;    ///< omega~(T phi u, T phi v)
  double denominator;  ///< omega(u, v)
  double ratio;
  double complex_defect;  ///< ||J~ T phi u - T phi (i u)||
};

/// Compares the sphere structure at hopf(row r) with the flat structure on the
/// row, for tangent vectors u, v horizontal for the row's U(1) action.
/// Throws NotTangent, DegeneratePair.
KahlerProbe kahler_factor_probe(const Frame& f, const Eigen::Vector2cd& u, const Eigen::Vector2cd& v, int row);

/// Same probe at an explicit point q of C^2.
KahlerProbe kahler_probe_at(const Eigen::Vector2cd& q, const Eigen::Vector2cd& u, const Eigen::Vector2cd& v);

}  // namespace polyspace
