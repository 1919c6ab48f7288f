#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "polyspace/polygon.hpp"
#include "polyspace/quat.hpp"
#include "polyspace/random.hpp"

namespace polyspace {

using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Pair of vectors (a, b) in C^m; an orthonormal 2-frame when valid.
struct Frame {
  ComplexVector a;
  ComplexVector b;

  int size() const { return static_cast<int>(a.size()); }
  /// The m x 2 matrix with columns a and b.
  Eigen::MatrixX2cd matrix() const;
  /// Row r (1-based) as the quaternion a_r + b_r j.
  Quaternion row(int r) const;
};

inline constexpr double kFrameTolerance = 1e-10;

/// max(| |a|-1 |, | |b|-1 |, |<a,b>|)
double frame_defect(const Frame& f);
bool is_valid_frame(const Frame& f, double tol = kFrameTolerance);

/// Gram-Schmidt. Throws DependentColumns.
Frame frame_orthonormalize(const ComplexVector& a, const ComplexVector& b);

/// Phi: edge r is hopf(a_r + b_r j). Lands on perimeter 2 for valid frames.
Polygon frame_to_polygon(const Frame& f);

/// Row r multiplied by exp(i theta_r).
Frame torus_act(const Frame& f, const std::vector<double>& theta);

/// (a, b) P. Throws NonUnitary.
Frame u2_act(const Frame& f, const Unitary2& p);

/// Entrywise complex conjugate.
Frame conjugate_frame(const Frame& f);

/// (a, b)(a, b)^*, the U(m) moment map.
ComplexMatrix gram(const Frame& f);

/// (a, b)^*(a, b) - I, the U(2) moment map; zero exactly on the Stiefel manifold.
Matrix2c u2_moment(const Frame& f);

/// |a_r|^2 + |b_r|^2 for each row: the U(1)^m moment map.
std::vector<double> moment_mu(const Frame& f);

/// M_i^* M_i for the first i rows (1-based i).
Matrix2c truncated_gram2(const Frame& f, int i);

struct Eigen2 {
  double lo;
  double hi;
};

/// Closed-form eigenvalues of a 2x2 Hermitian matrix. Throws NotHermitian.
Eigen2 eig2(const Matrix2c& h);

/// Per prefix i: sum and difference of the two eigenvalues of M_i^* M_i.
struct GCPattern {
  std::vector<double> sum;
  std::vector<double> diff;
};

GCPattern gc_pattern(const Frame& f);

/// Smallest slack in 0 <= lo_i <= lo_{i+1} <= hi_i <= hi_{i+1}, where
/// (lo_i, hi_i) = ((sum_i - diff_i)/2, (sum_i + diff_i)/2). Nonnegative when interlacing holds.
double interlacing_slack(const GCPattern& g);

/// Right inverse of frame_to_polygon using hopf_section on every edge.
/// Requires a closed polygon of perimeter 2. Throws NotNormalized, NotClosed.
Frame frame_from_polygon(const Polygon& p);

/// Phases theta with torus_act(f, theta) = g, for frames over the same proper polygon.
std::vector<double> recover_torus_phases(const Frame& f, const Frame& g);

/// Random valid frame in C^m: Gram-Schmidt on a complex Gaussian pair.
template <class G>
Frame random_frame(int m, G& rng) {
  ComplexVector a(m), b(m);
  for (int r = 0; r < m; ++r) {
    a(r) = Complex(normal(rng), normal(rng));
    b(r) = Complex(normal(rng), normal(rng));
  }
  return frame_orthonormalize(a, b);
}

/// Random element of U(2): the matrix of a random frame in C^2.
template <class G>
Unitary2 random_unitary(G& rng) {
  return random_frame(2, rng).matrix();
}

}  // namespace polyspace
