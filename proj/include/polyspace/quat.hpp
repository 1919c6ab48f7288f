#pragma once

#include <complex>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace polyspace {

using Complex = std::complex<double>;

/// Pure imaginary quaternion x i + y j + z k, stored as its (i, j, k) coordinates.
using Vec3 = Eigen::Vector3d;

/// 2x2 complex matrix; used both for elements of U(2) and for images of eta.
using Matrix2c = Eigen::Matrix2cd;
using Unitary2 = Eigen::Matrix2cd;

struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static Quaternion from_imaginary(const Vec3& v) { return {0.0, v.x(), v.y(), v.z()}; }

  /// q = u + v j with u = w + x i and v = y + z i.
  static Quaternion from_complex(Complex u, Complex v) { return {u.real(), u.imag(), v.real(), v.imag()}; }

  Complex u() const { return {w, x}; }
  Complex v() const { return {y, z}; }
  Vec3 imaginary() const { return {x, y, z}; }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const;

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator*(double s, const Quaternion& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) { return quat_mul(p, q); }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  static Quaternion quat_mul(const Quaternion& p, const Quaternion& q);
};

inline Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return Quaternion::quat_mul(p, q); }

/// eta(u + v j) = [[u, v], [-conj(v), conj(u)]]; an injective R-algebra homomorphism.
Matrix2c eta(const Quaternion& q);

/// Inverse of eta on its image (reads the first row).
Quaternion eta_inverse(const Matrix2c& m);

/// Hopf map q -> conj(q) i q. Sends the 3-sphere of radius sqrt(r) onto the 2-sphere of radius r.
Vec3 hopf(const Quaternion& q);

/// Same map in complex coordinates: i [ (|u|^2 - |v|^2) + 2 conj(u) v j ].
/// Expanded, the (i, j, k) coordinates are (|u|^2 - |v|^2, -Im(2 conj(u) v), Re(2 conj(u) v)).
Vec3 hopf_complex(Complex u, Complex v);

/// Distance of P from U(2), as the Frobenius norm of P P^* - I.
double unitarity_defect(const Matrix2c& p);

/// Right action of P on H = C^2 (row vector (u, v) times P). Throws NonUnitary.
Quaternion act_right(const Quaternion& q, const Unitary2& p);

/// P^{-1} eta(x) P read back as a pure imaginary quaternion.
Vec3 conjugate_imaginary(const Vec3& x, const Unitary2& p);

/// Deterministic right inverse of hopf with u real and nonnegative.
/// Continuous away from the negative i-axis, where the lift is sqrt|x| j.
Quaternion hopf_section(const Vec3& x);

}  // namespace polyspace
