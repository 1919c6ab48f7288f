#include "polyspace/quat.hpp"

#include <cmath>

#include "polyspace/error.hpp"

namespace polyspace {

double Quaternion::norm() const { return std::sqrt(norm2()); }

Quaternion Quaternion::quat_mul(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

Matrix2c eta(const Quaternion& q) {
  const Complex u = q.u();
  const Complex v = q.v();
  Matrix2c m;
  m << u, v, -std::conj(v), std::conj(u);
  return m;
}

Quaternion eta_inverse(const Matrix2c& m) { return Quaternion::from_complex(m(0, 0), m(0, 1)); }

Vec3 hopf(const Quaternion& q) {
  static constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
  const Quaternion r = q.conj() * kI * q;
  return r.imaginary();
}

Vec3 hopf_complex(Complex u, Complex v) {
  const Complex c = 2.0 * std::conj(u) * v;
  return {std::norm(u) - std::norm(v), -c.imag(), c.real()};
}

double unitarity_defect(const Matrix2c& p) { return (p * p.adjoint() - Matrix2c::Identity()).norm(); }

Quaternion act_right(const Quaternion& q, const Unitary2& p) {
  if (unitarity_defect(p) > 1e-9) throw Error(ErrorCode::NonUnitary, "matrix is not unitary");
  const Complex u = q.u();
  const Complex v = q.v();
  return Quaternion::from_complex(u * p(0, 0) + v * p(1, 0), u * p(0, 1) + v * p(1, 1));
}

Vec3 conjugate_imaginary(const Vec3& x, const Unitary2& p) {
  const Matrix2c m = p.adjoint() * eta(Quaternion::from_imaginary(x)) * p;
  return eta_inverse(m).imaginary();
}

Quaternion hopf_section(const Vec3& x) {
  const double r = x.norm();
  if (r == 0.0) return {};
  const double s = std::hypot(x.y(), x.z());
  // 2 conj(u) v = x_k - i x_j
  const Complex c{x.z(), -x.y()};
  if (x.x() >= 0.0) {
    const double u = std::sqrt(0.5 * (r + x.x()));
    return Quaternion::from_complex(u, c / (2.0 * u));
  }
  if (s > 0.0) {
    // r + x_i = s^2 / (r - x_i) avoids cancellation near the negative axis.
    const double denom = r - x.x();
    const double u = s / std::sqrt(2.0 * denom);
    return Quaternion::from_complex(u, (c / s) * std::sqrt(0.5 * denom));
  }
  return {0.0, 0.0, std::sqrt(r), 0.0};
}

}  // namespace polyspace
