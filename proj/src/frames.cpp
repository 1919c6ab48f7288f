#include "polyspace/frames.hpp"

#include <algorithm>
#include <cmath>

#include "polyspace/error.hpp"

namespace polyspace {

Eigen::MatrixX2cd Frame::matrix() const {
  Eigen::MatrixX2cd m(a.size(), 2);
  m.col(0) = a;
  m.col(1) = b;
  return m;
}

Quaternion Frame::row(int r) const { return Quaternion::from_complex(a(r - 1), b(r - 1)); }

double frame_defect(const Frame& f) {
  return std::max({std::abs(f.a.norm() - 1.0), std::abs(f.b.norm() - 1.0), std::abs(f.a.dot(f.b))});
}

bool is_valid_frame(const Frame& f, double tol) { return f.a.size() == f.b.size() && frame_defect(f) <= tol; }

Frame frame_orthonormalize(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "frame columns differ in length");
  const double na = a.norm();
  if (na == 0.0) throw Error(ErrorCode::DependentColumns, "first column is zero");
  Frame f;
  f.a = a / na;
  ComplexVector rest = b - f.a * f.a.dot(b);
  // second pass for orthogonality at machine precision
  rest -= f.a * f.a.dot(rest);
  const double nr = rest.norm();
  if (!(nr > 1e-12 * b.norm())) throw Error(ErrorCode::DependentColumns, "columns are linearly dependent");
  f.b = rest / nr;
  return f;
}

Polygon frame_to_polygon(const Frame& f) {
  Polygon p;
  p.dim = 3;
  p.edges.reserve(static_cast<std::size_t>(f.size()));
  for (int r = 0; r < f.size(); ++r) p.edges.push_back(hopf_complex(f.a(r), f.b(r)));
  return p;
}

Frame torus_act(const Frame& f, const std::vector<double>& theta) {
  if (static_cast<int>(theta.size()) != f.size()) throw Error(ErrorCode::InvalidArgument, "need one angle per row");
  Frame g = f;
  for (int r = 0; r < f.size(); ++r) {
    const Complex phase = std::polar(1.0, theta[static_cast<std::size_t>(r)]);
    g.a(r) *= phase;
    g.b(r) *= phase;
  }
  return g;
}

Frame u2_act(const Frame& f, const Unitary2& p) {
  if (unitarity_defect(p) > 1e-9) throw Error(ErrorCode::NonUnitary, "matrix is not unitary");
  Frame g;
  g.a = f.a * p(0, 0) + f.b * p(1, 0);
  g.b = f.a * p(0, 1) + f.b * p(1, 1);
  return g;
}

Frame conjugate_frame(const Frame& f) { return {f.a.conjugate(), f.b.conjugate()}; }

ComplexMatrix gram(const Frame& f) {
  const auto m = f.matrix();
  return m * m.adjoint();
}

Matrix2c u2_moment(const Frame& f) {
  const auto m = f.matrix();
  return m.adjoint() * m - Matrix2c::Identity();
}

std::vector<double> moment_mu(const Frame& f) {
  std::vector<double> mu(static_cast<std::size_t>(f.size()));
  for (int r = 0; r < f.size(); ++r) mu[static_cast<std::size_t>(r)] = std::norm(f.a(r)) + std::norm(f.b(r));
  return mu;
}

Matrix2c truncated_gram2(const Frame& f, int i) {
  if (i < 1 || i > f.size()) throw Error(ErrorCode::InvalidArgument, "row count out of range");
  Matrix2c h = Matrix2c::Zero();
  for (int j = 0; j < i; ++j) {
    const Complex a = f.a(j);
    const Complex b = f.b(j);
    h(0, 0) += std::norm(a);
    h(0, 1) += std::conj(a) * b;
    h(1, 0) += a * std::conj(b);
    h(1, 1) += std::norm(b);
  }
  return h;
}

Eigen2 eig2(const Matrix2c& h) {
  constexpr double tol = 1e-10;
  if (std::abs(h(0, 1) - std::conj(h(1, 0))) > tol || std::abs(h(0, 0).imag()) > tol || std::abs(h(1, 1).imag()) > tol)
    throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian");
  const double half_trace = 0.5 * (h(0, 0).real() + h(1, 1).real());
  const double half_gap = 0.5 * (h(0, 0).real() - h(1, 1).real());
  const double radius = std::hypot(half_gap, std::abs(h(0, 1)));
  return {half_trace - radius, half_trace + radius};
}

GCPattern gc_pattern(const Frame& f) {
  const int m = f.size();
  GCPattern g;
  g.sum.reserve(static_cast<std::size_t>(m));
  g.diff.reserve(static_cast<std::size_t>(m));
  double aa = 0.0, bb = 0.0;
  Complex ab = 0.0;
  for (int j = 0; j < m; ++j) {
    aa += std::norm(f.a(j));
    bb += std::norm(f.b(j));
    ab += std::conj(f.a(j)) * f.b(j);
    g.sum.push_back(aa + bb);
    g.diff.push_back(2.0 * std::hypot(0.5 * (aa - bb), std::abs(ab)));
  }
  return g;
}

double interlacing_slack(const GCPattern& g) {
  const std::size_t m = g.sum.size();
  if (m == 0) return 0.0;
  auto lo = [&](std::size_t i) { return 0.5 * (g.sum[i] - g.diff[i]); };
  auto hi = [&](std::size_t i) { return 0.5 * (g.sum[i] + g.diff[i]); };
  double slack = lo(0);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    slack = std::min({slack, lo(i + 1) - lo(i), hi(i) - lo(i + 1), hi(i + 1) - hi(i)});
  }
  return slack;
}

Frame frame_from_polygon(const Polygon& p) {
  const double per = perimeter(p);
  if (std::abs(per - 2.0) > 1e-9) throw Error(ErrorCode::NotNormalized, "perimeter must be 2");
  if (closure_defect(p) > kScaleTolerance * per) throw Error(ErrorCode::NotClosed, "polygon is not closed");
  const int m = p.size();
  Frame f{ComplexVector(m), ComplexVector(m)};
  for (int r = 0; r < m; ++r) {
    const Quaternion q = hopf_section(p.edges[static_cast<std::size_t>(r)]);
    f.a(r) = q.u();
    f.b(r) = q.v();
  }
  return f;
}

std::vector<double> recover_torus_phases(const Frame& f, const Frame& g) {
  if (f.size() != g.size()) throw Error(ErrorCode::InvalidArgument, "frames differ in size");
  std::vector<double> theta(static_cast<std::size_t>(f.size()), 0.0);
  for (int r = 0; r < f.size(); ++r) {
    const Complex c = std::conj(f.a(r)) * g.a(r) + std::conj(f.b(r)) * g.b(r);
    if (std::abs(c) > 0.0) theta[static_cast<std::size_t>(r)] = std::arg(c);
  }
  return theta;
}

}  // namespace polyspace
