#include "polyspace/bending.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "polyspace/error.hpp"

namespace polyspace {

Vec3 rotate(const Vec3& v, const Vec3& n, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return v * c + n.cross(v) * s + n * (n.dot(v) * (1.0 - c));
}

namespace {

void check_range(const Polygon& p, DiagonalRange r) {
  const int m = p.size();
  if (r.p < 1 || r.q > m || r.p > r.q) throw Error(ErrorCode::InvalidArgument, "diagonal range out of bounds");
  if (r.q - r.p + 1 >= m) throw Error(ErrorCode::InvalidArgument, "diagonal range must be a proper subset of the edges");
}

Vec3 range_sum(const Polygon& p, DiagonalRange r) {
  Vec3 s = Vec3::Zero();
  for (int j = r.p; j <= r.q; ++j) s += p.edge(j);
  return s;
}

Vec3 unit_axis(const Polygon& p, DiagonalRange r) {
  check_range(p, r);
  const Vec3 axis = range_sum(p, r);
  const double len = axis.norm();
  if (!(len > kScaleTolerance * perimeter(p)))
    throw Error(ErrorCode::ZeroDiagonal,
                "diagonal " + std::to_string(r.p) + ".." + std::to_string(r.q) + " vanishes; no bending axis", r.q);
  return axis / len;
}

}  // namespace

Polygon bend_range(const Polygon& p, DiagonalRange r, double theta) {
  const Vec3 n = unit_axis(p, r);
  Polygon out = p;
  out.dim = 3;
  for (int j = r.p; j <= r.q; ++j) {
    auto& e = out.edges[static_cast<std::size_t>(j - 1)];
    e = rotate(e, n, theta);
  }
  return out;
}

Polygon bend(const Polygon& p, int i, double theta) {
  if (i < 1 || i >= p.size()) throw Error(ErrorCode::InvalidArgument, "diagonal index must be in 1..m-1");
  return bend_range(p, {1, i}, theta);
}

Polygon flip(const Polygon& p, int i) {
  if (i < 1 || i >= p.size()) throw Error(ErrorCode::InvalidArgument, "diagonal index must be in 1..m-1");
  const Vec3 n = unit_axis(p, {1, i});
  Polygon out = p;
  for (int j = 1; j <= i; ++j) {
    auto& e = out.edges[static_cast<std::size_t>(j - 1)];
    e = 2.0 * n.dot(e) * n - e;
  }
  return out;
}

double max_edge_deviation(const Polygon& p, const Polygon& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::InvalidArgument, "polygons differ in edge count");
  double worst = 0.0;
  for (int j = 0; j < p.size(); ++j)
    worst = std::max(worst, (p.edges[static_cast<std::size_t>(j)] - q.edges[static_cast<std::size_t>(j)]).norm());
  return worst;
}

double commute_defect(const Polygon& p, DiagonalRange r1, DiagonalRange r2, double t1, double t2) {
  const Polygon a = bend_range(bend_range(p, r2, t2), r1, t1);
  const Polygon b = bend_range(bend_range(p, r1, t1), r2, t2);
  return max_edge_deviation(a, b);
}

Eigen::Matrix3d best_rotation(const Polygon& from, const Polygon& to) {
  if (from.size() != to.size()) throw Error(ErrorCode::InvalidArgument, "polygons differ in edge count");
  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  for (int j = 0; j < from.size(); ++j)
    h += from.edges[static_cast<std::size_t>(j)] * to.edges[static_cast<std::size_t>(j)].transpose();
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix3d& u = svd.matrixU();
  const Eigen::Matrix3d& v = svd.matrixV();
  Eigen::Matrix3d fix = Eigen::Matrix3d::Identity();
  fix(2, 2) = (v * u.transpose()).determinant() < 0.0 ? -1.0 : 1.0;
  return v * fix * u.transpose();
}

double dihedral_angle(const Polygon& p, int i) {
  const int m = p.size();
  if (i < 2 || i > m - 2) throw Error(ErrorCode::InvalidArgument, "dihedral angles exist for 2 <= i <= m-2");
  Vec3 prev = Vec3::Zero();
  for (int j = 1; j < i; ++j) prev += p.edge(j);
  const Vec3 vi = prev + p.edge(i);
  const Vec3 next = vi + p.edge(i + 1);
  const double len = vi.norm();
  if (!(len > kScaleTolerance * perimeter(p))) throw Error(ErrorCode::ZeroDiagonal, "diagonal vanishes", i);
  const Vec3 a = vi / len;
  const Vec3 w1 = prev - a * a.dot(prev);
  const Vec3 w2 = next - a * a.dot(next);
  return std::atan2(a.dot(w2.cross(w1)), w2.dot(w1));
}

// ---------------------------------------------------------------------------

SphereProductPoint SphereProductPoint::from_polygon(const Polygon& p) {
  SphereProductPoint w;
  w.x = p.edges;
  w.radii.reserve(p.edges.size());
  for (const auto& e : p.edges) w.radii.push_back(e.norm());
  return w;
}

Polygon SphereProductPoint::to_polygon() const {
  Polygon p;
  p.dim = 3;
  p.edges = x;
  return p;
}

namespace {

void check_tangent(const Vec3& x, const Vec3& v) {
  const double r = x.norm();
  if (r == 0.0) throw Error(ErrorCode::NotTangent, "base point has radius zero");
  if (std::abs(v.dot(x) / r) > 1e-9 * std::max(1.0, v.norm())) throw Error(ErrorCode::NotTangent, "vector is not tangent to the sphere");
}

}  // namespace

double km_form(const Vec3& x, const Vec3& u, const Vec3& v) {
  check_tangent(x, u);
  check_tangent(x, v);
  return x.dot(u.cross(v)) / x.squaredNorm();
}

Vec3 km_complex(const Vec3& x, const Vec3& v) {
  check_tangent(x, v);
  return x.cross(v) / x.norm();
}

Complex km_metric(const Vec3& x, const Vec3& u, const Vec3& v) {
  check_tangent(x, u);
  check_tangent(x, v);
  const double r = x.norm();
  return {u.dot(v) / r, -x.dot(u.cross(v)) / (r * r)};
}

Vec3 so3_moment(const SphereProductPoint& w) {
  Vec3 s = Vec3::Zero();
  for (const auto& x : w.x) s += x;
  return s;
}

std::vector<Vec3> hamiltonian_vector_field(const SphereProductPoint& w, const Hamiltonian& h, double fd_step) {
  SphereProductPoint probe = w;
  std::vector<Vec3> field(w.x.size());
  for (std::size_t j = 0; j < w.x.size(); ++j) {
    Vec3 grad;
    for (int c = 0; c < 3; ++c) {
      const double saved = probe.x[j][c];
      probe.x[j][c] = saved + fd_step;
      const double up = h(probe);
      probe.x[j][c] = saved - fd_step;
      const double down = h(probe);
      probe.x[j][c] = saved;
      grad[c] = (up - down) / (2.0 * fd_step);
    }
    const Vec3& x = w.x[j];
    const double len = x.norm();
    if (len == 0.0) {
      field[j] = Vec3::Zero();
      continue;
    }
    // Oriented orthonormal basis (e1, e2) of the tangent plane, e1 x e2 = x/|x|.
    const Vec3 n = x / len;
    const Vec3 seed = std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    const Vec3 e1 = (seed - n * n.dot(seed)).normalized();
    const Vec3 e2 = n.cross(e1);
    // omega(e1, e2) = 1/r, so omega(a e1 + b e2, e_k) = dH(e_k) gives
    // a = r dH(e2), b = -r dH(e1).
    const double r = w.radii[j];
    field[j] = r * grad.dot(e2) * e1 - r * grad.dot(e1) * e2;
  }
  return field;
}

SphereProductPoint hamiltonian_flow(const SphereProductPoint& w, const Hamiltonian& h, double t, const FlowOptions& options) {
  if (options.steps <= 0) throw Error(ErrorCode::InvalidArgument, "need a positive step count");
  const double dt = t / options.steps;
  SphereProductPoint cur = w;
  SphereProductPoint stage = w;
  const std::size_t m = w.x.size();
  double per = 0.0;
  for (double r : w.radii) per += r;

  auto advance = [&](const std::vector<Vec3>& k, double scale) {
    for (std::size_t j = 0; j < m; ++j) stage.x[j] = cur.x[j] + scale * k[j];
  };

  for (int s = 0; s < options.steps; ++s) {
    const auto k1 = hamiltonian_vector_field(cur, h, options.fd_step);
    advance(k1, 0.5 * dt);
    const auto k2 = hamiltonian_vector_field(stage, h, options.fd_step);
    advance(k2, 0.5 * dt);
    const auto k3 = hamiltonian_vector_field(stage, h, options.fd_step);
    advance(k3, dt);
    const auto k4 = hamiltonian_vector_field(stage, h, options.fd_step);
    for (std::size_t j = 0; j < m; ++j) {
      Vec3 next = cur.x[j] + (dt / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
      const double len = next.norm();
      if (len > 0.0) next *= cur.radii[j] / len;
      cur.x[j] = next;
    }
    for (int i : options.prodigal_diagonals) {
      Vec3 d = Vec3::Zero();
      for (int j = 0; j < i; ++j) d += cur.x[static_cast<std::size_t>(j)];
      if (!(d.norm() > kScaleTolerance * per))
        throw Error(ErrorCode::LeftProdigalRegion, "diagonal " + std::to_string(i) + " vanished along the flow", i);
    }
  }
  return cur;
}

Hamiltonian diagonal_hamiltonian(int i) {
  return [i](const SphereProductPoint& w) {
    Vec3 d = Vec3::Zero();
    for (int j = 0; j < i; ++j) d += w.x[static_cast<std::size_t>(j)];
    return d.norm();
  };
}

int bending_flow_sign() {
  static const int sign = [] {
    const Polygon ref(3, {Vec3(1.0, 0.0, 0.0), Vec3(0.2, 0.9, 0.1), Vec3(-0.7, 0.3, 0.5), Vec3(-0.4, -0.6, -0.2),
                          Vec3(-0.1, -0.6, -0.4)});
    const double t = 0.5;
    FlowOptions opt;
    opt.steps = 200;
    const Polygon flowed = hamiltonian_flow(SphereProductPoint::from_polygon(ref), diagonal_hamiltonian(2), t, opt).to_polygon();
    const double plus = max_edge_deviation(flowed, bend(ref, 2, t));
    const double minus = max_edge_deviation(flowed, bend(ref, 2, -t));
    return plus <= minus ? 1 : -1;
  }();
  return sign;
}

// ---------------------------------------------------------------------------

Vec3 hopf_differential(Complex u, Complex v, Complex du, Complex dv, double step) {
  const Vec3 up = hopf_complex(u + step * du, v + step * dv);
  const Vec3 down = hopf_complex(u - step * du, v - step * dv);
  return (up - down) / (2.0 * step);
}

double flat_form(const Eigen::Vector2cd& u, const Eigen::Vector2cd& v) {
  // <u, v> = sum u_k conj(v_k) = v.dot(u) in Eigen's convention
  return -v.dot(u).imag();
}

KahlerProbe kahler_probe_at(const Eigen::Vector2cd& q, const Eigen::Vector2cd& u, const Eigen::Vector2cd& v) {
  const double qn = q.norm();
  if (qn == 0.0) throw Error(ErrorCode::NotTangent, "row vanishes");
  for (const auto* w : {&u, &v}) {
    if (std::abs(q.dot(*w)) > 1e-9 * qn * std::max(1.0, w->norm()))
      throw Error(ErrorCode::NotTangent, "probe vector is not horizontal and tangent");
  }
  const double denominator = flat_form(u, v);
  if (std::abs(denominator) < 1e-9) throw Error(ErrorCode::DegeneratePair, "probe pair spans no area");
  const Vec3 x = hopf_complex(q(0), q(1));
  const Vec3 tu = hopf_differential(q(0), q(1), u(0), u(1));
  const Vec3 tv = hopf_differential(q(0), q(1), v(0), v(1));
  const Complex i{0.0, 1.0};
  const Vec3 tju = hopf_differential(q(0), q(1), i * u(0), i * u(1));
  const double r = x.norm();
  KahlerProbe probe;
  probe.numerator = x.dot(tu.cross(tv)) / (r * r);
  probe.denominator = denominator;
  probe.ratio = probe.numerator / probe.denominator;
  probe.complex_defect = (x.cross(tu) / r - tju).norm();
  return probe;
}

KahlerProbe kahler_factor_probe(const Frame& f, const Eigen::Vector2cd& u, const Eigen::Vector2cd& v, int row) {
  if (row < 1 || row > f.size()) throw Error(ErrorCode::InvalidArgument, "row out of range");
  const Eigen::Vector2cd q(f.a(row - 1), f.b(row - 1));
  return kahler_probe_at(q, u, v);
}

}  // namespace polyspace
