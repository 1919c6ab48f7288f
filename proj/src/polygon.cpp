#include "polyspace/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <cstdint>
#include <limits>
#include <string>

#include <Eigen/SVD>

#include "polyspace/error.hpp"

namespace polyspace {

Polygon::Polygon(int d, std::vector<Vec3> e) : dim(d), edges(std::move(e)) {
  if (dim < 1 || dim > 3) throw Error(ErrorCode::InvalidArgument, "dimension must be 1, 2 or 3");
  for (const auto& v : edges)
    for (int c = dim; c < 3; ++c)
      if (v[c] != 0.0) throw Error(ErrorCode::InvalidArgument, "edge has a coordinate outside R^" + std::to_string(dim));
}

double closure_defect(const Polygon& p) {
  Vec3 s = Vec3::Zero();
  for (const auto& e : p.edges) s += e;
  return s.norm();
}

double perimeter(const Polygon& p) {
  double s = 0.0;
  for (const auto& e : p.edges) s += e.norm();
  return s;
}

bool is_closed(const Polygon& p, double rel_tol) { return closure_defect(p) <= rel_tol * perimeter(p); }

Polygon normalize(const Polygon& p) {
  const double per = perimeter(p);
  if (per == 0.0) throw Error(ErrorCode::ZeroPolygon, "cannot normalize the zero polygon");
  Polygon out = p;
  const double s = 2.0 / per;
  for (auto& e : out.edges) e *= s;
  return out;
}

std::vector<double> side_lengths(const Polygon& p) {
  std::vector<double> out;
  out.reserve(p.edges.size());
  for (const auto& e : p.edges) out.push_back(e.norm());
  return out;
}

std::vector<double> diagonals(const Polygon& p) {
  std::vector<double> out;
  out.reserve(p.edges.size());
  Vec3 s = Vec3::Zero();
  for (const auto& e : p.edges) {
    s += e;
    out.push_back(s.norm());
  }
  // d_1 = ell_1 and d_{m-1} = ell_m hold exactly, not just up to rounding.
  const int m = p.size();
  if (m >= 1) out[0] = p.edges[0].norm();
  if (m >= 2) out[static_cast<std::size_t>(m - 2)] = p.edges.back().norm();
  return out;
}

int stratum_index(const Polygon& p) {
  const double per = perimeter(p);
  if (per == 0.0) return 0;
  const double tol = kZeroEdgeTolerance * per / 2.0;
  int nonzero = 0;
  for (const auto& e : p.edges)
    if (e.norm() >= tol) ++nonzero;
  return nonzero;
}

bool is_proper(const Polygon& p) { return p.size() > 0 && stratum_index(p) == p.size(); }

bool is_lined(const Polygon& p) {
  if (p.dim == 1 || p.edges.empty()) return true;
  Eigen::MatrixXd m(3, p.size());
  for (int i = 0; i < p.size(); ++i) m.col(i) = p.edges[static_cast<std::size_t>(i)];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() < 2) return true;
  return sv(1) < kScaleTolerance * perimeter(p);
}

bool is_prodigal(const Polygon& p) {
  const double tol = kScaleTolerance * perimeter(p);
  const auto d = diagonals(p);
  for (int i = 0; i + 1 < p.size(); ++i)
    if (!(d[static_cast<std::size_t>(i)] > tol)) return false;
  return true;
}

Polygon reflect_axis(const Polygon& p, int axis) {
  Polygon out = p;
  for (auto& e : out.edges) e[axis] = -e[axis];
  return out;
}

Polygon reflect(const Polygon& p) {
  if (p.dim < 2) throw Error(ErrorCode::DimensionOne, "reflection needs dim >= 2");
  return reflect_axis(p, p.dim - 1);
}

Polygon transform(const Polygon& p, const Eigen::Matrix3d& m) {
  Polygon out;
  out.dim = 3;
  out.edges.reserve(p.edges.size());
  for (const auto& e : p.edges) out.edges.push_back(m * e);
  return out;
}

Polygon even_step(const Polygon& p) {
  const int m = p.size();
  if (m < 4) throw Error(ErrorCode::InvalidArgument, "even-step map needs m >= 4");
  const int n = (m + 1) / 2;
  Polygon out;
  out.dim = p.dim;
  out.edges.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    if (2 * i <= m) {
      out.edges.push_back(p.edge(2 * i - 1) + p.edge(2 * i));
    } else {
      out.edges.push_back(p.edge(m));
    }
  }
  return out;
}

std::vector<double> even_diagonals(const Polygon& p) { return side_lengths(even_step(p)); }

// ---------------------------------------------------------------------------

namespace {

/// Lengths scaled to a common integer denominator.
std::vector<BigInt> integer_lengths(const RationalVector& alpha) {
  BigInt lcm = 1;
  for (const auto& a : alpha) {
    const BigInt den = boost::multiprecision::denominator(a);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<BigInt> out;
  out.reserve(alpha.size());
  for (const auto& a : alpha) out.push_back(boost::multiprecision::numerator(a) * (lcm / boost::multiprecision::denominator(a)));
  return out;
}

void check_size(const RationalVector& alpha) {
  if (static_cast<int>(alpha.size()) > kMaxBruteForceSides)
    throw Error(ErrorCode::TooManySides, "sign enumeration limited to " + std::to_string(kMaxBruteForceSides) + " sides");
  if (alpha.empty()) throw Error(ErrorCode::InvalidArgument, "empty length vector");
}

/// Visits every sign vector with eps_1 = +1 in Gray-code order, calling
/// visit(mask, signed_sum).
template <class Int, class Visit>
void gray_walk(const std::vector<Int>& a, Visit&& visit) {
  const int m = static_cast<int>(a.size());
  Int s = 0;
  for (const auto& x : a) s += x;
  std::uint32_t mask = 0;  // bit j set <=> eps_{j+2} = -1
  const std::uint64_t count = std::uint64_t{1} << (m - 1);
  visit(mask, s);
  for (std::uint64_t g = 1; g < count; ++g) {
    const int bit = __builtin_ctzll(g);
    mask ^= (1u << bit);
    const Int& x = a[static_cast<std::size_t>(bit + 1)];
    if (mask & (1u << bit)) {
      s -= 2 * x;
    } else {
      s += 2 * x;
    }
    visit(mask, s);
  }
}

template <class Visit>
void walk_signs(const RationalVector& alpha, Visit&& visit) {
  check_size(alpha);
  const auto big = integer_lengths(alpha);
  BigInt total = 0;
  for (const auto& x : big) total += boost::multiprecision::abs(x);
  if (total < (BigInt(1) << 60)) {
    std::vector<std::int64_t> small;
    small.reserve(big.size());
    for (const auto& x : big) small.push_back(x.convert_to<std::int64_t>());
    gray_walk(small, [&](std::uint32_t mask, std::int64_t s) { visit(mask, BigInt(s), s == 0); });
  } else {
    gray_walk(big, [&](std::uint32_t mask, const BigInt& s) { visit(mask, s, s == 0); });
  }
}

}  // namespace

bool is_generic_lengths(const RationalVector& alpha) {
  bool generic = true;
  walk_signs(alpha, [&](std::uint32_t, const BigInt&, bool zero) {
    if (zero) generic = false;
  });
  return generic;
}

std::vector<std::vector<int>> enumerate_lined(const RationalVector& alpha) {
  const int m = static_cast<int>(alpha.size());
  std::vector<std::vector<int>> out;
  walk_signs(alpha, [&](std::uint32_t mask, const BigInt&, bool zero) {
    if (!zero) return;
    std::vector<int> eps(static_cast<std::size_t>(m), 1);
    for (int j = 0; j + 1 < m; ++j)
      if (mask & (1u << j)) eps[static_cast<std::size_t>(j + 1)] = -1;
    out.push_back(std::move(eps));
  });
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Rational wall_distance(const RationalVector& alpha) {
  check_size(alpha);
  BigInt lcm = 1;
  for (const auto& a : alpha) {
    const BigInt den = boost::multiprecision::denominator(a);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  BigInt best = -1;
  walk_signs(alpha, [&](std::uint32_t, const BigInt& s, bool) {
    const BigInt a = boost::multiprecision::abs(s);
    if (best < 0 || a < best) best = a;
  });
  return Rational(best, lcm);
}

}  // namespace polyspace
