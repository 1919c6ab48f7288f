#include "polyspace/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "polyspace/bending.hpp"
#include "polyspace/error.hpp"
#include "polyspace/polytope.hpp"

namespace polyspace {

namespace {

template <class T>
std::vector<T> fill_diagonals(const std::vector<T>& alpha, const std::vector<T>& delta) {
  const std::size_t m = alpha.size();
  if (m < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 sides");
  if (delta.size() != m - 3)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(m - 3) + " free diagonals");
  std::vector<T> d;
  d.reserve(m);
  d.push_back(alpha.front());
  for (const auto& x : delta) d.push_back(x);
  d.push_back(alpha.back());
  d.push_back(T(0));
  return d;
}

const char* inequality_text(int kind) {
  switch (kind) {
    case 0: return "ell_i <= d_{i-1} + d_i";
    case 1: return "d_{i-1} <= ell_i + d_i";
    default: return "d_i <= ell_i + d_{i-1}";
  }
}

[[noreturn]] void throw_violation(std::pair<int, int> v) {
  throw Error(ErrorCode::TriangleViolation,
              "triangle " + std::to_string(v.first) + " violates " + inequality_text(v.second), v.first);
}

Vec3 next_vertex(const Vec3& prev, double d_prev, double d_next, double len) {
  if (d_prev == 0.0) return {d_next, 0.0, 0.0};
  const Vec3 u = prev / prev.norm();
  const Vec3 perp(-u.y(), u.x(), 0.0);
  const double t = (d_prev * d_prev + d_next * d_next - len * len) / (2.0 * d_prev);
  const double h = std::sqrt(std::max(0.0, d_next * d_next - t * t));
  const Vec3 a = t * u + h * perp;
  const Vec3 b = t * u - h * perp;
  return b.y() > a.y() ? b : a;
}

}  // namespace

LDPoint ExactLDPoint::to_double() const { return {to_doubles(alpha), to_doubles(delta)}; }

std::vector<double> full_diagonals(const LDPoint& ld) { return fill_diagonals(ld.alpha, ld.delta); }
RationalVector full_diagonals(const ExactLDPoint& ld) { return fill_diagonals(ld.alpha, ld.delta); }

std::optional<std::pair<int, int>> first_violation(const LDPoint& ld, double tol) {
  const auto d = full_diagonals(ld);
  double total = 0.0;
  for (double a : ld.alpha) total += a;
  const double slack_floor = -tol * std::max(1.0, total);
  double prev = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double len = ld.alpha[i];
    const double cur = d[i];
    const double slack[3] = {prev + cur - len, len + cur - prev, len + prev - cur};
    for (int k = 0; k < 3; ++k)
      if (slack[k] < slack_floor) return std::pair{static_cast<int>(i) + 1, k};
    prev = cur;
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> first_violation(const ExactLDPoint& ld) {
  const auto d = full_diagonals(ld);
  const auto rep = gc_membership(ld.alpha, d);
  if (!rep.violated_triangle) return std::nullopt;
  return std::pair{*rep.violated_triangle, *rep.violated_inequality};
}

Polygon reconstruct(const LDPoint& ld, int k) {
  if (k != 2 && k != 3) throw Error(ErrorCode::InvalidArgument, "dimension must be 2 or 3");
  if (auto v = first_violation(ld)) throw_violation(*v);
  const auto d = full_diagonals(ld);
  const std::size_t m = d.size();
  std::vector<Vec3> vertex(m + 1, Vec3::Zero());
  vertex[1] = Vec3(ld.alpha[0], 0.0, 0.0);
  for (std::size_t i = 1; i + 1 < m; ++i) vertex[i + 1] = next_vertex(vertex[i], d[i - 1], d[i], ld.alpha[i]);
  Polygon p;
  p.dim = k;
  p.edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) p.edges.push_back(vertex[i + 1] - vertex[i]);
  return p;
}

Polygon reconstruct(const ExactLDPoint& ld, int k) {
  if (auto v = first_violation(ld)) throw_violation(*v);
  LDPoint f = ld.to_double();
  return reconstruct(f, k);
}

Polygon fiber_sample(const LDPoint& ld, const std::vector<double>& angles) {
  const int m = static_cast<int>(ld.alpha.size());
  if (static_cast<int>(angles.size()) != m - 3)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(m - 3) + " fiber angles");
  Polygon p = reconstruct(ld, 3);
  for (int i = 2; i <= m - 2; ++i) p = bend(p, i, angles[static_cast<std::size_t>(i - 2)]);
  return p;
}

Polygon section_sigma(const RationalVector& alpha) {
  if (!in_hypersimplex(alpha)) throw Error(ErrorCode::NotInHypersimplex, "alpha is not in the hypersimplex");
  const std::size_t m = alpha.size();
  // beta[i] = alpha_1 + ... + alpha_i
  RationalVector beta(m + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) beta[i] = beta[i - 1] + alpha[i - 1];
  std::size_t r = 1;
  while (!(beta[r] <= 1 && beta[r + 1] >= 1)) ++r;
  const double a = to_double(beta[r]);
  const double b = to_double(alpha[r]);
  const double c = to_double(2 - beta[r + 1]);
  // triangle P0 = 0, P1 = (a, 0), |P2 - P1| = b, |P2| = c
  Eigen::Vector3d p2(c, 0.0, 0.0);
  if (a > 0.0) {
    const double x = (a * a + c * c - b * b) / (2.0 * a);
    p2 = Vec3(x, std::sqrt(std::max(0.0, c * c - x * x)), 0.0);
  }
  const Vec3 p1(a, 0.0, 0.0);
  const Vec3 back = c > 0.0 ? Vec3(-p2 / p2.norm()) : Vec3(-1.0, 0.0, 0.0);
  Polygon p;
  p.dim = 2;
  for (std::size_t j = 0; j < r; ++j) p.edges.emplace_back(to_double(alpha[j]), 0.0, 0.0);
  p.edges.push_back(p2 - p1);
  for (std::size_t j = r + 1; j < m; ++j) p.edges.push_back(to_double(alpha[j]) * back);
  return p;
}

std::vector<Polygon> sample_moduli(const RationalVector& alpha, int k, int count, std::uint64_t seed) {
  if (k != 2 && k != 3) throw Error(ErrorCode::InvalidArgument, "dimension must be 2 or 3");
  if (count < 0) throw Error(ErrorCode::InvalidArgument, "count must be nonnegative");
  const RationalPolytope slice = diag_slice(alpha);
  const int n = slice.dim;
  if (n > 0 && slice.facet_count == 0) throw Error(ErrorCode::EmptyPolytope, "moduli space has empty interior");
  std::vector<double> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    Rational mn = slice.vertices[0][static_cast<std::size_t>(c)], mx = mn;
    for (const auto& v : slice.vertices) {
      mn = std::min(mn, v[static_cast<std::size_t>(c)]);
      mx = std::max(mx, v[static_cast<std::size_t>(c)]);
    }
    lo[static_cast<std::size_t>(c)] = to_double(mn);
    hi[static_cast<std::size_t>(c)] = to_double(mx);
  }
  LDPoint ld{to_doubles(alpha), std::vector<double>(static_cast<std::size_t>(n))};
  const int m = static_cast<int>(alpha.size());
  constexpr int kMaxAttempts = 1 << 20;
  std::vector<Polygon> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    int attempt = 0;
    do {
      if (++attempt > kMaxAttempts) throw Error(ErrorCode::Degenerate, "rejection sampling failed to converge");
      for (int c = 0; c < n; ++c)
        ld.delta[static_cast<std::size_t>(c)] = uniform(rng, lo[static_cast<std::size_t>(c)], hi[static_cast<std::size_t>(c)]);
    } while (first_violation(ld, 0.0));
    if (k == 3) {
      std::vector<double> angles(static_cast<std::size_t>(n));
      for (auto& a : angles) a = uniform(rng, 0.0, 2.0 * std::numbers::pi);
      out.push_back(fiber_sample(ld, angles));
    } else {
      Polygon p = reconstruct(ld, 2);
      for (int i = 2; i <= m - 2; ++i)
        if (uniform_index(rng, 2) == 1) p = flip(p, i);
      out.push_back(std::move(p));
    }
  }
  return out;
}

namespace {

Rational random_in(const Rational& lo, const Rational& hi, Rng& rng, int denominator) {
  const auto step = static_cast<long long>(uniform_index(rng, static_cast<std::uint64_t>(denominator) + 1));
  return lo + (hi - lo) * Rational(step, denominator);
}

}  // namespace

ExactLDPoint random_exact_ld(int m, Rng& rng, int denominator) {
  if (m < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 sides");
  if (denominator < 1) throw Error(ErrorCode::InvalidArgument, "denominator must be positive");
  ExactLDPoint ld;
  const auto um = static_cast<std::size_t>(m);
  for (;;) {
    ld.alpha.clear();
    for (int i = 0; i < m; ++i)
      ld.alpha.emplace_back(static_cast<long long>(uniform_index(rng, static_cast<std::uint64_t>(denominator))) + 1,
                            denominator);
    const Rational total = sum(ld.alpha);
    const Rational longest = *std::max_element(ld.alpha.begin(), ld.alpha.end());
    if (2 * longest <= total) break;
  }
  // tail[i] = alpha_{i+1} + ... + alpha_m, tail_max[i] = max of the same (0-based alpha).
  RationalVector tail(um + 1, 0), tail_max(um + 1, 0);
  for (std::size_t i = um; i-- > 0;) {
    tail[i] = tail[i + 1] + ld.alpha[i];
    tail_max[i] = std::max(tail_max[i + 1], ld.alpha[i]);
  }
  ld.delta.clear();
  Rational prev = ld.alpha[0];  // d_1
  for (std::size_t i = 2; i + 2 <= um; ++i) {
    // d_i must close with alpha_{i+1..m}: [max(0, 2 max - sum), sum]
    const Rational close_lo = std::max(Rational(0), Rational(2 * tail_max[i] - tail[i]));
    const Rational& close_hi = tail[i];
    const Rational& len = ld.alpha[i - 1];
    const Rational lo = std::max(prev > len ? Rational(prev - len) : Rational(len - prev), close_lo);
    const Rational hi = std::min(Rational(prev + len), close_hi);
    prev = random_in(lo, hi, rng, denominator);
    ld.delta.push_back(prev);
  }
  return ld;
}

}  // namespace polyspace
