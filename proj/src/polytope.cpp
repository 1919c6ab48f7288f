#include "polyspace/polytope.hpp"

#include <algorithm>
#include <string>

#include "polyspace/error.hpp"
#include "polyspace/polygon.hpp"

namespace polyspace {

namespace {

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rational cross2(const RationalVector& o, const RationalVector& a, const RationalVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rational abs_r(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Exact solve of the square system a x = b; nullopt when singular.
std::optional<RationalVector> solve(std::vector<RationalVector> a, RationalVector b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

/// Rank of a set of vectors, exact.
int rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(r);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(r)]);
    const auto& pr = rows[static_cast<std::size_t>(r)];
    for (std::size_t k = static_cast<std::size_t>(r) + 1; k < rows.size(); ++k) {
      if (rows[k][c] == 0) continue;
      const Rational f = rows[k][c] / pr[c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * pr[j];
    }
    ++r;
  }
  return r;
}

Halfspace make_halfspace(RationalVector normal, Rational offset) { return {std::move(normal), std::move(offset)}; }

std::vector<std::string> numbered(const std::string& prefix, int first, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

}  // namespace

bool Halfspace::contains(const RationalVector& x) const { return dot(normal, x) <= offset; }
bool Halfspace::on_boundary(const RationalVector& x) const { return dot(normal, x) == offset; }

bool RationalPolytope::contains(const RationalVector& x) const {
  for (const auto& h : halfspaces)
    if (!h.contains(x)) return false;
  for (const auto& e : equalities)
    if (dot(e.normal, x) != e.offset) return false;
  return true;
}

std::vector<Halfspace> canonical_halfspaces(const std::vector<Halfspace>& hs) {
  std::vector<Halfspace> out;
  for (const auto& h : hs) {
    BigInt lcm = 1;
    for (const auto& c : h.normal) {
      const BigInt den = boost::multiprecision::denominator(c);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    {
      const BigInt den = boost::multiprecision::denominator(h.offset);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    BigInt g = 0;
    for (const auto& c : h.normal) g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(Rational(c * lcm)));
    g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(Rational(h.offset * lcm)));
    if (g == 0) continue;  // 0 <= 0
    Halfspace c;
    for (const auto& x : h.normal) c.normal.push_back(x * lcm / g);
    c.offset = h.offset * lcm / g;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Halfspace& o) { return o.normal == c.normal && o.offset == c.offset; });
    if (!seen) out.push_back(std::move(c));
  }
  return out;
}

std::vector<RationalVector> clip_polygon(const std::vector<RationalVector>& poly, const Halfspace& h) {
  std::vector<RationalVector> out;
  const std::size_t n = poly.size();
  if (n == 0) return out;
  auto value = [&](const RationalVector& p) { return dot(h.normal, p) - h.offset; };
  for (std::size_t i = 0; i < n; ++i) {
    const RationalVector& cur = poly[i];
    const RationalVector& nxt = poly[(i + 1) % n];
    const Rational vc = value(cur);
    const Rational vn = value(nxt);
    if (vc <= 0) out.push_back(cur);
    if ((vc < 0 && vn > 0) || (vc > 0 && vn < 0)) {
      const Rational t = vc / (vc - vn);
      RationalVector p(cur.size());
      for (std::size_t k = 0; k < cur.size(); ++k) p[k] = cur[k] + t * (nxt[k] - cur[k]);
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<RationalVector> simplify_polygon(const std::vector<RationalVector>& poly) {
  std::vector<RationalVector> pts;
  for (const auto& p : poly)
    if (pts.empty() || pts.back() != p) pts.push_back(p);
  while (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& prev = pts[(i + pts.size() - 1) % pts.size()];
      const auto& next = pts[(i + 1) % pts.size()];
      if (cross2(prev, pts[i], next) == 0) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return pts;
}

Rational doubled_area(const std::vector<RationalVector>& poly) {
  Rational a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    a += p[0] * q[1] - p[1] * q[0];
  }
  return a;
}

std::vector<RationalVector> enumerate_vertices(int n, const std::vector<Halfspace>& hs) {
  std::vector<RationalVector> out;
  if (n == 0) {
    for (const auto& h : hs)
      if (h.offset < 0) return out;
    out.emplace_back();
    return out;
  }
  const std::size_t k = hs.size();
  if (k < static_cast<std::size_t>(n)) return out;
  std::vector<bool> pick(k, false);
  std::fill(pick.begin(), pick.begin() + n, true);
  do {
    std::vector<RationalVector> a;
    RationalVector b;
    for (std::size_t i = 0; i < k; ++i) {
      if (!pick[i]) continue;
      a.push_back(hs[i].normal);
      b.push_back(hs[i].offset);
    }
    auto x = solve(std::move(a), std::move(b));
    if (!x) continue;
    const bool feasible = std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return h.contains(*x); });
    if (feasible && std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(std::move(*x));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

int count_facets(int n, const std::vector<Halfspace>& hs, const std::vector<RationalVector>& vertices) {
  int facets = 0;
  for (const auto& h : canonical_halfspaces(hs)) {
    std::vector<RationalVector> on;
    for (const auto& v : vertices)
      if (h.on_boundary(v)) on.push_back(v);
    if (static_cast<int>(on.size()) < n) continue;
    std::vector<RationalVector> diffs;
    for (std::size_t i = 1; i < on.size(); ++i) diffs.push_back(sub(on[i], on[0]));
    if (rank(diffs) >= n - 1) ++facets;
  }
  return facets;
}

int count_sides(const RationalPolytope& p) {
  if (p.dim != 2) throw Error(ErrorCode::InvalidArgument, "side counting needs a 2-D polytope");
  const auto pts = simplify_polygon(p.vertices);
  if (pts.size() < 3 || doubled_area(pts) == 0) throw Error(ErrorCode::Degenerate, "polytope has zero area");
  return static_cast<int>(pts.size());
}

RationalPolytope build_polytope(std::vector<std::string> variables, std::vector<Halfspace> hs,
                                const std::vector<std::pair<Rational, Rational>>& bounding_box) {
  RationalPolytope poly;
  poly.dim = static_cast<int>(variables.size());
  poly.variables = std::move(variables);
  for (const auto& h : canonical_halfspaces(hs)) {
    const bool constant = std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& c) { return c == 0; });
    if (!constant) {
      poly.halfspaces.push_back(h);
    } else if (h.offset < 0) {
      throw Error(ErrorCode::EmptyPolytope, "inequality system is infeasible");
    }
  }
  if (poly.dim == 2) {
    if (bounding_box.size() != 2) throw Error(ErrorCode::InvalidArgument, "2-D clipping needs a bounding box");
    const auto& [x0, x1] = bounding_box[0];
    const auto& [y0, y1] = bounding_box[1];
    std::vector<RationalVector> pts{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
    for (const auto& h : poly.halfspaces) pts = clip_polygon(pts, h);
    pts = simplify_polygon(pts);
    if (pts.empty()) throw Error(ErrorCode::EmptyPolytope, "polytope is empty");
    poly.vertices = pts;
    poly.facet_count = (pts.size() >= 3 && doubled_area(pts) != 0) ? static_cast<int>(pts.size()) : 0;
  } else {
    poly.vertices = enumerate_vertices(poly.dim, poly.halfspaces);
    if (poly.vertices.empty()) throw Error(ErrorCode::EmptyPolytope, "polytope is empty");
    if (poly.dim == 0) {
      poly.facet_count = 0;
    } else if (poly.dim == 1) {
      poly.facet_count = poly.vertices.size() == 2 ? 2 : 0;
    } else {
      std::vector<RationalVector> diffs;
      for (std::size_t i = 1; i < poly.vertices.size(); ++i) diffs.push_back(sub(poly.vertices[i], poly.vertices[0]));
      poly.facet_count = rank(diffs) == poly.dim ? count_facets(poly.dim, poly.halfspaces, poly.vertices) : 0;
    }
  }
  return poly;
}

// ---------------------------------------------------------------------------

RationalPolytope hypersimplex(int m) {
  if (m < 3) throw Error(ErrorCode::InvalidArgument, "hypersimplex needs m >= 3");
  RationalPolytope p;
  p.dim = m;
  p.variables = numbered("x", 1, m);
  for (int i = 0; i < m; ++i) {
    RationalVector up(static_cast<std::size_t>(m), 0), down(static_cast<std::size_t>(m), 0);
    up[static_cast<std::size_t>(i)] = 1;
    down[static_cast<std::size_t>(i)] = -1;
    p.halfspaces.push_back(make_halfspace(std::move(up), 1));
    p.halfspaces.push_back(make_halfspace(std::move(down), 0));
  }
  p.equalities.push_back({RationalVector(static_cast<std::size_t>(m), 1), 2});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      RationalVector v(static_cast<std::size_t>(m), 0);
      v[static_cast<std::size_t>(i)] = 1;
      v[static_cast<std::size_t>(j)] = 1;
      p.vertices.push_back(std::move(v));
    }
  std::sort(p.vertices.begin(), p.vertices.end());
  p.facet_count = m == 3 ? 3 : 2 * m;
  return p;
}

bool in_hypersimplex(const RationalVector& x) {
  if (x.size() < 3) return false;
  for (const auto& v : x)
    if (v < 0 || v > 1) return false;
  return sum(x) == 2;
}

MembershipReport gc_membership(const RationalVector& l, const RationalVector& d) {
  if (l.size() != d.size() || l.empty()) throw Error(ErrorCode::InvalidArgument, "ell and d must both have m entries");
  const std::size_t m = l.size();
  MembershipReport rep;
  rep.perimeter_ok = sum(l) == 2;
  rep.ends_ok = d[m - 1] == 0;
  bool first = true;
  auto consider = [&](const Rational& slack, int triangle, int kind) {
    if (first || slack < rep.min_slack) rep.min_slack = slack;
    first = false;
    if (slack < 0 && !rep.violated_triangle) {
      rep.violated_triangle = triangle;
      rep.violated_inequality = kind;
    }
  };
  for (std::size_t i = 1; i <= m; ++i) {
    const Rational prev = i == 1 ? Rational(0) : d[i - 2];
    const Rational& len = l[i - 1];
    const Rational& cur = d[i - 1];
    consider(prev + cur - len, static_cast<int>(i), 0);
    consider(len + cur - prev, static_cast<int>(i), 1);
    consider(len + prev - cur, static_cast<int>(i), 2);
  }
  rep.member = rep.perimeter_ok && rep.ends_ok && !rep.violated_triangle;
  return rep;
}

bool gc_membership_float(const std::vector<double>& l, const std::vector<double>& d, double tol) {
  if (l.size() != d.size() || l.empty()) return false;
  double prev = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    const double cur = d[i];
    if (prev + cur - l[i] < -tol || l[i] + cur - prev < -tol || l[i] + prev - cur < -tol) return false;
    prev = cur;
  }
  return std::abs(d.back()) <= tol;
}

RationalPolytope diag_slice(const RationalVector& alpha) {
  const int m = static_cast<int>(alpha.size());
  if (m < 3) throw Error(ErrorCode::InvalidArgument, "need m >= 3");
  if (m > 6) throw Error(ErrorCode::InvalidArgument, "vertex enumeration supports m <= 6");
  const int n = m - 3;
  // d_k as an affine function of the free coordinates d_2..d_{m-2}
  struct Affine {
    RationalVector coef;
    Rational constant;
  };
  auto diag = [&](int k) {
    Affine a{RationalVector(static_cast<std::size_t>(n), 0), 0};
    if (k == 0 || k == m) return a;
    if (k == 1) {
      a.constant = alpha[0];
    } else if (k == m - 1) {
      a.constant = alpha[static_cast<std::size_t>(m - 1)];
    } else {
      a.coef[static_cast<std::size_t>(k - 2)] = 1;
    }
    return a;
  };
  // sum_c s_c * d_{k_c} <= offset-ish; we add inequalities of the form
  // s1 d_p + s2 d_q <= s3 ell
  std::vector<Halfspace> hs;
  auto add = [&](int sp, const Affine& p, int sq, const Affine& q, const Rational& rhs) {
    Halfspace h;
    h.normal.resize(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) h.normal[static_cast<std::size_t>(c)] = sp * p.coef[static_cast<std::size_t>(c)] + sq * q.coef[static_cast<std::size_t>(c)];
    h.offset = rhs - sp * p.constant - sq * q.constant;
    hs.push_back(std::move(h));
  };
  for (int i = 1; i <= m; ++i) {
    const Affine prev = diag(i - 1);
    const Affine cur = diag(i);
    const Rational& len = alpha[static_cast<std::size_t>(i - 1)];
    add(-1, prev, -1, cur, -len);  // ell <= prev + cur
    add(+1, prev, -1, cur, len);   // prev <= ell + cur
    add(-1, prev, +1, cur, len);   // cur <= ell + prev
  }
  std::vector<std::pair<Rational, Rational>> box;
  const Rational total = sum(alpha);
  Rational prefix = alpha[0];
  for (int k = 2; k <= m - 2; ++k) {
    prefix += alpha[static_cast<std::size_t>(k - 1)];
    box.emplace_back(0, std::min(prefix, Rational(total - prefix)));
  }
  RationalPolytope poly = build_polytope(numbered("d", 2, n), std::move(hs), box);
  poly.generic = is_generic_lengths(alpha);
  return poly;
}

Interval pair_interval(const Rational& a, const Rational& b) { return {abs_r(a - b), a + b}; }

Interval intersect(const Interval& x, const Interval& y) { return {std::max(x.lo, y.lo), std::min(x.hi, y.hi)}; }

namespace {

void require_size(const RationalVector& alpha, std::size_t m) {
  if (alpha.size() != m) throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(m) + " side lengths");
  for (const auto& a : alpha)
    if (a < 0) throw Error(ErrorCode::InvalidArgument, "side lengths must be nonnegative");
}

std::vector<Halfspace> omega_halfspaces(const Rational& a3) {
  return {make_halfspace({-1, -1}, -a3),  // x + y >= a3
          make_halfspace({1, -1}, a3),    // y >= x - a3
          make_halfspace({-1, 1}, a3),    // y <= x + a3
          make_halfspace({-1, 0}, 0), make_halfspace({0, -1}, 0)};
}

std::vector<Halfspace> box_halfspaces(const std::vector<Interval>& box) {
  std::vector<Halfspace> hs;
  const std::size_t n = box.size();
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector up(n, 0), down(n, 0);
    up[i] = 1;
    down[i] = -1;
    hs.push_back(make_halfspace(std::move(down), -box[i].lo));
    hs.push_back(make_halfspace(std::move(up), box[i].hi));
  }
  return hs;
}

std::vector<RationalVector> box_corners(const std::vector<Interval>& box) {
  std::vector<RationalVector> out{{}};
  for (const auto& iv : box) {
    std::vector<RationalVector> next;
    for (const auto& c : out)
      for (const auto& v : {iv.lo, iv.hi}) {
        auto e = c;
        e.push_back(v);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

/// Cone on the hypersimplex: x_i >= 0 and x_i <= sum of the others.
std::vector<Halfspace> cone_halfspaces(int n) {
  std::vector<Halfspace> hs;
  for (int i = 0; i < n; ++i) {
    RationalVector tri(static_cast<std::size_t>(n), -1), pos(static_cast<std::size_t>(n), 0);
    tri[static_cast<std::size_t>(i)] = 1;
    pos[static_cast<std::size_t>(i)] = -1;
    hs.push_back(make_halfspace(std::move(tri), 0));
    hs.push_back(make_halfspace(std::move(pos), 0));
  }
  return hs;
}

std::vector<Interval> pentagon_box(const RationalVector& alpha) {
  return {pair_interval(alpha[0], alpha[1]), pair_interval(alpha[4], alpha[3])};
}

}  // namespace

RationalPolytope pentagon_polytope(const RationalVector& alpha) {
  require_size(alpha, 5);
  const auto box = pentagon_box(alpha);
  auto hs = box_halfspaces(box);
  for (auto& h : omega_halfspaces(alpha[2])) hs.push_back(std::move(h));
  RationalPolytope poly = build_polytope({"d2", "d3"}, std::move(hs), {{box[0].lo, box[0].hi}, {box[1].lo, box[1].hi}});
  poly.generic = pentagon_generic(alpha);
  return poly;
}

bool pentagon_generic(const RationalVector& alpha) {
  require_size(alpha, 5);
  const Rational& a3 = alpha[2];
  for (const auto& c : box_corners(pentagon_box(alpha))) {
    const Rational& x = c[0];
    const Rational& y = c[1];
    if (x + y == a3 || y == x - a3 || y == x + a3) return false;
  }
  return true;
}

RationalPolytope even_step_polytope(const RationalVector& alpha) {
  const int m = static_cast<int>(alpha.size());
  if (m < 4 || m > 6) throw Error(ErrorCode::InvalidArgument, "even-step polytope supports m = 4, 5, 6");
  require_size(alpha, static_cast<std::size_t>(m));
  const int n = (m + 1) / 2;
  std::vector<Interval> box;
  for (int i = 1; 2 * i <= m; ++i) box.push_back(pair_interval(alpha[static_cast<std::size_t>(2 * i - 1)], alpha[static_cast<std::size_t>(2 * i - 2)]));
  const bool odd = m % 2 == 1;
  const Rational last = alpha[static_cast<std::size_t>(m - 1)];

  // Cone constraints on (x_1..x_n); for odd m substitute x_n = alpha_m.
  const int free = odd ? n - 1 : n;
  std::vector<Halfspace> cone;
  for (auto& h : cone_halfspaces(n)) {
    Halfspace r;
    r.normal.assign(h.normal.begin(), h.normal.begin() + free);
    r.offset = h.offset;
    if (odd) r.offset -= h.normal[static_cast<std::size_t>(n - 1)] * last;
    cone.push_back(std::move(r));
  }

  std::vector<Halfspace> hs = box_halfspaces(box);
  for (auto& h : cone) hs.push_back(h);

  // generic: no corner of the (sliced) box on the boundary of the cone
  bool generic = true;
  for (const auto& c : box_corners(box))
    for (const auto& h : cone)
      if (h.on_boundary(c)) generic = false;

  RationalPolytope poly;
  if (n == 2 && !odd) {
    // R+ . Xi_2 is the diagonal x_1 = x_2: a segment parametrized by x_1.
    const Interval range = intersect(box[0], box[1]);
    if (range.empty()) throw Error(ErrorCode::EmptyPolytope, "polytope is empty");
    std::vector<Halfspace> line{make_halfspace({-1}, -range.lo), make_halfspace({1}, range.hi)};
    poly = build_polytope({"x1"}, std::move(line), {});
    poly.equalities.push_back({{1, -1}, 0});
    poly.variables = {"x1"};
  } else {
    std::vector<std::pair<Rational, Rational>> bbox;
    for (const auto& iv : box) bbox.emplace_back(iv.lo, iv.hi);
    poly = build_polytope(numbered("x", 1, free), std::move(hs), bbox);
  }
  poly.generic = generic;
  return poly;
}

RationalPolytope hexagon_even_polytope(const RationalVector& alpha) {
  require_size(alpha, 6);
  return even_step_polytope(alpha);
}

// ---------------------------------------------------------------------------

QuadInterval quad_interval(const RationalVector& alpha) {
  require_size(alpha, 4);
  QuadInterval q;
  q.first = pair_interval(alpha[0], alpha[1]);
  q.second = pair_interval(alpha[3], alpha[2]);
  q.range = intersect(q.first, q.second);
  if (q.range.empty()) throw Error(ErrorCode::EmptyPolytope, "no quadrilateral has these side lengths");
  const Rational a[2] = {q.first.lo, q.first.hi};
  const Rational b[2] = {q.second.lo, q.second.hi};
  q.generic = true;
  for (const auto& x : a)
    for (const auto& y : b)
      if (x == y) q.generic = false;
  q.diagonal_nonvanishing = alpha[0] != alpha[1] || alpha[2] != alpha[3];
  const bool nested = (q.first.lo >= q.second.lo && q.first.hi <= q.second.hi) ||
                      (q.second.lo >= q.first.lo && q.second.hi <= q.first.hi);
  q.planar_oriented = nested ? "S¹ ⊔ S¹" : "S¹";
  return q;
}

std::pair<Rational, Rational> dh_interval_equality(const RationalVector& alpha) {
  require_size(alpha, 4);
  const Interval first = intersect(pair_interval(alpha[0], alpha[1]), pair_interval(alpha[2], alpha[3]));
  const Interval second = intersect(pair_interval(alpha[1], alpha[2]), pair_interval(alpha[0], alpha[3]));
  if (first.empty() || second.empty()) throw Error(ErrorCode::EmptyPolytope, "no quadrilateral has these side lengths");
  return {first.length(), second.length()};
}

namespace {

struct TableRow {
  const char* row;
  int sides;
  const char* spatial;
  const char* planar;
  const char* planar_oriented;
};

constexpr TableRow kPentagonTable[] = {
    {"3", 3, "CP²", "RP²", "S²"},
    {"4a", 4, "CP² # C̄P²", "Klein bottle", "T²"},
    {"4b", 4, "S² × S²", "T²", "T² ⊔ T²"},
    {"5", 5, "(S² × S²) # C̄P²", "T² # RP²", "Σ₂"},
    {"6", 6, "(S² × S²) # 2C̄P²", "T² # 2RP²", "Σ₃"},
    {"7", 7, "(S² × S²) # 3C̄P²", "T² # 3RP²", "Σ₄"},
};

}  // namespace

ClassificationReport classify_pentagon(const RationalVector& alpha) {
  require_size(alpha, 5);
  if (!pentagon_generic(alpha)) throw Error(ErrorCode::NonGeneric, "a corner of I_alpha lies on the boundary of Omega_alpha");
  const RationalPolytope poly = pentagon_polytope(alpha);
  ClassificationReport rep;
  rep.m = 5;
  rep.generic = true;
  rep.sides = count_sides(poly);
  rep.orientable = true;
  for (const auto& c : box_corners(pentagon_box(alpha))) {
    for (const auto& h : omega_halfspaces(alpha[2]))
      if (!h.contains(c)) rep.orientable = false;
  }
  std::string row = std::to_string(rep.sides);
  if (rep.sides == 4) row += rep.orientable ? "b" : "a";
  const auto* it = std::find_if(std::begin(kPentagonTable), std::end(kPentagonTable), [&](const TableRow& r) { return row == r.row; });
  if (it == std::end(kPentagonTable)) throw Error(ErrorCode::Degenerate, "unexpected side count " + row);
  rep.row = it->row;
  rep.spatial = it->spatial;
  rep.planar = it->planar;
  rep.planar_oriented = it->planar_oriented;
  rep.euler_planar = 4 - rep.sides;
  return rep;
}

ClassificationReport classify_quadrilateral(const RationalVector& alpha) {
  const QuadInterval q = quad_interval(alpha);
  if (!q.generic) throw Error(ErrorCode::NonGeneric, "boundaries of I_1 and I_2 meet");
  ClassificationReport rep;
  rep.m = 4;
  rep.generic = true;
  rep.sides = 2;
  rep.orientable = true;
  rep.spatial = "CP¹";
  rep.planar = "RP¹";
  rep.planar_oriented = q.planar_oriented;
  rep.euler_planar = 0;
  return rep;
}

std::optional<int> surface_euler(const std::string& label) {
  if (label == "S²") return 2;
  if (label == "RP²") return 1;
  if (label == "T²" || label == "Klein bottle" || label == "T² ⊔ T²") return 0;
  if (label == "S¹" || label == "S¹ ⊔ S¹" || label == "RP¹") return 0;
  if (label == "T² # RP²") return -1;
  for (int k = 2; k <= 9; ++k) {
    if (label == "T² # " + std::to_string(k) + "RP²") return -k;
  }
  static const char* const kSubscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  for (int g = 0; g <= 9; ++g)
    if (label == std::string("Σ") + kSubscripts[g]) return 2 - 2 * g;
  return std::nullopt;
}

}  // namespace polyspace
