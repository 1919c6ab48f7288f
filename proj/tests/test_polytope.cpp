#include <gtest/gtest.h>

#include <algorithm>

#include "polyspace/error.hpp"
#include "polyspace/polygon.hpp"
#include "polyspace/polytope.hpp"
#include "polyspace/random.hpp"

using namespace polyspace;

namespace {

RationalVector rv(std::initializer_list<long long> xs) {
  RationalVector out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

Rational q(long long p, long long d) { return Rational(p, d); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::InvalidArgument;
}

// Every vertex satisfies all halfspaces and is tight on at least dim of them.
void expect_vertex_invariants(const RationalPolytope& p) {
  for (const auto& v : p.vertices) {
    int tight = 0;
    for (const auto& h : p.halfspaces) {
      EXPECT_TRUE(h.contains(v));
      tight += h.on_boundary(v) ? 1 : 0;
    }
    EXPECT_GE(tight, p.dim);
  }
}

}  // namespace

TEST(Polytope, Hypersimplex) {
  EXPECT_TRUE(in_hypersimplex({q(2, 3), q(2, 3), q(2, 3)}));
  EXPECT_TRUE(in_hypersimplex(rv({1, 1, 0})));
  EXPECT_FALSE(in_hypersimplex({q(3, 2), q(1, 2), Rational(0)}));
  EXPECT_FALSE(in_hypersimplex({q(1, 2), q(1, 2), q(1, 2)}));
  for (int m = 3; m <= 7; ++m) {
    const auto h = hypersimplex(m);
    EXPECT_EQ(static_cast<int>(h.vertices.size()), m * (m - 1) / 2);
    for (const auto& v : h.vertices) EXPECT_TRUE(in_hypersimplex(v));
  }
}

TEST(Polytope, GelfandCetlinMembership) {
  const RationalVector l(4, q(1, 2));
  const auto ok = gc_membership(l, {q(1, 2), q(7, 10), q(1, 2), Rational(0)});
  EXPECT_TRUE(ok.member);
  EXPECT_TRUE(ok.perimeter_ok);
  // triangle 1 is (0, 1/2, 1/2): tight
  EXPECT_EQ(ok.min_slack, 0);
  const auto bad = gc_membership(l, {q(1, 2), q(3, 2), q(1, 2), Rational(0)});
  EXPECT_FALSE(bad.member);
  ASSERT_TRUE(bad.violated_triangle.has_value());
  EXPECT_EQ(*bad.violated_triangle, 2);
  EXPECT_EQ(*bad.violated_inequality, 2);
  EXPECT_EQ(bad.min_slack, q(-1, 2));
  const auto flat = gc_membership(rv({1, 1, 0}), rv({1, 0, 0}));
  EXPECT_TRUE(flat.member);
  EXPECT_EQ(flat.min_slack, 0);
  // perimeter other than 2
  EXPECT_FALSE(gc_membership(rv({1, 1, 1}), rv({1, 1, 0})).member);
  // d_m must vanish
  EXPECT_FALSE(gc_membership(l, {q(1, 2), q(7, 10), q(1, 2), q(1, 10)}).member);
  EXPECT_TRUE(gc_membership_float({0.5, 0.5, 0.5, 0.5}, {0.5, 0.7, 0.5, 0.0}, 1e-12));
  EXPECT_FALSE(gc_membership_float({0.5, 0.5, 0.5, 0.5}, {0.5, 1.5, 0.5, 0.0}, 1e-12));
}

TEST(Polytope, DiagonalSlices) {
  const auto quad = diag_slice(rv({1, 2, 3, 4}));
  EXPECT_EQ(quad.dim, 1);
  ASSERT_EQ(quad.vertices.size(), 2u);
  EXPECT_EQ(quad.vertices[0][0], 1);
  EXPECT_EQ(quad.vertices[1][0], 3);
  const auto tri = diag_slice(rv({3, 4, 5}));
  EXPECT_EQ(tri.dim, 0);
  EXPECT_EQ(code_of([] { diag_slice(rv({1, 1, 5})); }), ErrorCode::EmptyPolytope);
  const auto pent = diag_slice(rv({2, 1, 5, 1, 2}));
  EXPECT_EQ(pent.dim, 2);
  EXPECT_EQ(count_sides(pent), 3);
  expect_vertex_invariants(pent);
  const auto hex = diag_slice(rv({2, 2, 3, 3, 2, 2}));
  EXPECT_EQ(hex.dim, 3);
  expect_vertex_invariants(hex);
  EXPECT_EQ(code_of([] { diag_slice(rv({1, 1, 1, 1, 1, 1, 1})); }), ErrorCode::InvalidArgument);
}

TEST(Polytope, PentagonSides) {
  EXPECT_EQ(count_sides(pentagon_polytope(rv({2, 1, 5, 1, 2}))), 3);
  EXPECT_EQ(count_sides(pentagon_polytope(rv({3, 2, 5, 1, 2}))), 4);
  EXPECT_EQ(count_sides(pentagon_polytope(rv({3, 1, 3, 1, 3}))), 4);
  EXPECT_EQ(count_sides(pentagon_polytope(rv({2, 1, 3, 1, 2}))), 5);
  EXPECT_EQ(count_sides(pentagon_polytope(rv({4, 2, 2, 2, 4}))), 6);
  // generic seven-sided instance: every wall line cuts a corner
  EXPECT_EQ(count_sides(pentagon_polytope(rv({4, 3, 4, 3, 4}))), 7);
  // the slice and the pentagon polytope agree
  for (const auto& a : {rv({2, 1, 5, 1, 2}), rv({2, 1, 3, 1, 2}), rv({4, 2, 2, 2, 4})})
    EXPECT_EQ(count_sides(diag_slice(a)), count_sides(pentagon_polytope(a)));
}

TEST(Polytope, CountSides) {
  const std::vector<std::pair<Rational, Rational>> box{{-10, 10}, {-10, 10}};
  const auto square = build_polytope({"x", "y"},
                                     {{rv({1, 0}), 1}, {rv({-1, 0}), 0}, {rv({0, 1}), 1}, {rv({0, -1}), 0}}, box);
  EXPECT_EQ(count_sides(square), 4);
  EXPECT_EQ(square.facet_count, 4);
  const auto triangle = build_polytope({"x", "y"}, {{rv({-1, 0}), 0}, {rv({0, -1}), 0}, {rv({1, 1}), 1}}, box);
  EXPECT_EQ(count_sides(triangle), 3);
  // a redundant halfspace through a vertex adds no side
  const auto same = build_polytope({"x", "y"}, {{rv({-1, 0}), 0}, {rv({0, -1}), 0}, {rv({1, 1}), 1}, {rv({1, 0}), 1}}, box);
  EXPECT_EQ(count_sides(same), 3);
  const auto segment = build_polytope({"x", "y"}, {{rv({1, 0}), 0}, {rv({-1, 0}), 0}, {rv({0, 1}), 1}, {rv({0, -1}), 0}}, box);
  EXPECT_EQ(code_of([&] { count_sides(segment); }), ErrorCode::Degenerate);
  EXPECT_EQ(code_of([&] { build_polytope({"x", "y"}, {{rv({1, 0}), -1}, {rv({-1, 0}), 0}}, box); }),
            ErrorCode::EmptyPolytope);
}

TEST(Polytope, PentagonGenericity) {
  EXPECT_TRUE(pentagon_generic(rv({2, 1, 5, 1, 2})));
  // corner (0, 2) lies on y = x + alpha_3
  EXPECT_FALSE(pentagon_generic(rv({1, 1, 2, 1, 1})));
  // corner (4, 2) lies on y = x - alpha_3
  EXPECT_FALSE(pentagon_generic(rv({3, 1, 2, 1, 3})));
  // corner (2, 2) lies on x + y = alpha_3
  EXPECT_FALSE(pentagon_generic(rv({4, 2, 4, 2, 4})));
  EXPECT_TRUE(pentagon_generic(rv({4, 3, 4, 3, 4})));
}

TEST(Polytope, Classification) {
  struct Row {
    RationalVector alpha;
    int sides;
    const char* row;
    bool orientable;
    int euler;
  };
  const Row rows[] = {
      {rv({2, 1, 5, 1, 2}), 3, "3", false, 1},  {rv({3, 2, 5, 1, 2}), 4, "4a", false, 0},
      {rv({3, 1, 3, 1, 3}), 4, "4b", true, 0},  {rv({2, 1, 3, 1, 2}), 5, "5", false, -1},
      {rv({4, 2, 2, 2, 4}), 6, "6", false, -2}, {rv({4, 3, 4, 3, 4}), 7, "7", false, -3},
  };
  for (const auto& r : rows) {
    const auto c = classify_pentagon(r.alpha);
    EXPECT_EQ(c.sides, r.sides);
    EXPECT_EQ(c.row, r.row);
    EXPECT_EQ(c.orientable, r.orientable);
    EXPECT_EQ(c.euler_planar, r.euler);
    EXPECT_EQ(c.euler_planar, 4 - c.sides);
    // the oriented double cover has twice the Euler characteristic
    EXPECT_EQ(surface_euler(c.planar), c.euler_planar);
    EXPECT_EQ(surface_euler(c.planar_oriented), 2 * c.euler_planar);
  }
  const auto first = classify_pentagon(rv({2, 1, 5, 1, 2}));
  EXPECT_EQ(first.spatial, "CP²");
  EXPECT_EQ(first.planar, "RP²");
  EXPECT_EQ(first.planar_oriented, "S²");
  const auto six = classify_pentagon(rv({4, 2, 2, 2, 4}));
  EXPECT_EQ(six.spatial, "(S² × S²) # 2C̄P²");
  EXPECT_EQ(six.planar, "T² # 2RP²");
  EXPECT_EQ(six.planar_oriented, "Σ₃");
  EXPECT_EQ(classify_pentagon(rv({3, 2, 5, 1, 2})).planar, "Klein bottle");
  EXPECT_EQ(code_of([] { classify_pentagon(rv({4, 2, 4, 2, 4})); }), ErrorCode::NonGeneric);
  EXPECT_EQ(code_of([] { classify_pentagon(rv({1, 1, 1, 1, 9})); }), ErrorCode::EmptyPolytope);
}

TEST(Polytope, SurfaceEuler) {
  EXPECT_EQ(surface_euler("S²"), 2);
  EXPECT_EQ(surface_euler("RP²"), 1);
  EXPECT_EQ(surface_euler("T²"), 0);
  EXPECT_EQ(surface_euler("T² ⊔ T²"), 0);
  EXPECT_EQ(surface_euler("T² # 3RP²"), -3);
  EXPECT_EQ(surface_euler("Σ₄"), -6);
  EXPECT_FALSE(surface_euler("CP²").has_value());
}

TEST(Polytope, Quadrilaterals) {
  const auto a = quad_interval(rv({1, 2, 3, 4}));
  EXPECT_FALSE(a.generic);
  EXPECT_EQ(a.first.lo, 1);
  EXPECT_EQ(a.second.hi, 7);
  const auto b = quad_interval(rv({1, 2, 3, 5}));
  EXPECT_TRUE(b.generic);
  EXPECT_EQ(b.range.lo, 2);
  EXPECT_EQ(b.range.hi, 3);
  EXPECT_EQ(b.planar_oriented, "S¹");
  EXPECT_FALSE(quad_interval(rv({1, 10, 4, 5})).generic);
  const auto nested = quad_interval(rv({2, 3, 1, 3}));
  EXPECT_TRUE(nested.generic);
  EXPECT_EQ(nested.planar_oriented, "S¹ ⊔ S¹");
  EXPECT_TRUE(quad_interval(rv({1, 2, 3, 5})).diagonal_nonvanishing);
  EXPECT_FALSE(quad_interval(rv({1, 1, 1, 1})).diagonal_nonvanishing);
  EXPECT_EQ(code_of([] { quad_interval(rv({1, 1, 1, 5})); }), ErrorCode::EmptyPolytope);
  EXPECT_EQ(code_of([] { classify_quadrilateral(rv({1, 2, 3, 4})); }), ErrorCode::NonGeneric);
  EXPECT_EQ(classify_quadrilateral(rv({2, 3, 1, 3})).planar_oriented, "S¹ ⊔ S¹");
}

TEST(Polytope, DuistermaatHeckmanLengths) {
  const auto [a, b] = dh_interval_equality(rv({1, 1, 1, 1}));
  EXPECT_EQ(a, 2);
  EXPECT_EQ(b, 2);
  const auto [c, d] = dh_interval_equality(rv({1, 2, 3, 5}));
  EXPECT_EQ(c, 1);
  EXPECT_EQ(d, 1);
  Rng rng(1);
  int done = 0;
  while (done < 300) {
    RationalVector alpha;
    for (int i = 0; i < 4; ++i) alpha.emplace_back(static_cast<long long>(uniform_index(rng, 30)) + 1, 7);
    if (intersect(pair_interval(alpha[0], alpha[1]), pair_interval(alpha[2], alpha[3])).empty()) continue;
    const auto [x, y] = dh_interval_equality(alpha);
    EXPECT_EQ(x, y);
    const auto qi = quad_interval(alpha);
    EXPECT_GE(qi.range.lo, qi.first.lo);
    EXPECT_LE(qi.range.hi, qi.second.hi);
    ++done;
  }
}

TEST(Polytope, Hexagons) {
  const auto box = hexagon_even_polytope(rv({4, 1, 4, 1, 4, 1}));
  EXPECT_EQ(box.facet_count, 6);
  EXPECT_EQ(box.vertices.size(), 8u);
  EXPECT_TRUE(box.generic);
  const auto regular = hexagon_even_polytope(rv({1, 1, 1, 1, 1, 1}));
  EXPECT_FALSE(regular.generic);
  // z in [5, 7] against x, y in [3, 5]: only z <= x + y cuts
  const auto cut = hexagon_even_polytope(rv({4, 1, 4, 1, 6, 1}));
  EXPECT_TRUE(cut.generic);
  EXPECT_EQ(cut.facet_count, 7);
  expect_vertex_invariants(cut);
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    RationalVector alpha;
    for (int i = 0; i < 6; ++i) alpha.emplace_back(static_cast<long long>(uniform_index(rng, 12)) + 1, 3);
    try {
      const auto p = hexagon_even_polytope(alpha);
      EXPECT_LE(p.facet_count, 9);
      expect_vertex_invariants(p);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::EmptyPolytope);
    }
  }
}

TEST(Polytope, EvenStep) {
  for (const auto& alpha : {rv({1, 2, 3, 5}), rv({2, 3, 1, 3}), rv({1, 1, 1, 1})}) {
    const auto p = even_step_polytope(alpha);
    const auto qi = quad_interval(alpha);
    EXPECT_EQ(p.vertices.front().front(), qi.range.lo);
    EXPECT_EQ(p.vertices.back().front(), qi.range.lo == qi.range.hi ? qi.range.lo : qi.range.hi);
  }
  const auto five = even_step_polytope(rv({2, 1, 3, 1, 2}));
  EXPECT_EQ(five.dim, 2);
  expect_vertex_invariants(five);
  const RationalVector hex = rv({4, 1, 4, 1, 6, 1});
  EXPECT_EQ(even_step_polytope(hex).facet_count, hexagon_even_polytope(hex).facet_count);
  EXPECT_EQ(even_step_polytope(hex).vertices, hexagon_even_polytope(hex).vertices);
}

TEST(Polytope, WallDistance) {
  EXPECT_EQ(wall_distance(rv({1, 1, 1})), 1);
  EXPECT_EQ(wall_distance(rv({1, 1, 1, 1})), 0);
  EXPECT_EQ(wall_distance(rv({2, 1, 5, 1, 2})), 1);
  EXPECT_EQ(wall_distance(rv({1, 1, 1, 1})) == 0, !is_generic_lengths(rv({1, 1, 1, 1})));
}

TEST(Polytope, CanonicalHalfspaces) {
  const auto hs = canonical_halfspaces({{rv({2, 4}), 6}, {rv({1, 2}), 3}, {{q(1, 2), Rational(1)}, q(3, 2)}});
  ASSERT_EQ(hs.size(), 1u);
  EXPECT_EQ(hs[0].normal, rv({1, 2}));
  EXPECT_EQ(hs[0].offset, 3);
}
