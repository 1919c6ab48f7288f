#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <Eigen/LU>

#include "polyspace/error.hpp"
#include "polyspace/frames.hpp"
#include "polyspace/random.hpp"

using namespace polyspace;

namespace {

Frame basis_frame(int m) {
  ComplexVector a = ComplexVector::Zero(m), b = ComplexVector::Zero(m);
  a(0) = 1.0;
  b(1) = 1.0;
  return {a, b};
}

// Smaller root of x^2 - T x + D by bisection on [lo, hi].
double bisect_root(double t, double det, double lo, double hi) {
  auto f = [&](double x) { return x * x - t * x + det; };
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(lo) > 0) == (f(mid) > 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double max_edge_gap(const Polygon& p, const Polygon& q) {
  double worst = 0.0;
  for (int i = 1; i <= p.size(); ++i) worst = std::max(worst, (p.edge(i) - q.edge(i)).norm());
  return worst;
}

}  // namespace

TEST(Frames, Orthonormalize) {
  const Frame e = basis_frame(4);
  const Frame f = frame_orthonormalize(e.a, e.b);
  EXPECT_TRUE(f.a == e.a);
  EXPECT_TRUE(f.b == e.b);
  const Frame g = frame_orthonormalize(2.0 * e.a, e.a + e.b);
  EXPECT_LT((g.a - e.a).norm(), 1e-15);
  EXPECT_LT((g.b - e.b).norm(), 1e-15);
  Rng rng(1);
  for (int t = 0; t < 100; ++t) EXPECT_LT(frame_defect(random_frame(3 + t % 8, rng)), 1e-12);
  try {
    frame_orthonormalize(e.a, Complex(0, 2) * e.a);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::DependentColumns);
  }
}

TEST(Frames, FrameToPolygonExamples) {
  const Polygon p = frame_to_polygon(basis_frame(3));
  EXPECT_EQ(p.edge(1), Vec3(1, 0, 0));
  EXPECT_EQ(p.edge(2), Vec3(-1, 0, 0));
  EXPECT_EQ(p.edge(3), Vec3(0, 0, 0));
  const Polygon two = frame_to_polygon(basis_frame(2));
  EXPECT_EQ(two.size(), 2);
  EXPECT_EQ(two.edge(2), Vec3(-1, 0, 0));
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const Polygon q = frame_to_polygon(random_frame(3 + t % 8, rng));
    EXPECT_NEAR(perimeter(q), 2.0, 1e-10);
    EXPECT_LT(closure_defect(q), 1e-10);
  }
}

TEST(Frames, TorusAction) {
  Rng rng(3);
  const Frame f = random_frame(6, rng);
  const Frame same = torus_act(f, std::vector<double>(6, 0.0));
  EXPECT_TRUE(same.a == f.a && same.b == f.b);
  const Frame minus = torus_act(f, std::vector<double>(6, std::numbers::pi));
  EXPECT_LT((minus.a + f.a).norm(), 1e-15);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> theta(6);
    for (auto& x : theta) x = uniform(rng, -10, 10);
    const Frame g = torus_act(f, theta);
    EXPECT_LT(max_edge_gap(frame_to_polygon(g), frame_to_polygon(f)), 1e-12);
    const auto back = recover_torus_phases(f, g);
    const Frame h = torus_act(f, back);
    EXPECT_LT((h.a - g.a).norm() + (h.b - g.b).norm(), 1e-12);
  }
}

TEST(Frames, U2Equivariance) {
  Rng rng(4);
  const Frame f = random_frame(5, rng);
  const Frame id = u2_act(f, Unitary2::Identity());
  EXPECT_TRUE(id.a == f.a && id.b == f.b);
  // diag(e^{i t}, e^{-i t}) rotates every edge about the i-axis by -2t in the (j, k) plane
  const double th = 0.3;
  Unitary2 d = Unitary2::Zero();
  d(0, 0) = std::polar(1.0, th);
  d(1, 1) = std::polar(1.0, -th);
  const Polygon p = frame_to_polygon(f), q = frame_to_polygon(u2_act(f, d));
  for (int i = 1; i <= 5; ++i) {
    EXPECT_NEAR(q.edge(i).x(), p.edge(i).x(), 1e-14);
    EXPECT_NEAR(q.edge(i).tail<2>().norm(), p.edge(i).tail<2>().norm(), 1e-14);
    const double angle = std::arg(Complex(q.edge(i).z(), -q.edge(i).y()) / Complex(p.edge(i).z(), -p.edge(i).y()));
    EXPECT_NEAR(std::remainder(angle + 2 * th, 2 * std::numbers::pi), 0.0, 1e-12);
  }
  for (int t = 0; t < 50; ++t) {
    const Unitary2 u = random_unitary(rng);
    const Polygon a = frame_to_polygon(u2_act(f, u));
    const Polygon b = frame_to_polygon(f);
    for (int i = 1; i <= 5; ++i) {
      EXPECT_LT((a.edge(i) - conjugate_imaginary(b.edge(i), u)).norm(), 1e-10);
      EXPECT_NEAR(a.edge(i).norm(), b.edge(i).norm(), 1e-11);
    }
    EXPECT_LT((gram(u2_act(f, u)) - gram(f)).norm(), 1e-12);
  }
  Unitary2 bad = Unitary2::Identity() * 1.1;
  EXPECT_THROW(u2_act(f, bad), Error);
}

TEST(Frames, ConjugationIsReflection) {
  Rng rng(5);
  ComplexVector a(4), b(4);
  for (int r = 0; r < 4; ++r) {
    a(r) = normal(rng);
    b(r) = normal(rng);
  }
  const Frame real = frame_orthonormalize(a, b);
  const Frame c = conjugate_frame(real);
  EXPECT_TRUE(c.a == real.a && c.b == real.b);
  for (const auto& e : frame_to_polygon(real).edges) EXPECT_EQ(e.y(), 0.0);
  for (int t = 0; t < 50; ++t) {
    const Frame f = random_frame(6, rng);
    const Frame cc = conjugate_frame(conjugate_frame(f));
    EXPECT_TRUE(cc.a == f.a && cc.b == f.b);
    const Polygon p = frame_to_polygon(f), q = frame_to_polygon(conjugate_frame(f));
    EXPECT_LT(max_edge_gap(q, reflect_axis(p, 1)), 1e-15);
    EXPECT_EQ(moment_mu(conjugate_frame(f)), moment_mu(f));
  }
}

TEST(Frames, MomentMaps) {
  const Frame e = basis_frame(4);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = 1.0;
  expected(1, 1) = 1.0;
  EXPECT_TRUE(gram(e) == expected);
  EXPECT_EQ(moment_mu(basis_frame(3)), (std::vector<double>{1, 1, 0}));
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const Frame f = random_frame(3 + t % 8, rng);
    const ComplexMatrix g = gram(f);
    EXPECT_NEAR(g.trace().real(), 2.0, 1e-10);
    EXPECT_LT((g * g - g).norm(), 1e-9);
    EXPECT_LT(u2_moment(f).norm(), 1e-10);
    const auto mu = moment_mu(f);
    const auto ell = side_lengths(frame_to_polygon(f));
    double total = 0.0;
    for (int r = 0; r < f.size(); ++r) {
      EXPECT_NEAR(mu[r], ell[r], 1e-12);
      EXPECT_NEAR(mu[r], g(r, r).real(), 1e-12);
      total += mu[r];
    }
    EXPECT_NEAR(total, 2.0, 1e-12);
  }
  // un-normalized pair: |a|^2 = 2, |b|^2 = 0 (b = 0)
  Frame bad{ComplexVector::Zero(3), ComplexVector::Zero(3)};
  bad.a(0) = std::sqrt(2.0);
  const Matrix2c mom = u2_moment(bad);
  EXPECT_NEAR(mom(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(mom(1, 1).real(), -1.0, 1e-15);
}

TEST(Frames, TruncatedGramAndEig2) {
  Rng rng(7);
  const Frame f = random_frame(5, rng);
  EXPECT_LT((truncated_gram2(f, 5) - Matrix2c::Identity()).norm(), 1e-10);
  const Matrix2c h1 = truncated_gram2(basis_frame(3), 1);
  EXPECT_TRUE(h1 == (Matrix2c() << 1.0, 0.0, 0.0, 0.0).finished());
  const Eigen2 e1 = eig2(h1);
  EXPECT_EQ(e1.lo, 0.0);
  EXPECT_EQ(e1.hi, 1.0);
  const Eigen2 e2 = eig2((Matrix2c() << 1.0, 1.0, 1.0, 1.0).finished());
  EXPECT_NEAR(e2.lo, 0.0, 1e-15);
  EXPECT_NEAR(e2.hi, 2.0, 1e-15);
  for (int t = 0; t < 200; ++t) {
    const Frame g = random_frame(6, rng);
    // i < m keeps the two eigenvalues apart, where bisection is accurate
    const int i = 1 + static_cast<int>(uniform_index(rng, 5));
    const Matrix2c h = truncated_gram2(g, i);
    EXPECT_LT((h - h.adjoint()).norm(), 1e-15);
    const Eigen2 e = eig2(h);
    EXPECT_LE(e.lo, e.hi);
    EXPECT_GE(e.lo, -1e-12);
    const double tr = h.trace().real(), det = h.determinant().real();
    EXPECT_NEAR(bisect_root(tr, det, -1.0, tr / 2), e.lo, 1e-12);
    EXPECT_NEAR(e.lo * e.lo - tr * e.lo + det, 0.0, 1e-12);
    EXPECT_NEAR(e.hi * e.hi - tr * e.hi + det, 0.0, 1e-12);
  }
  Matrix2c nh = Matrix2c::Identity();
  nh(0, 1) = 1.0;
  EXPECT_THROW(eig2(nh), Error);
}

TEST(Frames, GelfandCetlinIdentities) {
  const GCPattern g0 = gc_pattern(basis_frame(3));
  EXPECT_EQ(g0.sum[0], 1.0);
  EXPECT_EQ(g0.diff[0], 1.0);
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const int m = 3 + t % 8;
    const Frame f = random_frame(m, rng);
    const GCPattern g = gc_pattern(f);
    const Polygon p = frame_to_polygon(f);
    const auto ell = side_lengths(p);
    const auto d = diagonals(p);
    EXPECT_NEAR(g.sum[0], ell[0], 1e-12);
    EXPECT_NEAR(g.diff[0], ell[0], 1e-12);
    EXPECT_NEAR(g.sum[m - 1], 2.0, 1e-10);
    EXPECT_NEAR(g.diff[m - 1], 0.0, 1e-10);
    double prefix = 0.0;
    for (int i = 0; i < m; ++i) {
      prefix += ell[i];
      EXPECT_NEAR(g.sum[i], prefix, 1e-10);
      EXPECT_NEAR(g.diff[i], d[i], 1e-10);
      EXPECT_GE(g.diff[i], 0.0);
      const Eigen2 e = eig2(truncated_gram2(f, i + 1));
      EXPECT_NEAR(e.hi + e.lo, g.sum[i], 1e-12);
      EXPECT_NEAR(e.hi - e.lo, g.diff[i], 1e-12);
    }
    EXPECT_GE(interlacing_slack(g), -1e-9);
  }
}

TEST(Frames, FrameFromPolygon) {
  const Polygon p(3, {Vec3(1, 0, 0), Vec3(-1, 0, 0), Vec3(0, 0, 0)});
  const Frame f = frame_from_polygon(p);
  EXPECT_LT(max_edge_gap(frame_to_polygon(f), p), 1e-12);
  EXPECT_LT(frame_defect(f), 1e-12);
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    const Polygon q = frame_to_polygon(random_frame(3 + t % 8, rng));
    const Frame g = frame_from_polygon(q);
    EXPECT_LT(max_edge_gap(frame_to_polygon(g), q), 1e-9);
    EXPECT_LT(frame_defect(g), 1e-9);
  }
  // planar polygon in the i-k plane lifts to a real (conjugation-fixed) frame
  const Polygon planar(3, {Vec3(0.5, 0, 0), Vec3(0, 0, 0.5), Vec3(-0.5, 0, 0), Vec3(0, 0, -0.5)});
  const Frame r = frame_from_polygon(planar);
  EXPECT_EQ(r.a.imag().norm(), 0.0);
  EXPECT_EQ(r.b.imag().norm(), 0.0);
  try {
    frame_from_polygon(Polygon(3, {Vec3(1, 0, 0), Vec3(-1, 0, 0), Vec3(0, 1, 0)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNormalized);
  }
  try {
    frame_from_polygon(Polygon(3, {Vec3(1, 0, 0), Vec3(0.5, 0, 0), Vec3(0.5, 0, 0)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotClosed);
  }
}
