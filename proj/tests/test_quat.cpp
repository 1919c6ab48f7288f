#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polyspace/error.hpp"
#include "polyspace/frames.hpp"
#include "polyspace/quat.hpp"
#include "polyspace/random.hpp"

using namespace polyspace;

namespace {

// Hamilton product through the left-multiplication matrix of p.
Quaternion oracle_mul(const Quaternion& p, const Quaternion& q) {
  Eigen::Matrix4d l;
  l << p.w, -p.x, -p.y, -p.z,
       p.x,  p.w, -p.z,  p.y,
       p.y,  p.z,  p.w, -p.x,
       p.z, -p.y,  p.x,  p.w;
  const Eigen::Vector4d r = l * Eigen::Vector4d(q.w, q.x, q.y, q.z);
  return {r[0], r[1], r[2], r[3]};
}

double dist(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

Quaternion random_q(Rng& rng) { return {normal(rng), normal(rng), normal(rng), normal(rng)}; }

const Quaternion kI{0, 1, 0, 0}, kJ{0, 0, 1, 0}, kK{0, 0, 0, 1}, kOne{1, 0, 0, 0};

}  // namespace

TEST(Quat, BasisRelations) {
  EXPECT_EQ(quat_mul(kI, kJ), kK);
  EXPECT_EQ(quat_mul(kJ, kK), kI);
  EXPECT_EQ(quat_mul(kK, kI), kJ);
  EXPECT_EQ(quat_mul(kI, kI), (Quaternion{-1, 0, 0, 0}));
}

TEST(Quat, IdentityAndCrossProduct) {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const Quaternion q = random_q(rng);
    EXPECT_EQ(quat_mul(kOne, q), q);
    const Vec3 a(normal(rng), normal(rng), normal(rng)), b(normal(rng), normal(rng), normal(rng));
    const Quaternion pq = quat_mul(Quaternion::from_imaginary(a), Quaternion::from_imaginary(b));
    EXPECT_LT((pq.imaginary() - a.cross(b)).norm(), 1e-12);
    EXPECT_NEAR(pq.w, -a.dot(b), 1e-12);
  }
}

TEST(Quat, ProductMatchesOracleAndIsMultiplicative) {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const Quaternion p = random_q(rng), q = random_q(rng);
    EXPECT_LT(dist(quat_mul(p, q), oracle_mul(p, q)), 1e-12);
    EXPECT_NEAR(quat_mul(p, q).norm(), p.norm() * q.norm(), 1e-12 * p.norm() * q.norm());
  }
}

TEST(Quat, EtaExamplesAndHomomorphism) {
  EXPECT_TRUE(eta(kOne) == Matrix2c::Identity());
  Matrix2c ej;
  ej << 0.0, 1.0, -1.0, 0.0;
  EXPECT_TRUE(eta(kJ) == ej);
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const Quaternion p = random_q(rng), q = random_q(rng);
    EXPECT_LT((eta(quat_mul(p, q)) - eta(p) * eta(q)).norm(), 1e-12);
    EXPECT_LT(dist(eta_inverse(eta(p)), p), 1e-15);
  }
}

TEST(Quat, HopfExamples) {
  EXPECT_LT((hopf(kOne) - Vec3(1, 0, 0)).norm(), 1e-15);
  EXPECT_LT((hopf(kJ) - Vec3(-1, 0, 0)).norm(), 1e-15);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_LT((hopf(Quaternion{s, 0, s, 0}) - Vec3(0, 0, 1)).norm(), 1e-15);
  EXPECT_LT((hopf_complex(1.0, 0.0) - Vec3(1, 0, 0)).norm(), 1e-15);
  EXPECT_LT((hopf_complex(0.0, 1.0) - Vec3(-1, 0, 0)).norm(), 1e-15);
}

TEST(Quat, HopfAgreesWithFullProduct) {
  Rng rng(4);
  for (int t = 0; t < 500; ++t) {
    const Quaternion q = random_q(rng);
    const Quaternion full = oracle_mul(oracle_mul(q.conj(), kI), q);
    EXPECT_LT(std::abs(full.w), 1e-12);
    EXPECT_LT((hopf(q) - full.imaginary()).norm(), 1e-13 * q.norm2() + 1e-13);
    EXPECT_LT((hopf_complex(q.u(), q.v()) - full.imaginary()).norm(), 1e-13 * q.norm2() + 1e-13);
    EXPECT_NEAR(hopf(q).norm(), q.norm2(), 1e-12 * q.norm2());
  }
}

TEST(Quat, FiberInvarianceAndFixedPlane) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const Quaternion q = random_q(rng);
    const Complex phase = std::polar(1.0, uniform(rng, 0, 2 * std::numbers::pi));
    EXPECT_LT((hopf_complex(phase * q.u(), phase * q.v()) - hopf(q)).norm(), 1e-12 * q.norm2());
    // s + t j with s, t real: hopf = i q^2 lies in the i-k plane
    const Quaternion st{normal(rng), 0.0, normal(rng), 0.0};
    const Quaternion iq2 = quat_mul(kI, quat_mul(st, st));
    EXPECT_LT((hopf(st) - iq2.imaginary()).norm(), 1e-12);
    EXPECT_EQ(hopf(st).y(), 0.0);
  }
}

TEST(Quat, RightAction) {
  Rng rng(6);
  const Quaternion q = random_q(rng);
  EXPECT_LT(dist(act_right(q, Unitary2::Identity()), q), 1e-15);
  EXPECT_LT(dist(act_right(kOne, eta(kJ)), kJ), 1e-15);
  for (int t = 0; t < 500; ++t) {
    const Quaternion x = random_q(rng);
    const Unitary2 p = random_unitary(rng);
    const Quaternion y = act_right(x, p);
    EXPECT_NEAR(y.norm(), x.norm(), 1e-12 * x.norm());
    // oracle: P^{-1} eta(hopf x) P, read back through eta
    const Matrix2c conj = p.adjoint() * eta(Quaternion::from_imaginary(hopf(x))) * p;
    EXPECT_LT((hopf(y) - eta_inverse(conj).imaginary()).norm(), 1e-11);
    EXPECT_LT((conjugate_imaginary(hopf(x), p) - hopf(y)).norm(), 1e-11);
  }
  Unitary2 bad = Unitary2::Identity();
  bad(0, 0) = 2.0;
  try {
    act_right(q, bad);
    FAIL() << "expected NonUnitary";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUnitary);
  }
}

TEST(Quat, HopfSection) {
  const Quaternion q = hopf_section(Vec3(4, 0, 0));
  EXPECT_LT(dist(q, Quaternion{2, 0, 0, 0}), 1e-15);
  EXPECT_EQ(hopf_section(Vec3::Zero()), Quaternion{});
  const Quaternion anti = hopf_section(Vec3(-1, 0, 0));
  EXPECT_LT((hopf(anti) - Vec3(-1, 0, 0)).norm(), 1e-15);
  Rng rng(7);
  for (int t = 0; t < 1000; ++t) {
    Vec3 x(normal(rng), normal(rng), normal(rng));
    if (t % 10 == 0) x = Vec3(-std::abs(x.x()), 1e-10 * x.y(), 1e-10 * x.z());  // near the antipodal branch
    const Quaternion s = hopf_section(x);
    EXPECT_LT((hopf(s) - x).norm(), 1e-12 * std::max(1.0, x.norm()));
    EXPECT_EQ(hopf_section(x), s);
    EXPECT_EQ(s.x, 0.0);
    EXPECT_GE(s.w, 0.0);
  }
}
