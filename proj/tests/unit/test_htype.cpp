#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "halfball/htype.hpp"
#include "halfball/hyp2.hpp"
#include "halfball/random.hpp"

using namespace halfball;
using namespace halfball::htype;

namespace {

Vec vec(std::initializer_list<double> v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

SPoint random_point(const HTypeAlgebra& alg, Rng& rng) {
  Vec x(alg.p()), z(alg.q());
  for (int i = 0; i < alg.p(); ++i) x[i] = rng.normal();
  for (int i = 0; i < alg.q(); ++i) z[i] = rng.normal();
  return SPoint(x, z, std::exp(rng.uniform(-2, 2)));
}

UnitTangent random_downward(const HTypeAlgebra& alg, Rng& rng) {
  Vec x(alg.p()), z(alg.q());
  for (int i = 0; i < alg.p(); ++i) x[i] = rng.normal();
  for (int i = 0; i < alg.q(); ++i) z[i] = rng.normal();
  return UnitTangent::normalized(x, z, -std::abs(rng.normal()));
}

std::vector<HTypeAlgebra> algebras() {
  return {HTypeAlgebra::degenerate_abelian(1), HTypeAlgebra::degenerate_abelian(2),
          HTypeAlgebra::degenerate_abelian(3), HTypeAlgebra::heisenberg(1), HTypeAlgebra::heisenberg(2)};
}

}  // namespace

TEST(HType, Dimensions) {
  EXPECT_EQ(HTypeAlgebra::degenerate_abelian(1).nu(), 1.0);
  EXPECT_EQ(HTypeAlgebra::heisenberg(1).nu(), 2.0);
  EXPECT_EQ(HTypeAlgebra::heisenberg(2).p(), 4);
  EXPECT_THROW(HTypeAlgebra::heisenberg(0), std::invalid_argument);
}

TEST(HType, IdentitiesHold) {
  for (const auto& alg : algebras()) {
    EXPECT_LT(validate_algebra(alg, 2000, 4).max(), 1e-10) << alg.name();
  }
}

TEST(HType, HeisenbergProductExample) {
  const auto alg = HTypeAlgebra::heisenberg(1);
  const auto r = na_mul(alg, SPoint(vec({1, 0}), vec({0}), 1), SPoint(vec({0, 1}), vec({0}), 1));
  EXPECT_NEAR(r.x()[0], 1, 1e-15);
  EXPECT_NEAR(r.x()[1], 1, 1e-15);
  EXPECT_NEAR(r.z()[0], 0.5, 1e-15);
  EXPECT_NEAR(r.a(), 1, 1e-15);
}

TEST(HType, GroupAxioms) {
  Rng rng(8);
  for (const auto& alg : algebras()) {
    for (int i = 0; i < 200; ++i) {
      const auto x = random_point(alg, rng), y = random_point(alg, rng), w = random_point(alg, rng);
      const auto id = na_mul(alg, x, na_inv(x));
      EXPECT_NEAR(id.x().norm() + id.z().norm() + std::abs(id.a() - 1), 0.0, 1e-12);
      const auto e = s_identity(alg);
      const auto ey = na_mul(alg, e, y);
      EXPECT_NEAR((ey.x() - y.x()).norm() + (ey.z() - y.z()).norm() + std::abs(ey.a() - y.a()), 0.0, 1e-15);
      const auto l = na_mul(alg, na_mul(alg, x, y), w);
      const auto r = na_mul(alg, x, na_mul(alg, y, w));
      EXPECT_NEAR((l.x() - r.x()).norm() + (l.z() - r.z()).norm() + std::abs(l.a() - r.a()), 0.0,
                  1e-10 * (1 + l.z().norm()));
    }
  }
}

TEST(HType, Gauge) {
  const auto alg = HTypeAlgebra::degenerate_abelian(1);
  EXPECT_NEAR(gauge(NPoint{Vec(0), vec({0.25})}), 0.5, 1e-15);
  EXPECT_EQ(gauge(n_identity(alg)), 0.0);
  Rng rng(2);
  const auto h = HTypeAlgebra::heisenberg(1);
  for (int i = 0; i < 100; ++i) {
    const NPoint n{vec({rng.normal(), rng.normal()}), vec({rng.normal()})};
    const double a = std::exp(rng.uniform(-3, 3));
    EXPECT_NEAR(gauge(dilate(a, n)), std::sqrt(a) * gauge(n), 1e-12 * (1 + gauge(n)));
    EXPECT_NEAR(dist_n(h, n, n), 0.0, 1e-15);
  }
}

TEST(HType, VerticalDistance) {
  for (const auto& alg : algebras()) {
    const Vec x = Vec::Zero(alg.p()), z = Vec::Zero(alg.q());
    for (double s : {0.01, 0.5, 3.0}) {
      for (double t : {0.2, 1.0, 50.0}) {
        EXPECT_NEAR(dist_s(alg, SPoint(x, z, s), SPoint(x, z, t)), std::abs(std::log(s / t)), 1e-12);
      }
    }
  }
}

TEST(HType, DistanceSymmetricAndZeroOnDiagonal) {
  Rng rng(12);
  for (const auto& alg : algebras()) {
    for (int i = 0; i < 100; ++i) {
      const auto x = random_point(alg, rng), y = random_point(alg, rng);
      EXPECT_NEAR(dist_s(alg, x, y), dist_s(alg, y, x), 1e-9 * (1 + dist_s(alg, x, y)));
      EXPECT_NEAR(dist_s(alg, x, x), 0.0, 1e-7);
    }
  }
}

TEST(HType, AbelianLineReproducesUpperHalfPlane) {
  const auto alg = HTypeAlgebra::degenerate_abelian(1);
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const double x1 = rng.uniform(-3, 3), x2 = rng.uniform(-3, 3);
    const double y1 = std::exp(rng.uniform(-3, 3)), y2 = std::exp(rng.uniform(-3, 3));
    const double d_s = dist_s(alg, SPoint(Vec(0), vec({x1}), y1), SPoint(Vec(0), vec({x2}), y2));
    const double d_h = hyp2::distance_h2(hyp2::HPoint(x1, y1), hyp2::HPoint(x2, y2));
    EXPECT_NEAR(d_s, d_h, 1e-10 * (1 + d_h));
  }
}

TEST(HType, GeodesicExamples) {
  const auto alg = HTypeAlgebra::heisenberg(1);
  const auto down = UnitTangent(Vec::Zero(2), Vec::Zero(1), -1.0);
  for (double tau : {0.0, 0.5, 3.0}) {
    const auto g = geodesic(alg, down, tau);
    EXPECT_NEAR(g.a(), std::exp(-tau), 1e-14);
    EXPECT_NEAR(g.x().norm() + g.z().norm(), 0.0, 1e-15);
  }
  Rng rng(1);
  const auto e = geodesic(alg, random_downward(alg, rng), 0.0);
  EXPECT_NEAR(e.x().norm() + e.z().norm() + std::abs(e.a() - 1), 0.0, 1e-15);
}

TEST(HType, GeodesicIsUnitSpeedAndAboveHeightBound) {
  Rng rng(31);
  for (const auto& alg : algebras()) {
    for (int i = 0; i < 500; ++i) {
      const auto v = random_downward(alg, rng);
      const double tau = 5.0 * rng.uniform_open();
      const auto g = geodesic(alg, v, tau);
      EXPECT_NEAR(dist_from_identity(g), tau, 1e-8);
      EXPECT_GE(g.a(), std::exp(-tau) * (1 - 1e-12));
    }
  }
}

TEST(HType, UnitTangentValidation) {
  EXPECT_THROW(UnitTangent(Vec::Zero(0), vec({0.5}), -0.5), std::invalid_argument);
  const auto alg = HTypeAlgebra::degenerate_abelian(1);
  EXPECT_THROW(geodesic(alg, UnitTangent(Vec::Zero(0), vec({0.0}), 1.0), 1.0), std::invalid_argument);
}

TEST(HType, AlphaBounds) {
  const auto [a1, a2] = alpha_bounds(0.5);
  EXPECT_NEAR(a1, 0.70711, 1e-5);
  EXPECT_NEAR(a2, 0.93060, 1e-5);
  const auto lo = alpha_bounds(1e-12);
  EXPECT_NEAR(lo.first, 1.0, 1e-9);
  EXPECT_NEAR(lo.second, 1.0, 1e-9);
  const auto hi = alpha_bounds(1.0 - 1e-12);
  EXPECT_LT(hi.first, 1e-5);
  EXPECT_LT(hi.second, 1e-2);
  EXPECT_THROW(alpha_bounds(1.0), std::domain_error);
}

TEST(HType, ShadowIdentityAndSandwich) {
  Rng rng(41);
  for (const auto& alg : {HTypeAlgebra::heisenberg(1), HTypeAlgebra::degenerate_abelian(1),
                          HTypeAlgebra::degenerate_abelian(3)}) {
    for (int i = 0; i < 2000; ++i) {
      const double h = rng.uniform_open();
      Vec z(alg.q()), xd(alg.p());
      for (int k = 0; k < alg.q(); ++k) z[k] = rng.normal();
      for (int k = 0; k < alg.p(); ++k) xd[k] = rng.normal();
      if (alg.p() == 0) {
        z /= z.norm();
      } else {
        xd /= xd.norm();
        z *= rng.uniform() / z.norm();
      }
      const auto s = shadow_boundary(alg, h, xd, z);
      const double zz = z.squaredNorm();
      const double expect = (1 - h) * (1 - h) + 4 * (1 - h) * h * zz / (1 + zz);
      EXPECT_NEAR(s.gauge4, expect, 1e-10);
      // the point is on the geodesic, at the stated height
      const auto g = geodesic(alg, UnitTangent::normalized(std::sqrt(std::max(0.0, 1 - zz)) * xd, z, 0.0), s.tau);
      EXPECT_NEAR(g.a(), h, 1e-10);
      const auto [a1, a2] = alpha_bounds(h);
      const double gn = std::sqrt(std::sqrt(s.gauge4));
      EXPECT_GE(gn, a1 - 1e-12);
      EXPECT_LE(gn, a2 + 1e-12);
    }
  }
}

TEST(HType, ShadowAtZeroZ) {
  const auto alg = HTypeAlgebra::heisenberg(1);
  const auto s = shadow_boundary(alg, 0.3, vec({1, 0}), vec({0}));
  EXPECT_NEAR(std::sqrt(std::sqrt(s.gauge4)), alpha_bounds(0.3).first, 1e-14);
  const auto near_top = shadow_boundary(alg, 1 - 1e-10, vec({1, 0}), vec({0.5}));
  EXPECT_LT(near_top.gauge4, 1e-8);
}
