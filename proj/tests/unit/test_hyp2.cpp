#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "halfball/hyp2.hpp"

using namespace halfball::hyp2;

namespace {

// ∫_{y0}^{1} 2 sqrt(1 - y^2) / y^2 dy by composite Simpson in log y
double trigonon_area_by_quadrature(double radius) {
  // width 2 sqrt(1 - y^2) over dy / y^2, with y = 1 - t^2 to remove the
  // square-root endpoint
  const int n = 20000;
  const double b = std::sqrt(1.0 - std::exp(-radius));
  const double h = b / n;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = i * h;
    const double y = 1.0 - t * t;
    const double f = 4.0 * t * t * std::sqrt(2.0 - t * t) / (y * y);
    s += (i == 0 || i == n ? 1.0 : (i % 2 ? 4.0 : 2.0)) * f;
  }
  return s * h / 3.0;
}

}  // namespace

TEST(Hyp2Distance, VerticalPair) { EXPECT_NEAR(distance_h2(HPoint(0, 1), HPoint(0, std::numbers::e)), 1.0, 1e-15); }

TEST(Hyp2Distance, SamePoint) { EXPECT_EQ(distance_h2(HPoint(0.3, 2.0), HPoint(0.3, 2.0)), 0.0); }

TEST(Hyp2Distance, HorizontalPair) {
  EXPECT_NEAR(distance_h2(HPoint(-1, 1), HPoint(1, 1)), 2.0 * std::log(1.0 + std::sqrt(2.0)), 1e-14);
  EXPECT_NEAR(distance_h2(HPoint(-1, 1), HPoint(1, 1)), 1.762747, 1e-6);
}

TEST(Hyp2Distance, TinySeparationKeepsRelativePrecision) {
  const double d = distance_h2(HPoint(0, 1), HPoint(1e-12, 1));
  EXPECT_NEAR(d / 1e-12, 1.0, 1e-10);
}

TEST(Hyp2Distance, InvariantUnderAffineIsometry) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(-3, 3), uy(0.1, 4);
  for (int i = 0; i < 200; ++i) {
    const HPoint z0(ux(rng), uy(rng)), a(ux(rng), uy(rng)), b(ux(rng), uy(rng));
    EXPECT_NEAR(distance_h2(apply_affine_isometry(z0, a), apply_affine_isometry(z0, b)), distance_h2(a, b), 1e-12);
  }
}

TEST(Hyp2Point, RejectsNonPositiveHeight) {
  EXPECT_THROW(HPoint(0, 0), std::invalid_argument);
  EXPECT_THROW(HPoint(0, -1), std::invalid_argument);
}

TEST(Hyp2Contains, SpecialHalfPlane) {
  const auto t = H2Set::half_plane(HPoint(0, 1));
  EXPECT_TRUE(contains_h2(t, HPoint(0, 0.5)));
  EXPECT_FALSE(contains_h2(t, HPoint(0, 1)));
}

TEST(Hyp2Contains, HalfBallNearCorner) {
  const HPoint i(0, 1);
  const auto m = boundary_markers(i, 1.0);
  const double dx = i.x() - m.q_plus.x(), dy = i.y() - m.q_plus.y();
  const double len = std::hypot(dx, dy);
  const HPoint inward(m.q_plus.x() + 1e-6 * dx / len, m.q_plus.y() + 1e-6 * dy / len);
  EXPECT_TRUE(contains_h2(H2Set::half_ball(i, 1.0), inward));
}

TEST(Hyp2Contains, InclusionChainTrigonaHalfBall) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ux(-2, 2), uy(0.2, 3), ur(1.0, 4.0), uw(0, 1);
  for (int s = 0; s < 20; ++s) {
    const HPoint z(ux(rng), uy(rng));
    const double r = ur(rng);
    const auto inner = H2Set::trigonon(z, r - std::log(2.0));
    const auto mid = H2Set::half_ball(z, r);
    const auto outer = H2Set::trigonon(z, r);
    const auto box = bounding_box(outer);
    for (int k = 0; k < 2000; ++k) {
      const HPoint w(box.x_lo + (box.x_hi - box.x_lo) * uw(rng), box.y_lo + (box.y_hi - box.y_lo) * uw(rng));
      if (contains_h2(inner, w)) EXPECT_TRUE(contains_h2(mid, w));
      if (contains_h2(mid, w)) EXPECT_TRUE(contains_h2(outer, w));
    }
  }
}

TEST(Hyp2Area, ClosedForms) {
  const HPoint z(0.4, 1.7);
  const double e = std::numbers::e;
  EXPECT_NEAR(area_closed_form(H2Set::rectangle(z, 1.0)), 2 * e, 1e-14);
  EXPECT_NEAR(area_closed_form(H2Set::rectangle(z, 1.0)), 5.436564, 1e-6);
  EXPECT_NEAR(area_closed_form(H2Set::ball(z, 1.0)), 3.4122762652849, 1e-12);
  EXPECT_EQ(area_closed_form(H2Set::half_ball(z, 2.5)), 0.5 * area_closed_form(H2Set::ball(z, 2.5)));
  EXPECT_NEAR(area_closed_form(H2Set::trigonon(z, 1.0)), 2.667178811150786, 1e-12);
  EXPECT_THROW(area_closed_form(H2Set::half_plane(z)), std::domain_error);
}

TEST(Hyp2Area, TrigononMatchesQuadrature) {
  for (double r : {0.5, 1.0, 2.0, 3.0}) {
    EXPECT_NEAR(area_closed_form(H2Set::trigonon(HPoint(0, 1), r)), trigonon_area_by_quadrature(r), 1e-8 * std::exp(r));
  }
}

TEST(Hyp2Markers, UnitCase) {
  const auto m = boundary_markers(HPoint(0, 1), 1.0);
  EXPECT_NEAR(m.euclid_center[1], std::cosh(1.0), 1e-15);
  EXPECT_NEAR(m.euclid_radius, 1.175201, 1e-6);
  EXPECT_NEAR(m.q_plus.x(), 0.761594, 1e-6);
  EXPECT_NEAR(m.q_minus.x(), -0.761594, 1e-6);
  EXPECT_NEAR(m.q_plus.y(), 0.648054, 1e-6);
}

TEST(Hyp2Markers, PointsLieOnBothCircles) {
  const HPoint z(1.2, 0.7);
  const double r = 1.8;
  const auto m = boundary_markers(z, r);
  for (const auto& q : {m.q_minus, m.q_plus}) {
    EXPECT_NEAR(std::hypot(q.x() - m.euclid_center[0], q.y() - m.euclid_center[1]), m.euclid_radius, 1e-12);
    EXPECT_NEAR(std::hypot(q.x() - z.x(), q.y()), z.y(), 1e-12);
  }
  for (const auto& p : {m.p_minus, m.p_plus}) {
    EXPECT_NEAR(p.y(), z.y() * std::exp(-r), 1e-15);
    EXPECT_NEAR(std::hypot(p.x() - z.x(), p.y()), z.y(), 1e-12);
  }
}

TEST(Hyp2Markers, SmallRadiusLimit) {
  const auto m = boundary_markers(HPoint(0, 1), 1e-8);
  EXPECT_LT(m.euclid_radius, 1e-7);
  EXPECT_NEAR(m.q_plus.x(), 0.0, 1e-7);
  EXPECT_NEAR(m.q_plus.y(), 1.0, 1e-12);
}

TEST(Hyp2Hull, Examples) {
  const auto h = admissible_hull_h2(H2Set::rectangle(HPoint(0, 0.9), 1.5));
  EXPECT_EQ(h.log_height(), 0);
  EXPECT_EQ(h.radius(), 4.0);
  EXPECT_NEAR(area_closed_form(h) / area_closed_form(H2Set::rectangle(HPoint(0, 0.9), 1.5)), std::exp(2.5), 1e-12);
  const auto h2 = admissible_hull_h2(H2Set::rectangle(HPoint(0, 1), 2.0));
  EXPECT_EQ(h2.log_height(), 0);
  EXPECT_EQ(h2.radius(), 4.0);
}

TEST(Hyp2Hull, RandomBatchContainsAndRatioBounded) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(-5, 5), ul(-4, 4), ur(1.0001, 6);
  for (int i = 0; i < 10000; ++i) {
    const auto q = H2Set::rectangle(HPoint(ux(rng), std::exp(ul(rng))), ur(rng));
    const auto h = admissible_hull_h2(q);
    ASSERT_TRUE(rectangle_encloses(h, q));
    const double ratio = area_closed_form(h) / area_closed_form(q);
    ASSERT_GE(ratio, std::exp(2.0) * (1 - 1e-12));
    ASSERT_LE(ratio, std::exp(3.0));
  }
}

TEST(Hyp2Isometry, Examples) {
  const HPoint w(0.3, 0.8);
  EXPECT_EQ(apply_affine_isometry(HPoint(0, 1), w), w);
  EXPECT_EQ(apply_affine_isometry(HPoint(2, 3), HPoint(0, 1)), HPoint(2, 3));
}

TEST(Hyp2Isometry, AdmissibleRectangleStaysAdmissibleOnIntegerShift) {
  const auto q = H2Set::admissible_rectangle(0.5, 1, 3);
  const auto img = apply_affine_isometry(HPoint(1.0, std::exp(2.0)), q);
  EXPECT_EQ(img.kind(), SetKind::AdmissibleRectangle);
  EXPECT_EQ(img.log_height(), 3);
  EXPECT_EQ(apply_affine_isometry(HPoint(0, 2.0), q).kind(), SetKind::Rectangle);
}

TEST(Hyp2Sets, Validation) {
  EXPECT_THROW(H2Set::ball(HPoint(0, 1), 0.0), std::invalid_argument);
  EXPECT_THROW(H2Set::admissible_rectangle(0, 0, 1), std::invalid_argument);
  EXPECT_THROW(H2Set::modified_half_ball(HPoint(0, 1), 0.5), std::invalid_argument);
  EXPECT_THROW(admissible_hull_h2(H2Set::rectangle(HPoint(0, 1), 1.0)), std::invalid_argument);
  EXPECT_EQ(set_kind_from_string("half_ball"), SetKind::HalfBall);
  EXPECT_THROW(set_kind_from_string("disc"), std::invalid_argument);
}
