#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "halfball/maxop.hpp"

using namespace halfball;
using namespace halfball::maxop;
using hyp2::H2Set;
using hyp2::HPoint;
using measure::Window;

namespace {

measure::SampleGrid small_grid(int n = 16) {
  return measure::build_grid(measure::Space::h2(), Window{{-2}, {2}, -2.5, 1}, {n});
}

FamilySpec half_balls(const measure::SampleGrid& g) {
  return FamilySpec{FamilyKind::HalfBalls, grid_centers(g, 2), grid_heights(g, 2), geometric_ladder(1.0, 3)};
}

// Independent brute force: loops over the lattice directly with hyp2 membership.
double brute_force(const measure::SampleGrid& g, const double* coord, const FamilySpec& fam) {
  const HPoint x(coord[0], std::exp(coord[1]));
  double best = 0.0;
  for (const auto& c : fam.centers_h) {
    for (double u : fam.center_u) {
      for (double r : fam.radii) {
        const auto s = H2Set::half_ball(HPoint(c[0], std::exp(u)), r);
        if (!hyp2::contains_h2(s, x)) continue;
        double sum = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
          const HPoint w(g.point(i)[0], std::exp(g.u(i)));
          if (hyp2::contains_h2(s, w)) sum += g.weights[i] * std::abs(g.values[i]);
        }
        best = std::max(best, sum / hyp2::area_closed_form(s));
      }
    }
  }
  return best;
}

}  // namespace

TEST(Family, KindsRoundTrip) {
  for (auto k : {FamilyKind::Balls, FamilyKind::HalfBalls, FamilyKind::Trigona, FamilyKind::Rectangles,
                 FamilyKind::AdmissibleRectangles, FamilyKind::ModifiedHalfBalls, FamilyKind::Cylinders,
                 FamilyKind::AdmissibleCylinders}) {
    EXPECT_EQ(family_kind_from_string(to_string(k)), k);
  }
  EXPECT_TRUE(is_admissible(FamilyKind::AdmissibleCylinders));
  EXPECT_FALSE(is_admissible(FamilyKind::Trigona));
}

TEST(Family, Validation) {
  const auto g = small_grid(4);
  FamilySpec bad{FamilyKind::AdmissibleRectangles, grid_centers(g, 1), {0.5}, {2}};
  EXPECT_THROW(bad.validate(g.space), std::invalid_argument);
  FamilySpec bad_r{FamilyKind::AdmissibleRectangles, grid_centers(g, 1), {0}, {1}};
  EXPECT_THROW(bad_r.validate(g.space), std::invalid_argument);
  FamilySpec wrong_space{FamilyKind::HalfBalls, {{0, 0, 0}}, {0}, {1}};
  EXPECT_THROW(wrong_space.validate(measure::Space::parse("heisenberg:1")), std::invalid_argument);
}

TEST(Ladders, Values) {
  const auto l = geometric_ladder(1.0, 3);
  ASSERT_EQ(l.size(), 3u);
  EXPECT_NEAR(l[2], 1 + 2 * std::log(2.0), 1e-15);
  EXPECT_EQ(integer_ladder(2, 4), (std::vector<double>{2, 3, 4}));
  EXPECT_EQ(integer_heights(-1, 1), (std::vector<double>{-1, 0, 1}));
}

TEST(MaximalFn, ZeroFunction) {
  const auto g = small_grid(8);
  const double x[2] = {0, 0};
  EXPECT_EQ(maximal_fn(g, x, half_balls(g)).value, 0.0);
  for (double v : maximal_on_grid(g, half_balls(g))) EXPECT_EQ(v, 0.0);
}

TEST(MaximalFn, IndicatorOfMemberGivesOne) {
  auto g = small_grid(16);
  FamilySpec fam{FamilyKind::AdmissibleRectangles, grid_centers(g, 1), {0}, {2}};
  const auto q = H2Set::admissible_rectangle(fam.centers_h[5][0], 0, 2);
  measure::set_values(g, [&](const double* c) { return hyp2::contains_h2(q, HPoint(c[0], std::exp(c[1]))) ? 1.0 : 0.0; });
  const double x[2] = {q.center().x(), 0.0};
  const auto r = maximal_fn(g, x, fam);
  EXPECT_LE(r.value, 1.0 + 1e-12);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_LE(member_measure(g.space, *r.witness, 0.0), hyp2::area_closed_form(q) + 1e-12);
}

TEST(MaximalFn, SmallBallAgainstBruteForce) {
  auto g = small_grid(24);
  const auto ball = H2Set::ball(HPoint(0, 1), 0.3);
  measure::set_values(g, [&](const double* c) { return hyp2::contains_h2(ball, HPoint(c[0], std::exp(c[1]))) ? 1.0 : 0.0; });
  const auto fam = half_balls(g);
  const double x[2] = {0.0, -2.0};
  EXPECT_NEAR(maximal_fn(g, x, fam).value, brute_force(g, x, fam), 1e-12);
}

TEST(MaximalFn, GridEvaluationMatchesPointwiseOracle) {
  auto g = small_grid(12);
  measure::set_values(g, [](const double* c) { return std::abs(c[0]) < 0.7 && c[1] > -1 && c[1] < 0 ? 2.0 : 0.0; });
  for (const auto& fam : {half_balls(g),
                          FamilySpec{FamilyKind::Trigona, grid_centers(g, 3), grid_heights(g, 3), {1.0, 2.5}},
                          FamilySpec{FamilyKind::AdmissibleRectangles, grid_centers(g, 2), {-1, 0, 1}, {2, 3}}}) {
    std::vector<std::int64_t> witness;
    const auto nf = maximal_on_grid(g, fam, &witness);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto r = maximal_fn(g, g.point(i), fam);
      EXPECT_NEAR(nf[i], r.value, 1e-12 * (1 + r.value));
      EXPECT_EQ(witness[i] >= 0, r.witness.has_value());
    }
  }
}

TEST(MaximalFn, HalfBallOracleOnWholeGrid) {
  auto g = small_grid(10);
  measure::set_values(g, [](const double* c) { return std::exp(-c[0] * c[0]) * (c[1] < 0 ? 1.0 : 0.5); });
  const auto fam = half_balls(g);
  const auto nf = maximal_on_grid(g, fam);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(nf[i], brute_force(g, g.point(i), fam), 1e-12);
}

TEST(LevelSet, Limits) {
  auto g = small_grid(16);
  measure::set_values(g, [](const double* c) { return std::abs(c[0]) < 0.5 && std::abs(c[1]) < 0.5 ? 1.0 : 0.0; });
  FamilySpec fam{FamilyKind::Rectangles, grid_centers(g, 1), grid_heights(g, 1), {6.0}};
  EXPECT_EQ(level_set_measure(g, fam, 1.5), 0.0);
  EXPECT_NEAR(level_set_measure(g, fam, 1e-12), g.total_weight(), 1e-12);
}

TEST(LLogL, ZeroAndPositive) {
  auto g = small_grid(8);
  EXPECT_EQ(llogl_rhs(g, 0.5, 0.1), 0.0);
  measure::set_values(g, [](const double*) { return 1.0; });
  const double w = g.total_weight();
  EXPECT_NEAR(llogl_rhs(g, 1.0, 1.0), w * std::log(2.0), 1e-12 * w);
  EXPECT_THROW(llogl_rhs(g, 0.0, 1.0), std::invalid_argument);
}

TEST(LambdaStar, Value) {
  const double e = std::numbers::e;
  EXPECT_NEAR(lambda_star(1.0), 0.25 * (e - 1) * (std::sqrt(e) - 1) / (e * e), 1e-16);
  EXPECT_NEAR(lambda_star(1.0), 0.03772, 1e-5);
}

TEST(Young, Inequality) {
  EXPECT_NEAR(young_check(1e-300, 1.0, 1.0).margin, 2 + 2 * std::log(2.0), 1e-12);
  Rng rng(3);
  for (int i = 0; i < 20000; ++i) {
    const double a = std::exp(rng.uniform(-8, 5)), b = std::exp(rng.uniform(-8, 8));
    EXPECT_TRUE(young_check(a, b, lambda_star(1.0)).holds) << a << " " << b;
  }
}

TEST(Norms, RectangleIndicator) {
  auto g = measure::build_grid(measure::Space::h2(), Window{{-1.5}, {1.5}, -1, 9}, {300, 1000});
  const auto q = H2Set::rectangle(HPoint(0, 1), 1.0);
  measure::set_values(g, [&](const double* c) { return hyp2::contains_h2(q, HPoint(c[0], std::exp(c[1]))) ? 1.0 : 0.0; });
  EXPECT_NEAR(lp_norm(g, 1.0) / (2 * std::numbers::e), 1.0, 0.01);
  EXPECT_EQ(lp_norm(g, std::numeric_limits<double>::infinity()), 1.0);
  EXPECT_NEAR(lp_norm(g, 2.0), std::sqrt(lp_norm(g, 1.0)), 1e-12);
}

TEST(Compare, Constants) {
  EXPECT_NEAR(compare_k1(), 1.5633, 1e-3);
  EXPECT_GT(compare_k1(), 4 / std::numbers::pi);
  EXPECT_GT(compare_k2(), 1.0);
  EXPECT_GT(compare_k3(), std::exp(3.0));
}

TEST(Compare, OperatorsDominateEachOther) {
  auto g = small_grid(12);
  measure::set_values(g, [](const double* c) { return std::abs(c[0]) < 0.5 && c[1] > -1 && c[1] < 0 ? 1.0 : 0.0; });
  const auto rep = operator_compare(g);
  EXPECT_TRUE(rep.all_pass());
}

TEST(LevelSetTable, BoundHoldsForIndicator) {
  auto g = measure::build_grid(measure::Space::h2(), Window{{-2}, {2}, -2, 1}, {24});
  measure::set_values(g, [](const double* c) { return std::abs(c[0]) < 0.5 && std::abs(c[1]) < 0.5 ? 1.0 : 0.0; });
  const auto fam = admissible_rectangles_for(g, 4);
  std::vector<double> alphas;
  for (int m = 3; m <= 10; ++m) alphas.push_back(std::ldexp(1.0, -m));
  const auto rep = levelset_table(g, fam, alphas, lambda_star(1.0));
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(rep.table("levelset").rows.size(), 8u);
}
