#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "halfball/measure.hpp"

using namespace halfball;
using namespace halfball::measure;
using hyp2::H2Set;
using hyp2::HPoint;

namespace {

Window h2_window(double x0, double x1, double u0, double u1) { return Window{{x0}, {x1}, u0, u1}; }

}  // namespace

TEST(Space, Parse) {
  EXPECT_TRUE(Space::parse("h2").is_h2());
  EXPECT_EQ(Space::parse("dr-heisenberg:1").nu(), 2.0);
  EXPECT_EQ(Space::parse("heisenberg:2").horizontal_dim(), 5);
  EXPECT_EQ(Space::parse("abelian:3").nu(), 3.0);
  EXPECT_EQ(Space::parse("dr-abelian:2").name(), "dr-abelian:2");
  EXPECT_THROW(Space::parse("sphere"), std::invalid_argument);
  EXPECT_THROW(Space::h2().algebra(), std::logic_error);
}

TEST(Grid, WeightsSumToWindowMeasure) {
  const auto g = build_grid(Space::h2(), h2_window(-1, 1, -1, 1), {37, 23});
  EXPECT_NEAR(g.total_weight(), 2 * (std::numbers::e - 1 / std::numbers::e), 1e-12);
  EXPECT_EQ(g.size(), 37u * 23u);
  EXPECT_EQ(g.index({1, 0}), 23u);
}

TEST(Grid, SingleCell) {
  const Window w = h2_window(0, 0.5, 0, 2);
  const auto g = build_grid(Space::h2(), w, {1});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_NEAR(g.weights[0], w.measure(1.0), 1e-15);
}

TEST(Grid, HigherDimensionalWindow) {
  const Space s = Space::parse("dr-heisenberg:1");
  const Window w{{-1, -1, -1}, {1, 1, 1}, -0.5, 0.5};
  const auto g = build_grid(s, w, {3});
  EXPECT_EQ(g.size(), 81u);
  EXPECT_NEAR(g.total_weight(), 8.0 * (std::exp(1.0) - std::exp(-1.0)) / 2.0, 1e-12);
  EXPECT_THROW(build_grid(s, h2_window(0, 1, 0, 1), {3}), std::invalid_argument);
}

TEST(Integrate, RectangleAndBall) {
  auto g = build_grid(Space::h2(), h2_window(-1.5, 1.5, -1, 9), {300, 1000});
  set_values(g, [](const double*) { return 1.0; });
  const auto q = integrate_set(g, H2Set::rectangle(HPoint(0, 1), 1.0));
  EXPECT_NEAR(q.value / (2 * std::numbers::e), 1.0, 0.01);
  EXPECT_TRUE(q.truncated);

  auto gb = build_grid(Space::h2(), h2_window(-1.2, 1.2, -1.01, 1.01), {400});
  set_values(gb, [](const double*) { return 1.0; });
  const auto b = integrate_set(gb, H2Set::ball(HPoint(0, 1), 1.0));
  const double exact = 4 * std::numbers::pi * std::pow(std::sinh(0.5), 2);
  EXPECT_NEAR(b.value / exact, 1.0, 0.01);
  EXPECT_FALSE(b.truncated);

  set_values(gb, [](const double*) { return 0.0; });
  EXPECT_EQ(integrate_set(gb, H2Set::ball(HPoint(0, 1), 1.0)).value, 0.0);
}

TEST(MonteCarlo, HalfBallArea) {
  const auto est = mc_volume(Space::h2(), H2Set::half_ball(HPoint(0, 1), 1.0), 400000, 5);
  EXPECT_NEAR(est.mean, 1.7063, 0.02);
  EXPECT_TRUE(est.covers(2 * std::numbers::pi * std::pow(std::sinh(0.5), 2)));
  const auto tiny = mc_volume(Space::h2(), H2Set::half_ball(HPoint(0, 1), 1e-9), 10000, 5);
  EXPECT_LT(tiny.mean, 1e-12);
}

TEST(MonteCarlo, AllFourFormulasWithinThreeSigma) {
  const HPoint z(0.3, 2.0);
  for (double r : {1.0, 2.0, 3.0}) {
    int stream = 0;
    for (const auto& s : {H2Set::ball(z, r), H2Set::half_ball(z, r), H2Set::trigonon(z, r), H2Set::rectangle(z, r)}) {
      const auto est = mc_volume(Space::h2(), s, 200000, 100 + stream++);
      EXPECT_TRUE(est.covers(hyp2::area_closed_form(s), 4.0)) << s.describe() << " " << est.mean;
    }
  }
}

TEST(MonteCarlo, DeterministicForSeed) {
  const auto s = H2Set::trigonon(HPoint(0, 1), 2.0);
  EXPECT_EQ(mc_volume(Space::h2(), s, 100000, 3).mean, mc_volume(Space::h2(), s, 100000, 3).mean);
  EXPECT_NE(mc_volume(Space::h2(), s, 100000, 3).mean, mc_volume(Space::h2(), s, 100000, 4).mean);
}

TEST(MonteCarlo, HeisenbergCylinder) {
  const Space s = Space::parse("dr-heisenberg:1");
  const auto& alg = s.algebra();
  const drsets::Cylinder c(htype::n_identity(alg), 1.0, 2.0);
  const double omega = 2 * std::numbers::pi * std::numbers::pi;
  const auto est = mc_volume(s, c, 400000, 8);
  EXPECT_TRUE(est.covers(omega / 2 * std::exp(4.0))) << est.mean << " ± " << est.stderr;
}

TEST(CrossBackend, AbelianLineReproducesH2) {
  const Space h2 = Space::h2();
  const Space line = Space::parse("dr-abelian:1");
  const HPoint z(0.5, 1.5);
  const drsets::Cylinder cyl({htype::Vec(0), htype::Vec::Constant(1, 0.5)}, 1.5, 2.0);
  const auto q = H2Set::rectangle(z, 2.0);
  Rng rng(3);
  for (int i = 0; i < 5000; ++i) {
    const double c[2] = {rng.uniform(-3, 4), rng.uniform(-2, 2)};
    EXPECT_EQ(contains_point(line, q, c), contains_point(h2, q, c));
    EXPECT_EQ(contains_point(line, cyl, c), contains_point(h2, q, c));
  }
  const auto a = mc_volume(line, cyl, 300000, 4);
  EXPECT_TRUE(a.covers(hyp2::area_closed_form(q)));
  const auto b = mc_volume(h2, q, 300000, 4);
  EXPECT_NEAR(a.mean, b.mean, 1e-12 * b.mean);
}

TEST(MonteCarlo, UnionOfDisjointSets) {
  const Space h2 = Space::h2();
  const std::vector<SetDescriptor> sets{H2Set::half_ball(HPoint(-3, 1), 1.0), H2Set::half_ball(HPoint(3, 1), 1.0)};
  const auto est = mc_union_volume(h2, sets, union_box(h2, sets), 400000, 6);
  EXPECT_TRUE(est.covers(2 * hyp2::area_closed_form(H2Set::half_ball(HPoint(0, 1), 1.0))));
}

TEST(RandomCloud, WeightsAndSupport) {
  const Window w = h2_window(-1, 1, -1, 1);
  const auto g = random_cloud(Space::h2(), w, 1000, 2);
  EXPECT_NEAR(g.total_weight(), w.measure(1.0), 1e-12);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_GE(g.u(i), -1.0);
    EXPECT_LE(g.u(i), 1.0);
  }
}
