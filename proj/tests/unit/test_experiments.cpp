#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "halfball/experiments.hpp"

using namespace halfball;
using namespace halfball::experiments;
using hyp2::H2Set;
using hyp2::HPoint;

namespace {

htype::NPoint line(double z) { return {htype::Vec(0), htype::Vec::Constant(1, z)}; }

double measure_in(const std::vector<std::pair<int, double>>& v, int k) {
  for (const auto& [kk, m] : v) {
    if (kk == k) return m;
  }
  return 0.0;
}

}  // namespace

TEST(Vitali, SingleAndDuplicate) {
  const Space h2 = Space::h2();
  const AdmissibleCylinder c(line(0.0), 0, 3);
  const auto one = vitali_select(h2, {c});
  EXPECT_EQ(one.selected.size(), 1u);
  EXPECT_DOUBLE_EQ(one.union_ratio, 1.0);
  const auto two = vitali_select(h2, {c, c});
  EXPECT_EQ(two.selected.size(), 1u);
  EXPECT_DOUBLE_EQ(two.union_ratio, 1.0);
  EXPECT_THROW(vitali_select(h2, {c, AdmissibleCylinder(line(0.0), 1, 3)}), std::invalid_argument);
}

TEST(Vitali, RandomFamiliesWithinBound) {
  for (const char* id : {"h2", "dr-abelian:2", "dr-heisenberg:1"}) {
    const auto rep = vitali_experiment(Space::parse(id), 10, 30, 50000, 3);
    EXPECT_TRUE(rep.all_pass()) << id;
  }
}

TEST(Vitali, MonteCarloUnionAgreesWithExactOnLine) {
  const auto alg = htype::HTypeAlgebra::degenerate_abelian(1);
  const std::vector<htype::NPoint> c{line(0.0), line(1.0), line(5.0)};
  const std::vector<double> r{1.0, 1.0, 0.5};
  // (−1, 2) ∪ (4.75, 5.25)
  EXPECT_NEAR(union_n_measure(alg, c, r, 0, 1).mean, 3.5, 1e-12);
}

TEST(Maximal, NestedGeneratorCollapses) {
  const Space h2 = Space::h2();
  std::vector<AdmissibleCylinder> nested;
  for (int r = 2; r <= 6; ++r) nested.emplace_back(line(0.0), 2, r);
  const auto fam = prune_to_maximal(h2, nested);
  EXPECT_EQ(fam.cylinders.size(), 1u);
  EXPECT_EQ(fam.cylinders.front().radius(), 6);
}

TEST(Maximal, GeneratedFamiliesSatisfyInvariants) {
  for (const char* id : {"h2", "dr-abelian:2", "dr-heisenberg:1"}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto fam = build_maximal_family(Space::parse(id), {}, seed);
      EXPECT_TRUE(verify_maximal_family(fam).ok()) << id << " seed " << seed;
      EXPECT_FALSE(fam.cylinders.empty());
    }
  }
}

TEST(Overlap, DisjointFamily) {
  MaximalFamily fam{Space::h2(), {AdmissibleCylinder(line(-10), 0, 2), AdmissibleCylinder(line(10), 0, 2)}};
  const auto p = overlap_profile_exact(fam);
  EXPECT_EQ(p.max_omega, 1);
  EXPECT_NEAR(measure_in(p.omega_k, 1), p.g_measure, 1e-12);
  EXPECT_NEAR(p.g_measure, 4 * std::exp(2.0), 1e-9);
  EXPECT_EQ(measure_in(p.omega_k, 3), 0.0);
  EXPECT_TRUE(overlap_report(p, "disjoint").all_pass());
}

TEST(Overlap, StackedChainReachesLength) {
  for (const char* id : {"h2", "dr-abelian:1"}) {
    const auto chain = stacked_chain(Space::parse(id), 8);
    EXPECT_EQ(chain.cylinders.size(), 8u);
    const auto p = overlap_profile_exact(chain);
    EXPECT_EQ(p.max_omega, 8);
    EXPECT_TRUE(overlap_report(p, "chain").all_pass());
  }
  const auto mc = overlap_profile_mc(stacked_chain(Space::parse("dr-heisenberg:1"), 8), 100000, 4);
  EXPECT_EQ(mc.max_omega, 8);
  EXPECT_TRUE(overlap_report(mc, "chain").all_pass());
}

TEST(Overlap, GridProfileApproximatesExact) {
  const auto fam = build_maximal_family(Space::h2(), {}, 2);
  const auto exact = overlap_profile_exact(fam);
  const auto g = measure::build_grid(Space::h2(), measure::Window{{-12}, {12}, -8, 9}, {400, 400});
  const auto approx = overlap_profile(fam, g);
  EXPECT_NEAR(approx.g_measure / exact.g_measure, 1.0, 0.05);
}

TEST(Overlap, ExperimentPasses) {
  EXPECT_TRUE(overlap_experiment(Space::h2(), 20, 8, 0, 1).all_pass());
  EXPECT_TRUE(overlap_experiment(Space::parse("dr-heisenberg:1"), 4, 8, 50000, 1).all_pass());
}

TEST(Overlap, ArConstant) {
  // Σ k e^{-k} = e / (e - 1)^2
  const double e = std::numbers::e;
  EXPECT_NEAR(overlap_a_r_power(1.0, 1.0), e * e / (e - 1) * e / ((e - 1) * (e - 1)), 1e-12);
}

TEST(Eta, ChainRadiusAndKappa) {
  EXPECT_LE(eta_chain_radius(std::ldexp(1.0, -6)), 2);
  EXPECT_EQ(eta_chain_radius(std::ldexp(1.0, -9)), 3);
  const double e = std::numbers::e;
  EXPECT_NEAR(eta_kappa(), 2 * (std::sqrt(e - 1) - 1) / e * (1 - 1 / e), 1e-14);
}

TEST(Eta, TrigononDifference) {
  const auto t = H2Set::trigonon(HPoint(0, 1), 2.0);
  EXPECT_NEAR(trigonon_difference_area(t, t), 0.0, 1e-10);
  const auto far = H2Set::trigonon(HPoint(10, 1), 2.0);
  EXPECT_NEAR(trigonon_difference_area(t, far), hyp2::area_closed_form(t), 1e-8);
  const auto big = H2Set::trigonon(HPoint(0, 1), 3.0);
  EXPECT_NEAR(trigonon_difference_area(big, t), hyp2::area_closed_form(big) - hyp2::area_closed_form(t), 1e-8);
}

TEST(Eta, LevelWitnessesInRange) {
  EtaOptions opts;
  opts.horizontal_lattice = 16;
  const auto lv = eta_level(std::ldexp(1.0, -8), opts);
  EXPECT_GT(lv.witnesses, 0);
  EXPECT_LT(lv.witness_area, std::ldexp(1.0, 8));
  EXPECT_GT(lv.e_measure, lv.witness_area);
}

TEST(Packing, FirstLevels) {
  const auto lv = packing_construct(1, 500, 2);
  ASSERT_EQ(lv.size(), 2u);
  EXPECT_NEAR(lv[0].rho, 0.560350, 1e-6);
  EXPECT_EQ(lv[0].n_count, 2);
  EXPECT_NEAR(lv[1].rho, 0.260934, 1e-6);
  EXPECT_EQ(lv[1].n_count, 4);
  for (const auto& l : lv) {
    EXPECT_EQ(l.disjointness_violations, 0);
    EXPECT_NEAR(l.e_measure, l.n_count * 2 * std::numbers::pi * std::pow(std::sinh(l.radius / 2), 2),
                1e-9 * l.e_measure);
  }
  EXPECT_TRUE(packing_report(packing_construct(4, 300, 3)).all_pass());
}

TEST(Packing, SatelliteRegion) {
  const auto est = satellite_intersection_measure(200000, 3);
  EXPECT_GT(est.mean, 0.0);
  EXPECT_LT(2.0, 2 * std::sinh(1.0));
}

TEST(Packing, LpSumTrends) {
  LpSumOptions opts;
  opts.region_samples = 200000;
  opts.points_per_level = 20;
  for (double p : {1.0, 2.0, 3.0}) EXPECT_TRUE(modified_lp_sums(p, 4, opts).all_pass()) << p;
}

TEST(LevelSetSuite, TestFunctions) {
  EXPECT_EQ(levelset_function_names().size(), 5u);
  EXPECT_THROW(levelset_function("nope", 2), std::invalid_argument);
  const double c[2] = {0.0, -0.5};
  EXPECT_EQ(levelset_function("inverse_height", 2)(c), std::exp(0.5));
  const double low[2] = {0.0, -3.0};
  EXPECT_EQ(levelset_function("inverse_height", 2)(low), 4.0);
}
