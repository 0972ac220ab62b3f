#pragma once

// Covering and overlap machinery for admissible cylinders, the level-set
// growth construction with trigona through e = i, and the half-ball packing
// with its L^p sums.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halfball/drsets.hpp"
#include "halfball/estimate.hpp"
#include "halfball/measure.hpp"
#include "halfball/report.hpp"

namespace halfball::experiments {

using drsets::AdmissibleCylinder;
using measure::Space;

/// Algebra used for cylinder geometry; h2 maps to dr-abelian:1.
htype::HTypeAlgebra cylinder_algebra(const Space& space);

// ---------------------------------------------------------------- Vitali

struct VitaliResult {
  std::vector<std::size_t> selected;  // indices into the input family
  double union_ratio = 0.0;           // μ(∪ family) / μ(∪ selected)
  double ratio_stderr = 0.0;          // zero when both unions are exact
  double bound = 0.0;                 // 5^ν
  ExperimentReport report;
};

/// Greedy largest-first selection of pairwise disjoint members, ties broken
/// by lexicographic centre. All members must share one base level j - R
/// (std::invalid_argument otherwise). Union measures are exact on h2 and
/// dr-abelian:1, Monte Carlo (`samples`, `seed`) elsewhere.
VitaliResult vitali_select(const Space& space, const std::vector<AdmissibleCylinder>& family,
                           std::int64_t samples = 200000, std::uint64_t seed = 1);

/// Measure in N of a union of gauge balls; exact for dr-abelian:1.
VolumeEstimate union_n_measure(const htype::HTypeAlgebra& alg, const std::vector<htype::NPoint>& centers,
                               const std::vector<double>& radii, std::int64_t samples, std::uint64_t seed);

// ------------------------------------------------------- maximal families

struct MaximalFamily {
  Space space = Space::h2();
  std::vector<AdmissibleCylinder> cylinders;
};

struct GeneratorParams {
  int count = 40;
  int j_lo = -2;
  int j_hi = 2;
  int r_lo = 2;
  int r_hi = 5;
  double half_width = 4.0;  // centres uniform in [-w, w]^dim
};

std::vector<AdmissibleCylinder> random_cylinders(const Space& space, const GeneratorParams& params,
                                                 std::uint64_t seed);

/// Drops members contained in another (first occurrence kept among equals),
/// then applies vitali_select within each base level.
MaximalFamily prune_to_maximal(const Space& space, const std::vector<AdmissibleCylinder>& cylinders);

MaximalFamily build_maximal_family(const Space& space, const GeneratorParams& params, std::uint64_t seed);

/// m cylinders centred at e0 with R = 2 and j = 2 - k, k = 1..m. All contain e.
MaximalFamily stacked_chain(const Space& space, int m);

struct MaximalityCheck {
  std::int64_t same_level_overlaps = 0;
  std::int64_t containments = 0;
  bool ok() const { return same_level_overlaps == 0 && containments == 0; }
};

/// Exhaustive pair check of the maximal-family invariants.
MaximalityCheck verify_maximal_family(const MaximalFamily& fam);

/// `families` random same-horocycle families of up to `max_members`
/// cylinders, each run through vitali_select.
ExperimentReport vitali_experiment(const Space& space, int families, int max_members, std::int64_t samples,
                                   std::uint64_t seed);

// ---------------------------------------------------------------- overlap

struct OverlapProfile {
  std::vector<std::pair<int, double>> omega_k;  // (k, |Ω_k|) for k >= 1
  std::vector<double> omega_k_stderr;           // zero for exact profiles
  double g_measure = 0.0;
  double g_stderr = 0.0;
  double bound_constant = 0.0;  // e^{2ν} / (e^ν - 1)
  int max_omega = 0;
  double nu = 1.0;
  bool exact = false;
};

/// Ω counted at every grid point, measures from grid weights.
OverlapProfile overlap_profile(const MaximalFamily& fam, const measure::SampleGrid& grid);
/// Exact cell decomposition; needs h2 or dr-abelian:1.
OverlapProfile overlap_profile_exact(const MaximalFamily& fam);
/// Hit-or-miss over the union box with u unbounded above.
OverlapProfile overlap_profile_mc(const MaximalFamily& fam, std::int64_t samples, std::uint64_t seed);

/// A_r^r = (e^{2ν}/(e^ν - 1)) Σ_{k>=1} k^r e^{-k}
double overlap_a_r_power(double nu, double r);

/// Checks |Ω_k| <= C |G| e^{-k} for every k, Σ_k |Ω_k| = |G|, and
/// ‖Ω‖_r^r <= A_r^r |G| for r in {1, 2, 3}.
ExperimentReport overlap_report(const OverlapProfile& profile, const std::string& name);

/// Overlap checks over `families` generated maximal families plus a stacked
/// chain of length chain_m. Exact profiles on h2 / dr-abelian:1, Monte Carlo
/// with `samples` draws otherwise.
ExperimentReport overlap_experiment(const Space& space, int families, int chain_m, std::int64_t samples,
                                    std::uint64_t seed);

// ------------------------------------------------------------ level growth

struct EtaOptions {
  double radius_step = 0.125;  // R lattice and centre log-height lattice
  int horizontal_lattice = 48; // centres x = s sqrt(y^2 - 1), s in (-1, 1)
  int u_nodes_per_unit = 160;  // slice quadrature in log-height
  std::int64_t mc_samples = 400000;
  std::uint64_t seed = 7;
};

/// R_α = floor((1/ν) log(c_ν / (C_ν^2 e^ν α))) on H (ν = 1, ω = 2).
int eta_chain_radius(double alpha);
/// κ = ω((e-1)^{1/2} - 1) e^{-1} (1 - e^{-1}) on H.
double eta_kappa();

/// Measure of E_η(α) restricted to the trigona lattice, with witness areas.
struct EtaLevel {
  double alpha = 0.0;
  double radius = 0.0;  // lattice R of every witness
  double e_measure = 0.0;
  double witness_area = 0.0;
  std::int64_t witnesses = 0;
};
EtaLevel eta_level(double alpha, const EtaOptions& opts = {});

/// Runs the η level-set growth over the ladder: lattice measures and the
/// log-factor fit, plus the stacked trigona chain wherever R_α > 2 (other
/// ladder entries are reported as skipped).
ExperimentReport eta_level_growth(const std::vector<double>& alpha_ladder, const EtaOptions& opts = {});

/// |a \ b| for two trigona on H by Gauss-Kronrod over horizontal slices.
double trigonon_difference_area(const hyp2::H2Set& a, const hyp2::H2Set& b);

// ---------------------------------------------------------------- packing

struct PackingLevel {
  int level = 0;
  double rho = 0.0;
  std::int64_t n_count = 0;
  std::vector<double> centers;
  double height = 0.0;  // e^{-2^ℓ}
  double radius = 0.0;  // 2^ℓ
  double e_measure = 0.0;
  std::int64_t disjointness_violations = 0;
};

/// Levels 0..L of equally spaced half balls b_{2^ℓ}(x + i e^{-2^ℓ}), x in
/// [-1, 1]. Disjointness of neighbours is checked by sampling
/// `samples_per_ball` points of each half ball.
std::vector<PackingLevel> packing_construct(int max_level, std::int64_t samples_per_ball = 2000,
                                            std::uint64_t seed = 11);

/// Disjointness, |E_ℓ| and growth-rate assertions for a packing.
ExperimentReport packing_report(const std::vector<PackingLevel>& levels);

/// Monte Carlo |R| for R = B_1(-1 + i) ∩ B_1(1 + i).
VolumeEstimate satellite_intersection_measure(std::int64_t samples, std::uint64_t seed);

struct LpSumOptions {
  std::int64_t region_samples = 1000000;
  int points_per_level = 100;
  std::uint64_t seed = 13;
};

ExperimentReport modified_lp_sums(double p, int max_level, const LpSumOptions& opts = {});

// ------------------------------------------------------------- level sets

/// indicator, indicator_thin, indicator_sum, weighted_sum, inverse_height.
std::vector<std::string> levelset_function_names();
/// Test function on grid coordinates (first horizontal coordinate, ..., u).
std::function<double(const double*)> levelset_function(const std::string& name, int dim);

/// Level-set table for each named function on an H grid against the
/// admissible-rectangle operator with radii 2..k_max. Sub-reports are merged
/// under the function name.
ExperimentReport levelset_suite(const measure::Window& window, const std::vector<int>& resolution,
                                const std::vector<double>& alphas, const std::vector<std::string>& functions,
                                int k_max = 5);

}  // namespace halfball::experiments
