#pragma once

// Cylinders C_R(n0 a0) = B_{sqrt a0}(n0) x (a0 e^{-R}, inf) on a Damek-Ricci
// space, their slices and admissible hulls, trigonon volume bounds, and the
// annulus test used in the level-set growth construction.

#include <cstdint>
#include <vector>

#include "halfball/estimate.hpp"
#include "halfball/htype.hpp"
#include "halfball/random.hpp"
#include "halfball/report.hpp"

namespace halfball::drsets {

using htype::HTypeAlgebra;
using htype::NPoint;
using htype::SPoint;

class Cylinder {
 public:
  /// Requires a0 > 0 and R > 1.
  Cylinder(NPoint n0, double a0, double radius);

  const NPoint& n0() const { return n0_; }
  double a0() const { return a0_; }
  double radius() const { return radius_; }
  /// Gauge radius sqrt(a0) of the base ball.
  double base_radius() const;
  /// a0 e^{-R}
  double base_height() const;

 private:
  NPoint n0_;
  double a0_;
  double radius_;
};

/// Cylinder with a0 = e^j and integer R >= 2.
class AdmissibleCylinder {
 public:
  AdmissibleCylinder(NPoint n0, int log_height, int radius);

  const NPoint& n0() const { return n0_; }
  int log_height() const { return j_; }
  int radius() const { return radius_; }
  /// Integer log of the base height, j - R.
  int base_level() const { return j_ - radius_; }
  Cylinder to_cylinder() const;

 private:
  NPoint n0_;
  int j_;
  int radius_;
};

bool cylinder_contains(const HTypeAlgebra& alg, const Cylinder& c, const SPoint& x);
bool cylinder_contains(const HTypeAlgebra& alg, const AdmissibleCylinder& c, const SPoint& x);
/// Same test on raw coordinates (X_1..X_p, Z_1..Z_q, log a), without allocating.
bool cylinder_contains(const HTypeAlgebra& alg, const Cylinder& c, const double* coord);
bool cylinder_contains(const HTypeAlgebra& alg, const AdmissibleCylinder& c, const double* coord);

/// B_r1(c1) ⊂ B_r2(c2) for gauge balls in N. Exact on degenerate algebras
/// (where B_r(c) = {|Z - c| < r^2}); otherwise the metric sufficient
/// condition d(c1, c2) + r1 <= r2.
bool gauge_ball_encloses(const HTypeAlgebra& alg, const NPoint& c_out, double r_out, const NPoint& c_in,
                         double r_in);
/// B_r1(c1) ∩ B_r2(c2) = ∅. Exact on degenerate algebras; otherwise
/// d(c1, c2) >= r1 + r2.
bool gauge_balls_disjoint(const HTypeAlgebra& alg, const NPoint& c1, double r1, const NPoint& c2, double r2);

bool cylinder_encloses(const HTypeAlgebra& alg, const Cylinder& outer, const Cylinder& inner);
bool cylinders_disjoint(const HTypeAlgebra& alg, const Cylinder& c1, const Cylinder& c2);

enum class OmegaMethod { Analytic, MonteCarlo };

/// Measure ω of the unit gauge ball B_1(e0) in N. Analytic is only available
/// for degenerate algebras (the Euclidean unit q-ball); MonteCarlo samples
/// the box |X_i| <= 2, |Z_k| <= 1.
VolumeEstimate omega_n(const HTypeAlgebra& alg, OmegaMethod method, std::int64_t samples = 0,
                       std::uint64_t seed = 0);

/// (ω/ν) e^{νR}
double cylinder_volume(const HTypeAlgebra& alg, double radius, double omega);
/// |β_k| = e^{-kν} (1 - e^{-ν}) (ω/ν) e^{νR}
double slice_volume(const HTypeAlgebra& alg, double radius, int k, double omega);
/// Index k of the slice containing height a: k < log(a / base) <= k + 1.
/// Returns -1 below the base.
int slice_index(const Cylinder& c, double a);

/// j = ceil(log a0), K = ceil(R) + 2, same centre.
AdmissibleCylinder admissible_hull_cyl(const Cylinder& c);
/// e^{ν(K - R)}
double hull_volume_ratio(const HTypeAlgebra& alg, const Cylinder& c, const AdmissibleCylinder& hull);

/// Exponent of the gauge radius in the slice volume used by the sandwich
/// integrals: Nu integrates ω α^ν (the stated form), TwoNu integrates the
/// homogeneous gauge-ball volume ω α^{2ν}.
enum class SliceExponent { Nu, TwoNu };

struct SandwichVolume {
  double lower = 0.0;
  double upper = 0.0;
  double lower_error = 0.0;
  double upper_error = 0.0;
};

/// lower = ω ∫_{e^{-R}}^1 α_1(h)^m h^{-ν-1} dh, upper likewise with α_2, by
/// Gauss-Kronrod in u = log h. Throws std::runtime_error when the relative
/// error estimate exceeds 1e-8.
SandwichVolume trig_sandwich_volume(const HTypeAlgebra& alg, double radius, double omega,
                                    SliceExponent exponent = SliceExponent::Nu);

/// c_ν = (ω/ν)(1 - e^{-1/2})^{ν/2}(1 - e^{-ν/2})
double trig_lower_constant(double nu, double omega);
/// C_ν = ω/ν
double trig_upper_constant(double nu, double omega);

/// Points γ_v(τ) with v uniform on the lower unit hemisphere and τ uniform
/// in (0, R). Not uniform in Riemannian measure.
std::vector<SPoint> sample_halfball(const HTypeAlgebra& alg, double radius, std::int64_t count,
                                    std::uint64_t seed);

/// Uniform random direction in n, rescaled by dilation to gauge g.
NPoint random_n_with_gauge(const HTypeAlgebra& alg, double g, Rng& rng);

/// Samples n with 1 < G(n) < sqrt(e - 1) and checks G(n) > α_2(a) and
/// G(δ_{1/e} n) < α_1(a/e).
ExperimentReport gambas_check(const HTypeAlgebra& alg, double a, std::int64_t samples, std::uint64_t seed);

}  // namespace halfball::drsets
