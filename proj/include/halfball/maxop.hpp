#pragma once

// Uncentred maximal operators over finite lattices of family members, with
// grid numerators and closed-form denominators. Values are lower bounds of
// the continuum operator.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "halfball/measure.hpp"
#include "halfball/report.hpp"

namespace halfball::maxop {

using measure::SampleGrid;
using measure::SetDescriptor;

enum class FamilyKind {
  Balls,
  HalfBalls,
  Trigona,
  Rectangles,
  AdmissibleRectangles,
  ModifiedHalfBalls,
  Cylinders,
  AdmissibleCylinders,
};

std::string_view to_string(FamilyKind kind);
FamilyKind family_kind_from_string(std::string_view name);
bool is_admissible(FamilyKind kind);

/// Product lattice: every horizontal centre, every log-height, every radius.
/// For admissible kinds the log-heights and radii must be integers (radii >= 2).
struct FamilySpec {
  FamilyKind kind = FamilyKind::HalfBalls;
  std::vector<std::vector<double>> centers_h;
  std::vector<double> center_u;
  std::vector<double> radii;
  /// ω for cylinder denominators on non-degenerate algebras.
  double omega = 0.0;

  std::size_t size() const { return centers_h.size() * center_u.size() * radii.size(); }
  /// Throws std::invalid_argument if the lattice breaks the kind's rules.
  void validate(const measure::Space& space) const;
};

/// Radii r_min + k log 2, k = 0..rungs-1.
std::vector<double> geometric_ladder(double r_min, int rungs);
/// Integer radii k_lo..k_hi.
std::vector<double> integer_ladder(int k_lo, int k_hi);
/// Horizontal cell centres of a structured grid, every `stride`-th per axis.
std::vector<std::vector<double>> grid_centers(const SampleGrid& g, int stride);
/// Log-heights of the grid's cell centres, every `stride`-th.
std::vector<double> grid_heights(const SampleGrid& g, int stride);
/// Integers j_lo..j_hi as log-heights.
std::vector<double> integer_heights(int j_lo, int j_hi);

SetDescriptor make_member(const measure::Space& space, FamilyKind kind, const std::vector<double>& center_h,
                          double center_u, double radius);
std::vector<SetDescriptor> members(const measure::Space& space, const FamilySpec& fam);

/// Closed-form measure of a family member.
double member_measure(const measure::Space& space, const SetDescriptor& s, double omega);

struct MaxResult {
  double value = 0.0;
  std::optional<SetDescriptor> witness;  // empty when no member contains the point
};

/// Supremum of (1/|F|) Σ_{cells in F} w|f| over members F containing the
/// point with coordinates `coord`.
MaxResult maximal_fn(const SampleGrid& g, const double* coord, const FamilySpec& fam);

/// The operator at every grid point. witness_index, if given, receives the
/// member index achieving the value (-1 when none contains the point).
std::vector<double> maximal_on_grid(const SampleGrid& g, const FamilySpec& fam,
                                    std::vector<std::int64_t>* witness_index = nullptr);

/// Σ weights over points with N f > alpha.
double level_set_measure(const SampleGrid& g, const FamilySpec& fam, double alpha);
double level_set_measure(const SampleGrid& g, const std::vector<double>& maximal, double alpha);

/// Σ w (|f|/α) log(1 + |f|/(αλ)).
double llogl_rhs(const SampleGrid& g, double alpha, double lambda);
/// (1/4)(e^ν - 1)(√e - 1)/e^{2ν}
double lambda_star(double nu);

struct YoungResult {
  bool holds = false;
  double margin = 0.0;  // 2λ e^{a/2} + 2b log(b/λ + 1) - ab
};
YoungResult young_check(double a, double b, double lambda);

/// (Σ w |f|^p)^{1/p}; p = +inf gives max |f|.
double lp_norm(const SampleGrid& g, double p);
double lp_norm(const SampleGrid& g, const std::vector<double>& values, double p);

/// sup_{R>=1} |T_R| / |b_R|
double compare_k1();
/// sup_{R>=1} |b_{R+log 2}| / |T_R|
double compare_k2();
/// e^3 sup_{R>=1} 2e^R / |b_R|
double compare_k3();

/// Level-set table over an α ladder: |{N f > α}| against 4 llogl_rhs(f, α, λ)
/// with a relative grid tolerance.
ExperimentReport levelset_table(const SampleGrid& g, const FamilySpec& fam, const std::vector<double>& alphas,
                                double lambda, double tolerance = 0.02);

/// Admissible-rectangle lattice covering a structured H grid: every grid
/// column, integer log-heights from floor(u_lo) - 1 to ceil(u_hi) + 1, radii
/// 2..k_max.
FamilySpec admissible_rectangles_for(const SampleGrid& g, int k_max, int center_stride = 1);

struct CompareOptions {
  int center_stride = 2;
  double r_min = 1.0;
  int rungs = 6;
};

/// Pointwise comparison of the half-ball, trigonon and admissible-rectangle
/// operators on an H grid.
ExperimentReport operator_compare(const SampleGrid& g, const CompareOptions& opts = {});

}  // namespace halfball::maxop
