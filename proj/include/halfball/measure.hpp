#pragma once

// Riemannian-measure grids and Monte Carlo volumes. All coordinates are
// (horizontal..., u) with u = log(height); the measure is e^{-νu} du times
// Lebesgue measure in the horizontal coordinates.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "halfball/drsets.hpp"
#include "halfball/estimate.hpp"
#include "halfball/htype.hpp"
#include "halfball/hyp2.hpp"

namespace halfball::measure {

class Space {
 public:
  static Space h2();
  static Space damek_ricci(const htype::HTypeAlgebra& alg);
  /// "h2", "dr-abelian:q", "dr-heisenberg:d" (also "heisenberg:d", "abelian:q").
  static Space parse(const std::string& id);

  bool is_h2() const { return !alg_.has_value(); }
  const htype::HTypeAlgebra& algebra() const;
  double nu() const;
  /// Number of horizontal coordinates: 1 on H, p + q on S.
  int horizontal_dim() const;
  std::string name() const;

 private:
  std::optional<htype::HTypeAlgebra> alg_;
};

/// Horizontal box times a log-height interval. u_hi may be +inf for Monte
/// Carlo boxes; grids need finite windows.
struct Window {
  std::vector<double> lo;
  std::vector<double> hi;
  double u_lo = 0.0;
  double u_hi = 0.0;

  /// Measure of the window: prod(hi - lo) (e^{-ν u_lo} - e^{-ν u_hi}) / ν.
  double measure(double nu) const;
};

using SetDescriptor = std::variant<hyp2::H2Set, drsets::Cylinder, drsets::AdmissibleCylinder>;

std::string describe(const SetDescriptor& s);

/// A finite point set with measure weights and attached values. Structured
/// grids keep their per-axis resolution in `shape`; random clouds leave it
/// empty.
struct SampleGrid {
  Space space = Space::h2();
  Window window;
  std::vector<int> shape;
  int dim = 0;                  // coordinates per point (horizontal + 1)
  std::vector<double> coords;   // size() * dim, u last
  std::vector<double> weights;
  std::vector<double> values;

  std::size_t size() const { return weights.size(); }
  const double* point(std::size_t i) const { return coords.data() + i * static_cast<std::size_t>(dim); }
  double u(std::size_t i) const { return point(i)[dim - 1]; }
  hyp2::HPoint hpoint(std::size_t i) const;
  htype::SPoint spoint(std::size_t i) const;
  /// Flat index of a structured-grid cell; the last axis varies fastest.
  std::size_t index(const std::vector<int>& cell) const;
  double total_weight() const;
};

/// Uniform lattice of cell centres with exact per-cell measures. resolution
/// gives one count per axis (horizontal..., u), or a single count used for
/// all axes.
SampleGrid build_grid(const Space& space, const Window& window, const std::vector<int>& resolution);

/// `count` points drawn from the normalised measure on a finite window, each
/// weighted window.measure / count.
SampleGrid random_cloud(const Space& space, const Window& window, std::int64_t count, std::uint64_t seed);

/// Fills values with f evaluated at each point's coordinates.
void set_values(SampleGrid& g, const std::function<double(const double*)>& f);

/// Strict membership of the point with coordinates `coord` (u last). H2 sets
/// and cylinders are interchangeable between H and dr-abelian:1 through
/// (x, y) <-> (Z, a).
bool contains_point(const Space& space, const SetDescriptor& s, const double* coord);

/// Coordinate bounding box of a set (u_hi may be +inf).
Window set_box(const Space& space, const SetDescriptor& s);

struct IntegralResult {
  double value = 0.0;
  bool truncated = false;  // the set leaves the grid window
};

IntegralResult integrate_set(const SampleGrid& g, const SetDescriptor& s);

/// Hit-or-miss estimate of |s| with horizontal coordinates uniform on the box
/// and u drawn from the density proportional to e^{-νu}.
VolumeEstimate mc_volume(const Space& space, const SetDescriptor& s, const Window& box, std::int64_t samples,
                         std::uint64_t seed);

/// mc_volume over set_box(space, s).
VolumeEstimate mc_volume(const Space& space, const SetDescriptor& s, std::int64_t samples, std::uint64_t seed);

/// Volume of a union of sets by hit-or-miss over a common box.
VolumeEstimate mc_union_volume(const Space& space, const std::vector<SetDescriptor>& sets, const Window& box,
                               std::int64_t samples, std::uint64_t seed);

/// Hit-or-miss volume of {x in box : inside(x)} for an arbitrary predicate.
VolumeEstimate mc_predicate_volume(const Space& space, const Window& box, std::int64_t samples, std::uint64_t seed,
                                   const std::function<bool(const double*)>& inside);

/// Box enclosing all sets in the list.
Window union_box(const Space& space, const std::vector<SetDescriptor>& sets);

}  // namespace halfball::measure
