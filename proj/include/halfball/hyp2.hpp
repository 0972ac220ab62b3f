#pragma once

// Exact geometry of the hyperbolic upper half-plane H = {x + iy : y > 0}
// with metric (dx^2 + dy^2) / y^2 and measure dx dy / y^2.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace halfball::hyp2 {

/// A point x + iy of the upper half-plane. Construction rejects y <= 0.
class HPoint {
 public:
  HPoint(double x, double y);

  double x() const { return x_; }
  double y() const { return y_; }

  friend bool operator==(const HPoint&, const HPoint&) = default;

 private:
  double x_;
  double y_;
};

enum class SetKind : std::uint8_t {
  Ball,
  HalfPlane,
  HalfBall,
  Trigonon,
  Rectangle,
  AdmissibleRectangle,
  ModifiedHalfBall,
};

std::string_view to_string(SetKind kind);
SetKind set_kind_from_string(std::string_view name);

/// One member of a set family on H, identified by its parameters.
///
/// All sets are open. The special half plane T(z) is the Euclidean disc of
/// radius Im z centred at Re z; every other kind is derived from it:
///
///   Ball                B_R(z)
///   HalfBall            b_R(z) = B_R(z) ∩ T(z)
///   Trigonon            T_R(z) = T(z) ∩ {Im w > e^{-R} Im z}
///   Rectangle           Q_R(z) = (Re z - Im z, Re z + Im z) x (e^{-R} Im z, inf)
///   AdmissibleRectangle Q_K(x + i e^j), j and K >= 2 integers
///   ModifiedHalfBall    b_R(z) ∪ B_1(Re z + i e^R Im z), R >= 1
class H2Set {
 public:
  static H2Set ball(HPoint center, double radius);
  static H2Set half_plane(HPoint center);
  static H2Set half_ball(HPoint center, double radius);
  static H2Set trigonon(HPoint center, double radius);
  static H2Set rectangle(HPoint center, double radius);
  static H2Set admissible_rectangle(double x, int log_height, int radius);
  static H2Set modified_half_ball(HPoint center, double radius);

  SetKind kind() const { return kind_; }
  const HPoint& center() const { return center_; }
  /// Undefined (zero) for HalfPlane.
  double radius() const { return radius_; }
  /// Integer log-height j of the centre; meaningful for AdmissibleRectangle only.
  int log_height() const { return log_height_; }
  bool has_radius() const { return kind_ != SetKind::HalfPlane; }

  std::string describe() const;

  friend bool operator==(const H2Set&, const H2Set&) = default;

 private:
  H2Set(SetKind kind, HPoint center, double radius, int log_height)
      : kind_(kind), center_(center), radius_(radius), log_height_(log_height) {}

  SetKind kind_;
  HPoint center_;
  double radius_;
  int log_height_;
};

/// Axis-aligned Euclidean bounding box of a set; y_hi may be +inf.
struct EuclidBox {
  double x_lo, x_hi, y_lo, y_hi;
};

/// asinh(t) for t >= 0, written as log1p so that tiny arguments keep full
/// relative precision.
double stable_asinh(double t);

double distance_h2(const HPoint& z, const HPoint& w);

/// Strict (open-set) membership.
bool contains_h2(const H2Set& s, const HPoint& w);

/// Exact hyperbolic area. Throws std::domain_error for HalfPlane.
double area_closed_form(const H2Set& s);

EuclidBox bounding_box(const H2Set& s);

struct BoundaryMarkers {
  std::array<double, 2> euclid_center;
  double euclid_radius;
  HPoint q_minus, q_plus;  // circle C_R(z) meets the boundary of T(z)
  HPoint p_minus, p_plus;  // T(z) meets the horocycle at height e^{-R} Im z
};

BoundaryMarkers boundary_markers(const HPoint& z, double radius);

/// Smallest admissible rectangle Q_K(Re z + i e^j) containing Q_R(z), with
/// j = ceil(log Im z) and K = ceil(R) + 2. Requires a Rectangle with R > 1.
H2Set admissible_hull_h2(const H2Set& rectangle);

/// Exact inclusion test between rectangle-type sets (Rectangle or
/// AdmissibleRectangle): true iff inner ⊂ outer.
bool rectangle_encloses(const H2Set& outer, const H2Set& inner);

/// M_{z0} w = w Im z0 + Re z0: the affine isometry sending i to z0.
HPoint apply_affine_isometry(const HPoint& z0, const HPoint& w);

/// Image of a set under M_{z0}. Admissible rectangles map to admissible
/// rectangles only when log Im z0 is an integer; otherwise to Rectangle.
H2Set apply_affine_isometry(const HPoint& z0, const H2Set& s);

}  // namespace halfball::hyp2
