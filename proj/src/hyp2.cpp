#include "halfball/hyp2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace halfball::hyp2 {

namespace {

constexpr double kPi = std::numbers::pi;

struct RectParams {
  double x_lo, x_hi, base;
};

RectParams rect_params(const H2Set& s) {
  const double x = s.center().x();
  const double y = s.center().y();
  return {x - y, x + y, y * std::exp(-s.radius())};
}

bool in_special_half_plane(const HPoint& z, const HPoint& w) {
  const double dx = w.x() - z.x();
  return dx * dx + w.y() * w.y() < z.y() * z.y();
}

bool in_ball(const HPoint& z, double radius, const HPoint& w) {
  return distance_h2(z, w) < radius;
}

HPoint satellite_center(const H2Set& s) {
  return HPoint(s.center().x(), std::exp(s.radius()) * s.center().y());
}

void require_radius(double radius, const char* what) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument(std::string(what) + ": radius must be positive and finite");
  }
}

}  // namespace

HPoint::HPoint(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0)) {
    throw std::invalid_argument("HPoint: requires finite x and y > 0");
  }
}

std::string_view to_string(SetKind kind) {
  switch (kind) {
    case SetKind::Ball: return "ball";
    case SetKind::HalfPlane: return "half_plane";
    case SetKind::HalfBall: return "half_ball";
    case SetKind::Trigonon: return "trigonon";
    case SetKind::Rectangle: return "rectangle";
    case SetKind::AdmissibleRectangle: return "admissible_rectangle";
    case SetKind::ModifiedHalfBall: return "modified_half_ball";
  }
  return "unknown";
}

SetKind set_kind_from_string(std::string_view name) {
  for (auto k : {SetKind::Ball, SetKind::HalfPlane, SetKind::HalfBall, SetKind::Trigonon,
                 SetKind::Rectangle, SetKind::AdmissibleRectangle, SetKind::ModifiedHalfBall}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown set kind: " + std::string(name));
}

H2Set H2Set::ball(HPoint center, double radius) {
  require_radius(radius, "ball");
  return {SetKind::Ball, center, radius, 0};
}

H2Set H2Set::half_plane(HPoint center) { return {SetKind::HalfPlane, center, 0.0, 0}; }

H2Set H2Set::half_ball(HPoint center, double radius) {
  require_radius(radius, "half_ball");
  return {SetKind::HalfBall, center, radius, 0};
}

H2Set H2Set::trigonon(HPoint center, double radius) {
  require_radius(radius, "trigonon");
  return {SetKind::Trigonon, center, radius, 0};
}

H2Set H2Set::rectangle(HPoint center, double radius) {
  require_radius(radius, "rectangle");
  return {SetKind::Rectangle, center, radius, 0};
}

H2Set H2Set::admissible_rectangle(double x, int log_height, int radius) {
  if (radius < 2) throw std::invalid_argument("admissible_rectangle: radius must be an integer >= 2");
  return {SetKind::AdmissibleRectangle, HPoint(x, std::exp(static_cast<double>(log_height))),
          static_cast<double>(radius), log_height};
}

H2Set H2Set::modified_half_ball(HPoint center, double radius) {
  require_radius(radius, "modified_half_ball");
  if (radius < 1.0) throw std::invalid_argument("modified_half_ball: radius must be >= 1");
  return {SetKind::ModifiedHalfBall, center, radius, 0};
}

std::string H2Set::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << to_string(kind_) << "(x=" << center_.x() << ", y=" << center_.y();
  if (kind_ == SetKind::AdmissibleRectangle) os << ", j=" << log_height_;
  if (has_radius()) os << ", R=" << radius_;
  os << ")";
  return os.str();
}

double stable_asinh(double t) {
  // asinh t = log(1 + t + t^2 / (1 + sqrt(1 + t^2)))
  const double t2 = t * t;
  if (t > 1e150) return std::log(2.0 * t);
  return std::log1p(t + t2 / (1.0 + std::sqrt(1.0 + t2)));
}

double distance_h2(const HPoint& z, const HPoint& w) {
  const double dist = std::hypot(z.x() - w.x(), z.y() - w.y());
  return 2.0 * stable_asinh(dist / (2.0 * std::sqrt(z.y() * w.y())));
}

bool contains_h2(const H2Set& s, const HPoint& w) {
  const HPoint& z = s.center();
  switch (s.kind()) {
    case SetKind::Ball:
      return in_ball(z, s.radius(), w);
    case SetKind::HalfPlane:
      return in_special_half_plane(z, w);
    case SetKind::HalfBall:
      return in_special_half_plane(z, w) && in_ball(z, s.radius(), w);
    case SetKind::Trigonon:
      return in_special_half_plane(z, w) && w.y() > std::exp(-s.radius()) * z.y();
    case SetKind::Rectangle:
    case SetKind::AdmissibleRectangle: {
      const auto r = rect_params(s);
      return w.x() > r.x_lo && w.x() < r.x_hi && w.y() > r.base;
    }
    case SetKind::ModifiedHalfBall:
      return (in_special_half_plane(z, w) && in_ball(z, s.radius(), w)) ||
             in_ball(satellite_center(s), 1.0, w);
  }
  return false;
}

double area_closed_form(const H2Set& s) {
  const double r = s.radius();
  const auto ball_area = [](double radius) {
    const double sh = std::sinh(0.5 * radius);
    return 4.0 * kPi * sh * sh;
  };
  switch (s.kind()) {
    case SetKind::Ball:
      return ball_area(r);
    case SetKind::HalfPlane:
      throw std::domain_error("area_closed_form: the special half plane has infinite measure");
    case SetKind::HalfBall:
      return 0.5 * ball_area(r);
    case SetKind::Trigonon:
      return 2.0 * std::exp(r) * std::sqrt(-std::expm1(-2.0 * r)) - 2.0 * std::acos(std::exp(-r));
    case SetKind::Rectangle:
    case SetKind::AdmissibleRectangle:
      return 2.0 * std::exp(r);
    case SetKind::ModifiedHalfBall:
      // the half ball and its satellite are disjoint for R >= 1
      return 0.5 * ball_area(r) + ball_area(1.0);
  }
  return 0.0;
}

EuclidBox bounding_box(const H2Set& s) {
  const double x = s.center().x();
  const double y = s.center().y();
  const double r = s.radius();
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (s.kind()) {
    case SetKind::Ball:
      return {x - y * std::sinh(r), x + y * std::sinh(r), y * std::exp(-r), y * std::exp(r)};
    case SetKind::HalfPlane:
      return {x - y, x + y, 0.0, y};
    case SetKind::HalfBall:
      return {x - y * std::tanh(r), x + y * std::tanh(r), y * std::exp(-r), y};
    case SetKind::Trigonon:
      return {x - y, x + y, y * std::exp(-r), y};
    case SetKind::Rectangle:
    case SetKind::AdmissibleRectangle:
      return {x - y, x + y, y * std::exp(-r), inf};
    case SetKind::ModifiedHalfBall: {
      const double ys = y * std::exp(r);
      const double s1 = std::sinh(1.0);
      return {std::min(x - y * std::tanh(r), x - ys * s1), std::max(x + y * std::tanh(r), x + ys * s1),
              y * std::exp(-r), ys * std::exp(1.0)};
    }
  }
  return {0, 0, 0, 0};
}

BoundaryMarkers boundary_markers(const HPoint& z, double radius) {
  require_radius(radius, "boundary_markers");
  const double x = z.x();
  const double y = z.y();
  const double th = std::tanh(radius);
  const double qy = y / std::cosh(radius);
  const double half_width = y * std::sqrt(-std::expm1(-2.0 * radius));
  const double py = y * std::exp(-radius);
  return BoundaryMarkers{
      {x, y * std::cosh(radius)},
      y * std::sinh(radius),
      HPoint(x - y * th, qy),
      HPoint(x + y * th, qy),
      HPoint(x - half_width, py),
      HPoint(x + half_width, py),
  };
}

H2Set admissible_hull_h2(const H2Set& rectangle) {
  if (rectangle.kind() != SetKind::Rectangle) {
    throw std::invalid_argument("admissible_hull_h2: expects a Rectangle");
  }
  if (!(rectangle.radius() > 1.0)) {
    throw std::invalid_argument("admissible_hull_h2: requires R > 1");
  }
  const double y = rectangle.center().y();
  int j = static_cast<int>(std::ceil(std::log(y)));
  // guard against log rounding up past an exact power of e
  if (std::exp(static_cast<double>(j - 1)) >= y) --j;
  const int k = static_cast<int>(std::ceil(rectangle.radius())) + 2;
  return H2Set::admissible_rectangle(rectangle.center().x(), j, k);
}

bool rectangle_encloses(const H2Set& outer, const H2Set& inner) {
  const auto is_rect = [](const H2Set& s) {
    return s.kind() == SetKind::Rectangle || s.kind() == SetKind::AdmissibleRectangle;
  };
  if (!is_rect(outer) || !is_rect(inner)) {
    throw std::invalid_argument("rectangle_encloses: both sets must be rectangles");
  }
  const auto o = rect_params(outer);
  const auto i = rect_params(inner);
  return o.x_lo <= i.x_lo && o.x_hi >= i.x_hi && o.base <= i.base;
}

HPoint apply_affine_isometry(const HPoint& z0, const HPoint& w) {
  return HPoint(w.x() * z0.y() + z0.x(), w.y() * z0.y());
}

H2Set apply_affine_isometry(const HPoint& z0, const H2Set& s) {
  const HPoint c = apply_affine_isometry(z0, s.center());
  switch (s.kind()) {
    case SetKind::Ball: return H2Set::ball(c, s.radius());
    case SetKind::HalfPlane: return H2Set::half_plane(c);
    case SetKind::HalfBall: return H2Set::half_ball(c, s.radius());
    case SetKind::Trigonon: return H2Set::trigonon(c, s.radius());
    case SetKind::Rectangle: return H2Set::rectangle(c, s.radius());
    case SetKind::ModifiedHalfBall: return H2Set::modified_half_ball(c, s.radius());
    case SetKind::AdmissibleRectangle: {
      const double shift = std::log(z0.y());
      const double rounded = std::round(shift);
      if (std::abs(shift - rounded) < 1e-12) {
        return H2Set::admissible_rectangle(c.x(), s.log_height() + static_cast<int>(rounded),
                                           static_cast<int>(s.radius()));
      }
      return H2Set::rectangle(c, s.radius());
    }
  }
  return s;
}

}  // namespace halfball::hyp2
