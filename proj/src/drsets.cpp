#include "halfball/drsets.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace halfball::drsets {

namespace {

bool is_degenerate(const HTypeAlgebra& alg) { return alg.p() == 0; }

// |Z - c| for the abelian case where gauge balls are Euclidean Z-balls.
double z_gap(const NPoint& a, const NPoint& b) { return (a.z - b.z).norm(); }

int ceil_log(double a) {
  int j = static_cast<int>(std::ceil(std::log(a)));
  if (std::exp(static_cast<double>(j - 1)) >= a) --j;
  return j;
}

}  // namespace

Cylinder::Cylinder(NPoint n0, double a0, double radius) : n0_(std::move(n0)), a0_(a0), radius_(radius) {
  if (!(a0 > 0.0) || !std::isfinite(a0)) throw std::invalid_argument("Cylinder: a0 must be positive");
  if (!(radius > 1.0) || !std::isfinite(radius)) throw std::invalid_argument("Cylinder: R must exceed 1");
}

double Cylinder::base_radius() const { return std::sqrt(a0_); }

double Cylinder::base_height() const { return a0_ * std::exp(-radius_); }

AdmissibleCylinder::AdmissibleCylinder(NPoint n0, int log_height, int radius)
    : n0_(std::move(n0)), j_(log_height), radius_(radius) {
  if (radius < 2) throw std::invalid_argument("AdmissibleCylinder: R must be an integer >= 2");
}

Cylinder AdmissibleCylinder::to_cylinder() const {
  return Cylinder(n0_, std::exp(static_cast<double>(j_)), static_cast<double>(radius_));
}

bool cylinder_contains(const HTypeAlgebra& alg, const Cylinder& c, const SPoint& x) {
  if (!(x.a() > c.base_height())) return false;
  if (is_degenerate(alg)) return (x.z() - c.n0().z).norm() < c.a0();
  return htype::dist_n(alg, c.n0(), x.n()) < c.base_radius();
}

bool cylinder_contains(const HTypeAlgebra& alg, const AdmissibleCylinder& c, const SPoint& x) {
  return cylinder_contains(alg, c.to_cylinder(), x);
}

namespace {

bool contains_coords(const HTypeAlgebra& alg, const NPoint& n0, double a0, double base, const double* coord) {
  const int p = alg.p();
  const int q = alg.q();
  if (!(std::exp(coord[p + q]) > base)) return false;
  double zz = 0.0;
  if (p == 0) {
    for (int k = 0; k < q; ++k) {
      const double d = coord[k] - n0.z[k];
      zz += d * d;
    }
    return std::sqrt(zz) < a0;
  }
  // n0^{-1} n = (X - X0, Z - Z0 - [X0, X] / 2)
  double xx = 0.0;
  for (int i = 0; i < p; ++i) {
    const double d = coord[i] - n0.x[i];
    xx += d * d;
  }
  for (int k = 0; k < q; ++k) {
    const double d = coord[p + k] - n0.z[k] - 0.5 * alg.bracket_component(k, n0.x.data(), coord);
    zz += d * d;
  }
  return xx * xx / 16.0 + zz < a0 * a0;
}

}  // namespace

bool cylinder_contains(const HTypeAlgebra& alg, const Cylinder& c, const double* coord) {
  return contains_coords(alg, c.n0(), c.a0(), c.base_height(), coord);
}

bool cylinder_contains(const HTypeAlgebra& alg, const AdmissibleCylinder& c, const double* coord) {
  return contains_coords(alg, c.n0(), std::exp(static_cast<double>(c.log_height())),
                         std::exp(static_cast<double>(c.base_level())), coord);
}

bool gauge_ball_encloses(const HTypeAlgebra& alg, const NPoint& c_out, double r_out, const NPoint& c_in,
                         double r_in) {
  if (is_degenerate(alg)) return z_gap(c_out, c_in) + r_in * r_in <= r_out * r_out;
  return htype::dist_n(alg, c_out, c_in) + r_in <= r_out;
}

bool gauge_balls_disjoint(const HTypeAlgebra& alg, const NPoint& c1, double r1, const NPoint& c2, double r2) {
  if (is_degenerate(alg)) return z_gap(c1, c2) >= r1 * r1 + r2 * r2;
  return htype::dist_n(alg, c1, c2) >= r1 + r2;
}

bool cylinder_encloses(const HTypeAlgebra& alg, const Cylinder& outer, const Cylinder& inner) {
  return outer.base_height() <= inner.base_height() &&
         gauge_ball_encloses(alg, outer.n0(), outer.base_radius(), inner.n0(), inner.base_radius());
}

bool cylinders_disjoint(const HTypeAlgebra& alg, const Cylinder& c1, const Cylinder& c2) {
  // both cylinders are unbounded above, so they meet iff their bases meet
  return gauge_balls_disjoint(alg, c1.n0(), c1.base_radius(), c2.n0(), c2.base_radius());
}

VolumeEstimate omega_n(const HTypeAlgebra& alg, OmegaMethod method, std::int64_t samples, std::uint64_t seed) {
  VolumeEstimate est;
  est.seed = seed;
  if (method == OmegaMethod::Analytic) {
    if (!is_degenerate(alg)) {
      throw std::invalid_argument("omega_n: analytic value only available for degenerate algebras, got " +
                                  alg.name());
    }
    const double q = alg.q();
    est.mean = std::pow(std::numbers::pi, 0.5 * q) / std::tgamma(0.5 * q + 1.0);
    return est;
  }
  if (samples <= 0) throw std::invalid_argument("omega_n: Monte Carlo needs a positive sample count");
  const int p = alg.p();
  const int q = alg.q();
  const double box = std::pow(4.0, p) * std::pow(2.0, q);
  est.samples = samples;
  est.hits = chunked_hits(samples, seed, [&](Rng& rng) {
    double x2 = 0.0;
    double z2 = 0.0;
    for (int i = 0; i < p; ++i) {
      const double v = rng.uniform(-2.0, 2.0);
      x2 += v * v;
    }
    for (int k = 0; k < q; ++k) {
      const double v = rng.uniform(-1.0, 1.0);
      z2 += v * v;
    }
    return x2 * x2 / 16.0 + z2 < 1.0;
  });
  const double frac = static_cast<double>(est.hits) / static_cast<double>(samples);
  est.mean = box * frac;
  est.stderr = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
  return est;
}

double cylinder_volume(const HTypeAlgebra& alg, double radius, double omega) {
  const double nu = alg.nu();
  return omega / nu * std::exp(nu * radius);
}

double slice_volume(const HTypeAlgebra& alg, double radius, int k, double omega) {
  if (k < 0) throw std::invalid_argument("slice_volume: k must be nonnegative");
  const double nu = alg.nu();
  return std::exp(-k * nu) * -std::expm1(-nu) * cylinder_volume(alg, radius, omega);
}

int slice_index(const Cylinder& c, double a) {
  const double t = std::log(a / c.base_height());
  if (!(t > 0.0)) return -1;
  return static_cast<int>(std::ceil(t)) - 1;
}

AdmissibleCylinder admissible_hull_cyl(const Cylinder& c) {
  const int j = ceil_log(c.a0());
  const int k = static_cast<int>(std::ceil(c.radius())) + 2;
  return AdmissibleCylinder(c.n0(), j, k);
}

double hull_volume_ratio(const HTypeAlgebra& alg, const Cylinder& c, const AdmissibleCylinder& hull) {
  return std::exp(alg.nu() * (hull.radius() - c.radius()));
}

SandwichVolume trig_sandwich_volume(const HTypeAlgebra& alg, double radius, double omega,
                                    SliceExponent exponent) {
  if (!(radius > 1.0)) throw std::invalid_argument("trig_sandwich_volume: R must exceed 1");
  // tanh-sinh copes with the (1 - h)^{m/2} endpoint behaviour at h = 1
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double nu = alg.nu();
  const double m = exponent == SliceExponent::Nu ? nu : 2.0 * nu;
  // h = e^u, h^{-ν-1} dh = e^{-νu} du
  auto inner = [&](double u) { return std::pow(-std::expm1(u), 0.5 * m) * std::exp(-nu * u); };
  auto outer = [&](double u) {
    return std::pow(-std::expm1(2.0 * u), 0.25 * m) * std::exp(-nu * u);
  };
  SandwichVolume out;
  const double lo = integrator.integrate(inner, -radius, 0.0, 1e-12, &out.lower_error);
  const double hi = integrator.integrate(outer, -radius, 0.0, 1e-12, &out.upper_error);
  if (!(out.lower_error <= 1e-8 * std::abs(lo)) || !(out.upper_error <= 1e-8 * std::abs(hi))) {
    throw std::runtime_error("trig_sandwich_volume: quadrature did not reach relative error 1e-8");
  }
  out.lower = omega * lo;
  out.upper = omega * hi;
  out.lower_error *= omega;
  out.upper_error *= omega;
  return out;
}

double trig_lower_constant(double nu, double omega) {
  return omega / nu * std::pow(-std::expm1(-0.5), 0.5 * nu) * -std::expm1(-0.5 * nu);
}

double trig_upper_constant(double nu, double omega) { return omega / nu; }

std::vector<SPoint> sample_halfball(const HTypeAlgebra& alg, double radius, std::int64_t count,
                                    std::uint64_t seed) {
  if (!(radius > 0.0)) throw std::invalid_argument("sample_halfball: R must be positive");
  const int p = alg.p();
  const int q = alg.q();
  return chunked_draws<SPoint>(count, seed, [&](Rng& rng) {
    htype::Vec x(p);
    htype::Vec z(q);
    double t = 0.0;
    do {
      for (int i = 0; i < p; ++i) x[i] = rng.normal();
      for (int k = 0; k < q; ++k) z[k] = rng.normal();
      t = -std::abs(rng.normal());
    } while (t == 0.0);
    const auto v = htype::UnitTangent::normalized(x, z, t);
    return htype::geodesic(alg, v, radius * rng.uniform_open());
  });
}

NPoint random_n_with_gauge(const HTypeAlgebra& alg, double g, Rng& rng) {
  NPoint n{htype::Vec(alg.p()), htype::Vec(alg.q())};
  double g0 = 0.0;
  do {
    for (int i = 0; i < alg.p(); ++i) n.x[i] = rng.normal();
    for (int k = 0; k < alg.q(); ++k) n.z[k] = rng.normal();
    g0 = htype::gauge(n);
  } while (!(g0 > 0.0));
  const double s = g / g0;
  return htype::dilate(s * s, n);
}

ExperimentReport gambas_check(const HTypeAlgebra& alg, double a, std::int64_t samples, std::uint64_t seed) {
  if (!(a > 0.0 && a < 1.0)) throw std::domain_error("gambas_check: a must lie in (0, 1)");
  const double g_hi = std::sqrt(std::numbers::e - 1.0);
  const double alpha2 = htype::alpha_bounds(a).second;
  const double alpha1_shift = htype::alpha_bounds(a / std::numbers::e).first;

  struct Draw {
    double g, outside_margin, inside_margin;
  };
  const auto draws = chunked_draws<Draw>(samples, seed, [&](Rng& rng) {
    const double g = rng.uniform(1.0, g_hi);
    const NPoint n = random_n_with_gauge(alg, g, rng);
    const double gn = htype::gauge(n);
    const double gd = htype::gauge(htype::dilate(1.0 / std::numbers::e, n));
    return Draw{gn, gn - alpha2, alpha1_shift - gd};
  });

  std::int64_t outside_viol = 0;
  std::int64_t inside_viol = 0;
  double min_out = std::numeric_limits<double>::infinity();
  double min_in = std::numeric_limits<double>::infinity();
  for (const auto& d : draws) {
    if (!(d.outside_margin > 0.0)) ++outside_viol;
    if (!(d.inside_margin > 0.0)) ++inside_viol;
    min_out = std::min(min_out, d.outside_margin);
    min_in = std::min(min_in, d.inside_margin);
  }

  ExperimentReport rep;
  rep.name = "gambas";
  rep.seed = seed;
  rep.config["space"] = alg.name();
  rep.config["a"] = std::to_string(a);
  rep.config["samples"] = std::to_string(samples);
  auto& t = rep.add_table("annulus", {"a", "samples", "alpha2_a", "alpha1_a_over_e", "outside_violations",
                                      "inside_violations", "min_outside_margin", "min_inside_margin"});
  t.add_row({a, static_cast<std::int64_t>(samples), alpha2, alpha1_shift, outside_viol, inside_viol, min_out,
             min_in});
  rep.expect_le("outside_T_e_violations", static_cast<double>(outside_viol), 0.0);
  rep.expect_le("inside_T_w1_violations", static_cast<double>(inside_viol), 0.0);
  return rep;
}

}  // namespace halfball::drsets
