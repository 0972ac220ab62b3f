#include "halfball/htype.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "halfball/hyp2.hpp"
#include "halfball/random.hpp"

namespace halfball::htype {

namespace {

constexpr double kUnitTolerance = 1e-12;

Vec random_vec(Rng& rng, int dim) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.normal();
  return v;
}

void require_same_shape(const HTypeAlgebra& alg, const Vec& x, const Vec& z) {
  if (x.size() != alg.p() || z.size() != alg.q()) {
    throw std::invalid_argument("point dimensions do not match the algebra " + alg.name());
  }
}

}  // namespace

HTypeAlgebra::HTypeAlgebra(AlgebraKind kind, int parameter, int p, int q)
    : kind_(kind), parameter_(parameter), p_(p), q_(q), structure_(q, Mat::Zero(p, p)) {}

HTypeAlgebra HTypeAlgebra::degenerate_abelian(int q) {
  if (q < 1) throw std::invalid_argument("degenerate_abelian: q must be >= 1");
  return HTypeAlgebra(AlgebraKind::DegenerateAbelian, q, 0, q);
}

HTypeAlgebra HTypeAlgebra::heisenberg(int d) {
  if (d < 1) throw std::invalid_argument("heisenberg: d must be >= 1");
  HTypeAlgebra alg(AlgebraKind::Heisenberg, d, 2 * d, 1);
  for (int k = 0; k < d; ++k) {
    alg.structure_[0](k, d + k) = 1.0;
    alg.structure_[0](d + k, k) = -1.0;
  }
  return alg;
}

std::string HTypeAlgebra::name() const {
  const std::string base = kind_ == AlgebraKind::Heisenberg ? "dr-heisenberg:" : "dr-abelian:";
  return base + std::to_string(parameter_);
}

Vec HTypeAlgebra::bracket(const Vec& x, const Vec& xp) const {
  Vec out = Vec::Zero(q_);
  if (p_ == 0) return out;
  for (int k = 0; k < q_; ++k) out[k] = x.dot(structure_[k] * xp);
  return out;
}

double HTypeAlgebra::bracket_component(int k, const double* x, const double* xp) const {
  const Mat& c = structure_[static_cast<std::size_t>(k)];
  double s = 0.0;
  for (int i = 0; i < p_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < p_; ++j) s += x[i] * c(i, j) * xp[j];
  }
  return s;
}

Mat HTypeAlgebra::j_map(const Vec& z) const {
  Mat j = Mat::Zero(p_, p_);
  for (int k = 0; k < q_; ++k) j += z[k] * structure_[k].transpose();
  return j;
}

Vec HTypeAlgebra::apply_j(const Vec& z, const Vec& x) const {
  if (p_ == 0) return Vec::Zero(0);
  return j_map(z) * x;
}

double AlgebraResiduals::max() const {
  return std::max({antisymmetry, defining_relation, h_type, polarisation});
}

AlgebraResiduals validate_algebra(const HTypeAlgebra& alg, int draws, std::uint64_t seed) {
  AlgebraResiduals res;
  res.draws = draws;
  Rng rng(seed);
  const int p = alg.p();
  const int q = alg.q();
  for (int i = 0; i < draws; ++i) {
    const Vec x = random_vec(rng, p);
    const Vec xp = random_vec(rng, p);
    const Vec y = random_vec(rng, p);
    const Vec z = random_vec(rng, q);

    const Vec anti = alg.bracket(x, xp) + alg.bracket(xp, x);
    if (anti.size() > 0) res.antisymmetry = std::max(res.antisymmetry, anti.cwiseAbs().maxCoeff());

    const Vec jx = alg.apply_j(z, x);
    res.defining_relation = std::max(res.defining_relation, std::abs(jx.dot(xp) - z.dot(alg.bracket(x, xp))));

    if (p > 0) {
      const Mat j = alg.j_map(z);
      const Mat h = j * j + z.squaredNorm() * Mat::Identity(p, p);
      res.h_type = std::max(res.h_type, h.cwiseAbs().maxCoeff());
    }

    const Vec jy = alg.apply_j(z, y);
    res.polarisation = std::max(res.polarisation, std::abs(jx.dot(jy) - z.squaredNorm() * x.dot(y)));
  }
  return res;
}

SPoint::SPoint(Vec x, Vec z, double a) : x_(std::move(x)), z_(std::move(z)), a_(a) {
  if (!std::isfinite(a) || !(a > 0.0)) throw std::invalid_argument("SPoint: height must be positive");
}

UnitTangent::UnitTangent(Vec x, Vec z, double t) : x_(std::move(x)), z_(std::move(z)), t_(t) {
  const double norm2 = x_.squaredNorm() + z_.squaredNorm() + t_ * t_;
  if (std::abs(norm2 - 1.0) > kUnitTolerance) {
    throw std::invalid_argument("UnitTangent: vector is not of unit length");
  }
}

UnitTangent UnitTangent::normalized(const Vec& x, const Vec& z, double t) {
  const double norm = std::sqrt(x.squaredNorm() + z.squaredNorm() + t * t);
  if (!(norm > 0.0)) throw std::invalid_argument("UnitTangent: zero vector");
  return UnitTangent(x / norm, z / norm, t / norm);
}

NPoint n_identity(const HTypeAlgebra& alg) { return {Vec::Zero(alg.p()), Vec::Zero(alg.q())}; }

SPoint s_identity(const HTypeAlgebra& alg) { return SPoint(Vec::Zero(alg.p()), Vec::Zero(alg.q()), 1.0); }

NPoint n_mul(const HTypeAlgebra& alg, const NPoint& n, const NPoint& np) {
  return {n.x + np.x, n.z + np.z + 0.5 * alg.bracket(n.x, np.x)};
}

NPoint n_inv(const NPoint& n) { return {-n.x, -n.z}; }

SPoint na_mul(const HTypeAlgebra& alg, const SPoint& x, const SPoint& y) {
  require_same_shape(alg, x.x(), x.z());
  require_same_shape(alg, y.x(), y.z());
  const double rs = std::sqrt(x.a());
  return SPoint(x.x() + rs * y.x(), x.z() + x.a() * y.z() + 0.5 * rs * alg.bracket(x.x(), y.x()),
                x.a() * y.a());
}

SPoint na_inv(const SPoint& x) {
  return SPoint(-x.x() / std::sqrt(x.a()), -x.z() / x.a(), 1.0 / x.a());
}

double gauge4(const NPoint& n) {
  const double x2 = n.x.squaredNorm();
  return x2 * x2 / 16.0 + n.z.squaredNorm();
}

double gauge(const NPoint& n) { return std::sqrt(std::sqrt(gauge4(n))); }

double dist_n(const HTypeAlgebra& alg, const NPoint& n, const NPoint& np) {
  return gauge(n_mul(alg, n_inv(n), np));
}

NPoint dilate(double a, const NPoint& n) {
  if (!(a > 0.0)) throw std::invalid_argument("dilate: factor must be positive");
  return {std::sqrt(a) * n.x, a * n.z};
}

double sinh2_half_radius(const SPoint& x) {
  // cosh^2(r/2) = (cosh(log sqrt a) + |X|^2 / (8 sqrt a))^2 + |Z|^2 / (4a),
  // rewritten around cosh u - 1 = 2 sinh^2(u/2) to avoid cancellation near e.
  const double a = x.a();
  const double sh = std::sinh(0.25 * std::log(a));
  const double c1 = 2.0 * sh * sh + x.x().squaredNorm() / (8.0 * std::sqrt(a));
  return c1 * (c1 + 2.0) + x.z().squaredNorm() / (4.0 * a);
}

double dist_from_identity(const SPoint& x) {
  const double s2 = std::max(0.0, sinh2_half_radius(x));
  return 2.0 * hyp2::stable_asinh(std::sqrt(s2));
}

double dist_s(const HTypeAlgebra& alg, const SPoint& x, const SPoint& y) {
  return dist_from_identity(na_mul(alg, na_inv(y), x));
}

SPoint geodesic(const HTypeAlgebra& alg, const UnitTangent& v, double tau) {
  require_same_shape(alg, v.x(), v.z());
  if (v.t() > 0.0) throw std::invalid_argument("geodesic: tangent must point downward (t <= 0)");
  if (!(tau >= 0.0)) throw std::invalid_argument("geodesic: tau must be nonnegative");
  const double theta = std::tanh(0.5 * tau);
  const double ch = std::cosh(0.5 * tau);
  const double one_minus_theta2 = 1.0 / (ch * ch);
  const double lin = 1.0 - v.t() * theta;
  const double chi = lin * lin + v.z().squaredNorm() * theta * theta;
  Vec x = (2.0 * theta * lin / chi) * v.x();
  if (alg.p() > 0) x -= (2.0 * theta * theta / chi) * alg.apply_j(v.z(), v.x());
  return SPoint(std::move(x), (2.0 * theta / chi) * v.z(), one_minus_theta2 / chi);
}

std::pair<double, double> alpha_bounds(double h) {
  if (!(h > 0.0 && h < 1.0)) throw std::domain_error("alpha_bounds: h must lie in (0, 1)");
  return {std::sqrt(1.0 - h), std::sqrt(std::sqrt((1.0 - h) * (1.0 + h)))};
}

ShadowPoint shadow_boundary(const HTypeAlgebra& alg, double h, const Vec& x_dir, const Vec& z) {
  if (!(h > 0.0 && h < 1.0)) throw std::domain_error("shadow_boundary: h must lie in (0, 1)");
  if (z.size() != alg.q() || x_dir.size() != alg.p()) {
    throw std::invalid_argument("shadow_boundary: dimensions do not match the algebra");
  }
  const double zz = z.squaredNorm();
  Vec x;
  if (alg.p() == 0) {
    if (std::abs(zz - 1.0) > kUnitTolerance) {
      throw std::invalid_argument("shadow_boundary: with p = 0 the Z part must be a unit vector");
    }
    x = Vec::Zero(0);
  } else {
    if (zz > 1.0 + kUnitTolerance) throw std::invalid_argument("shadow_boundary: |Z| must be <= 1");
    if (std::abs(x_dir.squaredNorm() - 1.0) > kUnitTolerance) {
      throw std::invalid_argument("shadow_boundary: x_dir must be a unit vector");
    }
    x = std::sqrt(std::max(0.0, 1.0 - zz)) * x_dir;
  }
  const double theta2 = (1.0 - h) / (1.0 + h * zz);
  const double theta = std::sqrt(theta2);
  const double chi = (1.0 + zz) / (1.0 + h * zz);
  const double a = theta / chi;
  const double b = theta2 / chi;
  NPoint n{2.0 * a * x, 2.0 * a * z};
  if (alg.p() > 0) n.x -= 2.0 * b * alg.apply_j(z, x);
  const double g4 = gauge4(n);
  return {std::move(n), g4, 2.0 * std::atanh(theta)};
}

}  // namespace halfball::htype
