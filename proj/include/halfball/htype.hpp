#pragma once

// H-type algebras n = v ⊕ z and the Damek-Ricci group S = NA in the
// coordinates (X, Z, a) of exp(X + Z) exp((log a) H).

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace halfball::htype {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class AlgebraKind { DegenerateAbelian, Heisenberg };

/// An H-type algebra described by structure constants
/// c[k](i, j) = <Z_k, [X_i, X_j]>.
class HTypeAlgebra {
 public:
  /// p = 0, z = R^q, trivial bracket. q = 1 reproduces the upper half-plane.
  static HTypeAlgebra degenerate_abelian(int q);
  /// p = 2d, q = 1, [e_k, e_{d+k}] = Z_1, so that J_Z is |Z| times the
  /// standard complex structure.
  static HTypeAlgebra heisenberg(int d);

  AlgebraKind kind() const { return kind_; }
  /// q for DegenerateAbelian, d for Heisenberg.
  int parameter() const { return parameter_; }
  int p() const { return p_; }
  int q() const { return q_; }
  /// Homogeneous dimension p/2 + q.
  double nu() const { return 0.5 * p_ + q_; }
  /// "dr-abelian:q" or "dr-heisenberg:d".
  std::string name() const;

  Vec bracket(const Vec& x, const Vec& xp) const;
  /// <Z_k, [x, xp]> for raw arrays of length p.
  double bracket_component(int k, const double* x, const double* xp) const;
  /// The matrix of J_Z, defined by <J_Z X, X'> = <Z, [X, X']>.
  Mat j_map(const Vec& z) const;
  Vec apply_j(const Vec& z, const Vec& x) const;

  friend bool operator==(const HTypeAlgebra& a, const HTypeAlgebra& b) {
    return a.kind_ == b.kind_ && a.parameter_ == b.parameter_;
  }

 private:
  HTypeAlgebra(AlgebraKind kind, int parameter, int p, int q);

  AlgebraKind kind_;
  int parameter_;
  int p_;
  int q_;
  std::vector<Mat> structure_;
};

/// Maximum residuals of the four algebra identities over random draws.
struct AlgebraResiduals {
  double antisymmetry = 0.0;
  double defining_relation = 0.0;
  double h_type = 0.0;
  double polarisation = 0.0;
  int draws = 0;

  double max() const;
};

AlgebraResiduals validate_algebra(const HTypeAlgebra& alg, int draws, std::uint64_t seed);

struct NPoint {
  Vec x;
  Vec z;
};

/// A point (X, Z, a) of S with a > 0.
class SPoint {
 public:
  SPoint(Vec x, Vec z, double a);

  const Vec& x() const { return x_; }
  const Vec& z() const { return z_; }
  double a() const { return a_; }
  NPoint n() const { return {x_, z_}; }

 private:
  Vec x_;
  Vec z_;
  double a_;
};

/// A unit vector (X, Z, t) of s = v ⊕ z ⊕ a.
class UnitTangent {
 public:
  /// Throws std::invalid_argument unless |X|^2 + |Z|^2 + t^2 = 1 to 1e-12.
  UnitTangent(Vec x, Vec z, double t);
  /// Rescales an arbitrary nonzero vector to unit length.
  static UnitTangent normalized(const Vec& x, const Vec& z, double t);

  const Vec& x() const { return x_; }
  const Vec& z() const { return z_; }
  double t() const { return t_; }

 private:
  Vec x_;
  Vec z_;
  double t_;
};

NPoint n_identity(const HTypeAlgebra& alg);
SPoint s_identity(const HTypeAlgebra& alg);

NPoint n_mul(const HTypeAlgebra& alg, const NPoint& n, const NPoint& np);
NPoint n_inv(const NPoint& n);

SPoint na_mul(const HTypeAlgebra& alg, const SPoint& x, const SPoint& y);
SPoint na_inv(const SPoint& x);

/// Cygan-Koranyi gauge (|X|^4/16 + |Z|^2)^{1/4}.
double gauge(const NPoint& n);
double gauge4(const NPoint& n);
/// d_N(n, n') = G(n^{-1} n').
double dist_n(const HTypeAlgebra& alg, const NPoint& n, const NPoint& np);
/// Anisotropic dilation (sqrt(a) X, a Z); G(dilate(a, n)) = sqrt(a) G(n).
NPoint dilate(double a, const NPoint& n);

/// sinh^2(r/2) where r is the Riemannian distance of x from e.
double sinh2_half_radius(const SPoint& x);
double dist_from_identity(const SPoint& x);
/// Riemannian distance d(x, y) = r(y^{-1} x).
double dist_s(const HTypeAlgebra& alg, const SPoint& x, const SPoint& y);

/// Unit-speed geodesic from e with initial velocity v (t <= 0), at time tau.
SPoint geodesic(const HTypeAlgebra& alg, const UnitTangent& v, double tau);

/// (alpha_1(h), alpha_2(h)) = ((1-h)^{1/2}, (1-h^2)^{1/4}) for h in (0, 1).
std::pair<double, double> alpha_bounds(double h);

struct ShadowPoint {
  NPoint n;       // N-part of the boundary point of T(e) at height h
  double gauge4;  // G(n)^4
  double tau;     // geodesic time at which the height equals h
};

/// Point where the horizontal geodesic with velocity (X, Z, 0) crosses the
/// horocycle at height h. X = sqrt(1 - |Z|^2) x_dir for a unit x_dir (empty
/// when p = 0, in which case |Z| must be 1).
ShadowPoint shadow_boundary(const HTypeAlgebra& alg, double h, const Vec& x_dir, const Vec& z);

}  // namespace halfball::htype
