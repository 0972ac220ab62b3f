#include "halfball/maxop.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "halfball/random.hpp"

namespace halfball::maxop {

namespace {

using measure::Space;
using measure::Window;

bool is_h2_kind(FamilyKind k) { return k != FamilyKind::Cylinders && k != FamilyKind::AdmissibleCylinders; }

bool is_integer(double v) { return std::isfinite(v) && v == std::round(v); }

double closed_form_ratio_sup(double (*ratio)(double)) {
  double best = 0.0;
  for (int i = 0; i <= 40000; ++i) best = std::max(best, ratio(1.0 + 1e-3 * i));
  return best;
}

double half_ball_area(double r) {
  const double sh = std::sinh(0.5 * r);
  return 2.0 * std::numbers::pi * sh * sh;
}

double trigonon_area(double r) {
  return hyp2::area_closed_form(hyp2::H2Set::trigonon(hyp2::HPoint(0.0, 1.0), r));
}

// Calls fn(i) for every grid point whose coordinates may lie in `box`.
template <class Fn>
void for_each_in_box(const SampleGrid& g, const Window& box, Fn&& fn) {
  const int dim = g.dim;
  const int hd = dim - 1;
  if (g.shape.empty()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double* c = g.point(i);
      bool in = c[hd] >= box.u_lo && c[hd] <= box.u_hi;
      for (int a = 0; in && a < hd; ++a) in = c[a] >= box.lo[a] && c[a] <= box.hi[a];
      if (in) fn(i);
    }
    return;
  }
  std::vector<int> first(static_cast<std::size_t>(dim));
  std::vector<int> last(static_cast<std::size_t>(dim));
  for (int a = 0; a < dim; ++a) {
    const double wlo = a < hd ? g.window.lo[a] : g.window.u_lo;
    const double whi = a < hd ? g.window.hi[a] : g.window.u_hi;
    const double blo = a < hd ? box.lo[a] : box.u_lo;
    const double bhi = a < hd ? box.hi[a] : box.u_hi;
    const int n = g.shape[a];
    const double step = (whi - wlo) / n;
    const double flo = std::floor((blo - wlo) / step - 0.5);
    const double fhi = std::ceil((bhi - wlo) / step - 0.5);
    first[a] = static_cast<int>(std::clamp(flo, 0.0, static_cast<double>(n)));
    last[a] = static_cast<int>(std::clamp(fhi, -1.0, static_cast<double>(n - 1)));
    if (first[a] > last[a]) return;
  }
  std::vector<int> cell = first;
  while (true) {
    fn(g.index(cell));
    int a = dim - 1;
    for (; a >= 0; --a) {
      if (++cell[a] <= last[a]) break;
      cell[a] = first[a];
    }
    if (a < 0) return;
  }
}

struct MemberScan {
  std::vector<SetDescriptor> sets;
  std::vector<double> averages;
};

MemberScan scan_members(const SampleGrid& g, const FamilySpec& fam) {
  fam.validate(g.space);
  MemberScan scan;
  scan.sets = members(g.space, fam);
  scan.averages.assign(scan.sets.size(), 0.0);

  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.values[i] != 0.0) support.push_back(i);
  }

  parallel_for(scan.sets.size(), [&](std::size_t m) {
    const auto& s = scan.sets[m];
    const Window box = measure::set_box(g.space, s);
    std::vector<double> terms;
    auto add = [&](std::size_t i) {
      if (g.values[i] != 0.0 && measure::contains_point(g.space, s, g.point(i))) {
        terms.push_back(g.weights[i] * std::abs(g.values[i]));
      }
    };
    if (support.size() * 4 < g.size()) {
      for (std::size_t i : support) {
        const double* c = g.point(i);
        bool in = c[g.dim - 1] >= box.u_lo && c[g.dim - 1] <= box.u_hi;
        for (int a = 0; in && a < g.dim - 1; ++a) in = c[a] >= box.lo[a] && c[a] <= box.hi[a];
        if (in) add(i);
      }
    } else {
      for_each_in_box(g, box, add);
    }
    scan.averages[m] = pairwise_sum(terms) / member_measure(g.space, s, fam.omega);
  });
  return scan;
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Balls: return "balls";
    case FamilyKind::HalfBalls: return "half_balls";
    case FamilyKind::Trigona: return "trigona";
    case FamilyKind::Rectangles: return "rectangles";
    case FamilyKind::AdmissibleRectangles: return "admissible_rectangles";
    case FamilyKind::ModifiedHalfBalls: return "modified_half_balls";
    case FamilyKind::Cylinders: return "cylinders";
    case FamilyKind::AdmissibleCylinders: return "admissible_cylinders";
  }
  return "unknown";
}

FamilyKind family_kind_from_string(std::string_view name) {
  for (auto k : {FamilyKind::Balls, FamilyKind::HalfBalls, FamilyKind::Trigona, FamilyKind::Rectangles,
                 FamilyKind::AdmissibleRectangles, FamilyKind::ModifiedHalfBalls, FamilyKind::Cylinders,
                 FamilyKind::AdmissibleCylinders}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown family: " + std::string(name));
}

bool is_admissible(FamilyKind kind) {
  return kind == FamilyKind::AdmissibleRectangles || kind == FamilyKind::AdmissibleCylinders;
}

void FamilySpec::validate(const Space& space) const {
  if (is_h2_kind(kind) && !space.is_h2() &&
      !(space.algebra().p() == 0 && space.algebra().q() == 1)) {
    throw std::invalid_argument(std::string(to_string(kind)) + " family needs the h2 space");
  }
  for (const auto& c : centers_h) {
    if (static_cast<int>(c.size()) != space.horizontal_dim()) {
      throw std::invalid_argument("family centre dimension does not match the space");
    }
  }
  for (double r : radii) {
    if (!(r > 0.0)) throw std::invalid_argument("family radii must be positive");
  }
  if (is_admissible(kind)) {
    for (double u : center_u) {
      if (!is_integer(u)) throw std::invalid_argument("admissible families need integer log-heights");
    }
    for (double r : radii) {
      if (!is_integer(r) || r < 2.0) throw std::invalid_argument("admissible families need integer radii >= 2");
    }
  }
  if (kind == FamilyKind::Cylinders) {
    for (double r : radii) {
      if (!(r > 1.0)) throw std::invalid_argument("cylinder radii must exceed 1");
    }
  }
  if (kind == FamilyKind::ModifiedHalfBalls) {
    for (double r : radii) {
      if (r < 1.0) throw std::invalid_argument("modified half balls need R >= 1");
    }
  }
}

std::vector<double> geometric_ladder(double r_min, int rungs) {
  std::vector<double> out;
  for (int k = 0; k < rungs; ++k) out.push_back(r_min + k * std::numbers::ln2);
  return out;
}

std::vector<double> integer_ladder(int k_lo, int k_hi) {
  std::vector<double> out;
  for (int k = k_lo; k <= k_hi; ++k) out.push_back(k);
  return out;
}

std::vector<std::vector<double>> grid_centers(const SampleGrid& g, int stride) {
  if (g.shape.empty()) throw std::invalid_argument("grid_centers: needs a structured grid");
  if (stride < 1) throw std::invalid_argument("grid_centers: stride must be positive");
  const int hd = g.dim - 1;
  std::vector<std::vector<double>> axes(static_cast<std::size_t>(hd));
  for (int a = 0; a < hd; ++a) {
    const double step = (g.window.hi[a] - g.window.lo[a]) / g.shape[a];
    for (int i = 0; i < g.shape[a]; i += stride) axes[a].push_back(g.window.lo[a] + (i + 0.5) * step);
  }
  std::vector<std::vector<double>> out{{}};
  for (const auto& axis : axes) {
    std::vector<std::vector<double>> next;
    for (const auto& prefix : out) {
      for (double v : axis) {
        auto c = prefix;
        c.push_back(v);
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<double> grid_heights(const SampleGrid& g, int stride) {
  if (g.shape.empty()) throw std::invalid_argument("grid_heights: needs a structured grid");
  if (stride < 1) throw std::invalid_argument("grid_heights: stride must be positive");
  const int n = g.shape.back();
  const double step = (g.window.u_hi - g.window.u_lo) / n;
  std::vector<double> out;
  for (int i = 0; i < n; i += stride) out.push_back(g.window.u_lo + (i + 0.5) * step);
  return out;
}

std::vector<double> integer_heights(int j_lo, int j_hi) { return integer_ladder(j_lo, j_hi); }

SetDescriptor make_member(const Space& space, FamilyKind kind, const std::vector<double>& center_h, double center_u,
                          double radius) {
  using hyp2::H2Set;
  using hyp2::HPoint;
  if (is_h2_kind(kind)) {
    const HPoint z(center_h.at(0), std::exp(center_u));
    switch (kind) {
      case FamilyKind::Balls: return H2Set::ball(z, radius);
      case FamilyKind::HalfBalls: return H2Set::half_ball(z, radius);
      case FamilyKind::Trigona: return H2Set::trigonon(z, radius);
      case FamilyKind::Rectangles: return H2Set::rectangle(z, radius);
      case FamilyKind::AdmissibleRectangles:
        return H2Set::admissible_rectangle(z.x(), static_cast<int>(center_u), static_cast<int>(radius));
      case FamilyKind::ModifiedHalfBalls: return H2Set::modified_half_ball(z, radius);
      default: break;
    }
  }
  const int p = space.is_h2() ? 0 : space.algebra().p();
  const int q = space.is_h2() ? 1 : space.algebra().q();
  htype::NPoint n0{Eigen::Map<const htype::Vec>(center_h.data(), p),
                   Eigen::Map<const htype::Vec>(center_h.data() + p, q)};
  if (kind == FamilyKind::AdmissibleCylinders) {
    return drsets::AdmissibleCylinder(std::move(n0), static_cast<int>(center_u), static_cast<int>(radius));
  }
  return drsets::Cylinder(std::move(n0), std::exp(center_u), radius);
}

std::vector<SetDescriptor> members(const Space& space, const FamilySpec& fam) {
  std::vector<SetDescriptor> out;
  out.reserve(fam.size());
  for (const auto& c : fam.centers_h) {
    for (double u : fam.center_u) {
      for (double r : fam.radii) out.push_back(make_member(space, fam.kind, c, u, r));
    }
  }
  return out;
}

double member_measure(const Space& space, const SetDescriptor& s, double omega) {
  if (const auto* h = std::get_if<hyp2::H2Set>(&s)) return hyp2::area_closed_form(*h);
  const auto alg = space.is_h2() ? htype::HTypeAlgebra::degenerate_abelian(1) : space.algebra();
  double w = omega;
  if (alg.p() == 0) {
    w = drsets::omega_n(alg, drsets::OmegaMethod::Analytic).mean;
  } else if (!(w > 0.0)) {
    throw std::invalid_argument("cylinder families on " + alg.name() + " need a positive omega");
  }
  const double r = std::holds_alternative<drsets::Cylinder>(s)
                       ? std::get<drsets::Cylinder>(s).radius()
                       : static_cast<double>(std::get<drsets::AdmissibleCylinder>(s).radius());
  return drsets::cylinder_volume(alg, r, w);
}

MaxResult maximal_fn(const SampleGrid& g, const double* coord, const FamilySpec& fam) {
  fam.validate(g.space);
  MaxResult best;
  for (const auto& s : members(g.space, fam)) {
    if (!measure::contains_point(g.space, s, coord)) continue;
    std::vector<double> terms;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g.values[i] != 0.0 && measure::contains_point(g.space, s, g.point(i))) {
        terms.push_back(g.weights[i] * std::abs(g.values[i]));
      }
    }
    const double avg = pairwise_sum(terms) / member_measure(g.space, s, fam.omega);
    if (!best.witness || avg > best.value) {
      best.value = avg;
      best.witness = s;
    }
  }
  return best;
}

std::vector<double> maximal_on_grid(const SampleGrid& g, const FamilySpec& fam,
                                    std::vector<std::int64_t>* witness_index) {
  const MemberScan scan = scan_members(g, fam);
  std::vector<double> out(g.size(), 0.0);
  if (witness_index) witness_index->assign(g.size(), -1);
  for (std::size_t m = 0; m < scan.sets.size(); ++m) {
    const double avg = scan.averages[m];
    if (avg <= 0.0 && !witness_index) continue;
    const auto& s = scan.sets[m];
    for_each_in_box(g, measure::set_box(g.space, s), [&](std::size_t i) {
      const bool better = avg > out[i] || (witness_index && (*witness_index)[i] < 0);
      if (better && measure::contains_point(g.space, s, g.point(i))) {
        out[i] = std::max(out[i], avg);
        if (witness_index && (avg >= out[i])) (*witness_index)[i] = static_cast<std::int64_t>(m);
      }
    });
  }
  return out;
}

double level_set_measure(const SampleGrid& g, const std::vector<double>& maximal, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("level_set_measure: alpha must be positive");
  if (maximal.size() != g.size()) throw std::invalid_argument("level_set_measure: size mismatch");
  std::vector<double> terms;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (maximal[i] > alpha) terms.push_back(g.weights[i]);
  }
  return pairwise_sum(terms);
}

double level_set_measure(const SampleGrid& g, const FamilySpec& fam, double alpha) {
  return level_set_measure(g, maximal_on_grid(g, fam), alpha);
}

double llogl_rhs(const SampleGrid& g, double alpha, double lambda) {
  if (!(alpha > 0.0) || !(lambda > 0.0)) throw std::invalid_argument("llogl_rhs: alpha and lambda must be positive");
  std::vector<double> terms(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double t = std::abs(g.values[i]) / alpha;
    terms[i] = g.weights[i] * t * std::log1p(t / lambda);
  }
  return pairwise_sum(terms);
}

double lambda_star(double nu) {
  return 0.25 * std::expm1(nu) * std::expm1(0.5) * std::exp(-2.0 * nu);
}

YoungResult young_check(double a, double b, double lambda) {
  if (!(a > 0.0) || !(b > 0.0) || !(lambda > 0.0)) {
    throw std::invalid_argument("young_check: a, b and lambda must be positive");
  }
  const double rhs = 2.0 * lambda * std::exp(0.5 * a) + 2.0 * b * std::log1p(b / lambda);
  YoungResult r;
  r.margin = rhs - a * b;
  r.holds = r.margin >= 0.0;
  return r;
}

double lp_norm(const SampleGrid& g, const std::vector<double>& values, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (values.size() != g.size()) throw std::invalid_argument("lp_norm: size mismatch");
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  std::vector<double> terms(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) terms[i] = g.weights[i] * std::pow(std::abs(values[i]), p);
  return std::pow(pairwise_sum(terms), 1.0 / p);
}

double lp_norm(const SampleGrid& g, double p) { return lp_norm(g, g.values, p); }

double compare_k1() {
  return closed_form_ratio_sup([](double r) { return trigonon_area(r) / half_ball_area(r); });
}

double compare_k2() {
  return closed_form_ratio_sup([](double r) { return half_ball_area(r + std::numbers::ln2) / trigonon_area(r); });
}

double compare_k3() {
  return std::exp(3.0) * closed_form_ratio_sup([](double r) { return 2.0 * std::exp(r) / half_ball_area(r); });
}

ExperimentReport levelset_table(const SampleGrid& g, const FamilySpec& fam, const std::vector<double>& alphas,
                                double lambda, double tolerance) {
  const auto nf = maximal_on_grid(g, fam);
  ExperimentReport rep;
  rep.name = "levelset";
  rep.config["family"] = std::string(to_string(fam.kind));
  rep.config["members"] = std::to_string(fam.size());
  rep.config["points"] = std::to_string(g.size());
  auto& t = rep.add_table("levelset", {"alpha", "measure", "rhs_bound", "pass"});
  std::int64_t viol = 0;
  double worst = 0.0;
  double prev = -1.0;
  std::int64_t monotone_viol = 0;
  std::vector<double> sorted = alphas;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  for (double a : sorted) {
    const double m = level_set_measure(g, nf, a);
    const double bound = 4.0 * llogl_rhs(g, a, lambda);
    const bool ok = m <= bound * (1.0 + tolerance);
    viol += ok ? 0 : 1;
    if (bound > 0.0) worst = std::max(worst, m / bound);
    if (prev >= 0.0 && m < prev) ++monotone_viol;
    prev = m;
    t.add_row({a, m, bound, ok});
  }
  rep.expect_le("levelset_bound_violations", static_cast<double>(viol), 0.0);
  rep.expect_le("levelset_monotonicity_violations", static_cast<double>(monotone_viol), 0.0);
  rep.add_table("summary", {"worst_ratio", "lambda", "tolerance"}).add_row({worst, lambda, tolerance});
  return rep;
}

FamilySpec admissible_rectangles_for(const SampleGrid& g, int k_max, int center_stride) {
  if (!g.space.is_h2()) throw std::invalid_argument("admissible_rectangles_for: needs an h2 grid");
  const int j_lo = static_cast<int>(std::floor(g.window.u_lo)) - 1;
  const int j_hi = static_cast<int>(std::ceil(g.window.u_hi)) + 1;
  return FamilySpec{FamilyKind::AdmissibleRectangles, grid_centers(g, center_stride), integer_heights(j_lo, j_hi),
                    integer_ladder(2, k_max)};
}

ExperimentReport operator_compare(const SampleGrid& g, const CompareOptions& opts) {
  if (!g.space.is_h2()) throw std::invalid_argument("operator_compare: needs an h2 grid");
  if (opts.r_min < 1.0) throw std::invalid_argument("operator_compare: r_min must be >= 1");

  const auto centers = grid_centers(g, opts.center_stride);
  const auto heights = grid_heights(g, opts.center_stride);
  FamilySpec b{FamilyKind::HalfBalls, centers, heights, geometric_ladder(opts.r_min, opts.rungs)};
  FamilySpec b_plus{FamilyKind::HalfBalls, centers, heights, geometric_ladder(opts.r_min, opts.rungs + 1)};
  FamilySpec t{FamilyKind::Trigona, centers, heights, geometric_ladder(opts.r_min, opts.rungs)};
  const double r_max = b.radii.back();
  const int j_lo = static_cast<int>(std::floor(heights.front()));
  const int j_hi = static_cast<int>(std::ceil(heights.back())) + 1;
  FamilySpec q{FamilyKind::AdmissibleRectangles, centers, integer_heights(j_lo, j_hi),
               integer_ladder(2, static_cast<int>(std::ceil(r_max)) + 2)};

  const auto nb = maximal_on_grid(g, b);
  const auto nbp = maximal_on_grid(g, b_plus);
  const auto nt = maximal_on_grid(g, t);
  const auto nq = maximal_on_grid(g, q);

  const double k1 = compare_k1();
  const double k2 = compare_k2();
  const double k3 = compare_k3();

  ExperimentReport rep;
  rep.name = "operator_compare";
  rep.config["points"] = std::to_string(g.size());
  rep.config["center_stride"] = std::to_string(opts.center_stride);
  rep.config["rungs"] = std::to_string(opts.rungs);
  auto& tab = rep.add_table("ratios", {"check", "constant", "max_ratio", "violations", "points"});

  auto check = [&](const std::string& name, const std::vector<double>& lhs, const std::vector<double>& rhs,
                   double k) {
    std::int64_t viol = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (lhs[i] <= 0.0) continue;
      const double ratio = rhs[i] > 0.0 ? lhs[i] / rhs[i] : std::numeric_limits<double>::infinity();
      worst = std::max(worst, ratio);
      if (lhs[i] > k * rhs[i] * (1.0 + 1e-12)) ++viol;
    }
    tab.add_row({name, k, worst, viol, static_cast<std::int64_t>(lhs.size())});
    rep.expect_le(name + "_violations", static_cast<double>(viol), 0.0);
  };
  check("Nb_le_K1_NT", nb, nt, k1);
  check("NT_le_K2_Nb", nt, nbp, k2);
  check("Nb_le_K3_NQ", nb, nq, k3);
  return rep;
}

}  // namespace halfball::maxop
