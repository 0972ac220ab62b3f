#include "halfball/experiments.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "halfball/hyp2.hpp"
#include "halfball/maxop.hpp"
#include "halfball/random.hpp"

namespace halfball::experiments {

namespace {

using htype::HTypeAlgebra;
using htype::NPoint;
using hyp2::H2Set;
using hyp2::HPoint;
using measure::Window;

constexpr double kE = std::numbers::e;

bool exact_line(const HTypeAlgebra& alg) { return alg.p() == 0 && alg.q() == 1; }

double base_radius(const AdmissibleCylinder& c) { return std::exp(0.5 * c.log_height()); }

bool in_gauge_ball(const HTypeAlgebra& alg, const NPoint& c, double r, const NPoint& n) {
  if (alg.p() == 0) return (n.z - c.z).norm() < r * r;
  // G(c^{-1} n)^4 < r^4 with c^{-1} n = (X - Xc, Z - Zc - [Xc, X] / 2)
  const double xx = (n.x - c.x).squaredNorm();
  double zz = 0.0;
  for (int k = 0; k < alg.q(); ++k) {
    const double d = n.z[k] - c.z[k] - 0.5 * alg.bracket_component(k, c.x.data(), n.x.data());
    zz += d * d;
  }
  const double r2 = r * r;
  return xx * xx / 16.0 + zz < r2 * r2;
}

// Horizontal box of a gauge ball (see measure::set_box).
void grow_box(const NPoint& c, double r, std::vector<double>& lo, std::vector<double>& hi) {
  const int p = static_cast<int>(c.x.size());
  const int q = static_cast<int>(c.z.size());
  const double zr = r * r + c.x.norm() * r;
  for (int i = 0; i < p + q; ++i) {
    const double v = i < p ? c.x[i] : c.z[i - p];
    const double w = i < p ? 2.0 * r : zr;
    lo[i] = std::min(lo[i], v - w);
    hi[i] = std::max(hi[i], v + w);
  }
}

double merged_length(std::vector<std::pair<double, double>>& iv) {
  if (iv.empty()) return 0.0;
  std::sort(iv.begin(), iv.end());
  double total = 0.0;
  double lo = iv[0].first;
  double hi = iv[0].second;
  for (std::size_t i = 1; i < iv.size(); ++i) {
    if (iv[i].first > hi) {
      total += hi - lo;
      lo = iv[i].first;
      hi = iv[i].second;
    } else {
      hi = std::max(hi, iv[i].second);
    }
  }
  return total + (hi - lo);
}

bool lex_less(const NPoint& a, const NPoint& b) {
  for (int i = 0; i < a.x.size(); ++i) {
    if (a.x[i] != b.x[i]) return a.x[i] < b.x[i];
  }
  for (int i = 0; i < a.z.size(); ++i) {
    if (a.z[i] != b.z[i]) return a.z[i] < b.z[i];
  }
  return false;
}

std::vector<std::size_t> greedy_disjoint(const HTypeAlgebra& alg, const std::vector<AdmissibleCylinder>& family) {
  std::vector<std::size_t> order(family.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (family[a].log_height() != family[b].log_height()) return family[a].log_height() > family[b].log_height();
    return lex_less(family[a].n0(), family[b].n0());
  });
  std::vector<std::size_t> selected;
  for (std::size_t i : order) {
    bool free = true;
    for (std::size_t s : selected) {
      if (!drsets::gauge_balls_disjoint(alg, family[i].n0(), base_radius(family[i]), family[s].n0(),
                                        base_radius(family[s]))) {
        free = false;
        break;
      }
    }
    if (free) selected.push_back(i);
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

void require_one_level(const std::vector<AdmissibleCylinder>& family) {
  for (const auto& c : family) {
    if (c.base_level() != family.front().base_level()) {
      throw std::invalid_argument("vitali_select: members lie on different horocycles");
    }
  }
}

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit f;
  f.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  f.r2 = (sxx > 0.0 && syy > 0.0) ? sxy * sxy / (sxx * syy) : 0.0;
  return f;
}

double trigonon_area(double r) { return hyp2::area_closed_form(H2Set::trigonon(HPoint(0.0, 1.0), r)); }

// Half-width of the slice of T_R(z) at height y (0 when empty).
double slice_half_width(const H2Set& t, double y) {
  const double y0 = t.center().y();
  if (!(y > y0 * std::exp(-t.radius()) && y < y0)) return 0.0;
  return std::sqrt((y0 - y) * (y0 + y));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

HTypeAlgebra cylinder_algebra(const Space& space) {
  return space.is_h2() ? HTypeAlgebra::degenerate_abelian(1) : space.algebra();
}

VolumeEstimate union_n_measure(const HTypeAlgebra& alg, const std::vector<NPoint>& centers,
                               const std::vector<double>& radii, std::int64_t samples, std::uint64_t seed) {
  if (centers.size() != radii.size()) throw std::invalid_argument("union_n_measure: size mismatch");
  VolumeEstimate est;
  est.seed = seed;
  if (centers.empty()) return est;
  if (exact_line(alg)) {
    std::vector<std::pair<double, double>> iv;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      const double r2 = radii[i] * radii[i];
      iv.emplace_back(centers[i].z[0] - r2, centers[i].z[0] + r2);
    }
    est.mean = merged_length(iv);
    return est;
  }
  const int d = alg.p() + alg.q();
  std::vector<double> lo(d, std::numeric_limits<double>::infinity());
  std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < centers.size(); ++i) grow_box(centers[i], radii[i], lo, hi);
  double box = 1.0;
  for (int i = 0; i < d; ++i) box *= hi[i] - lo[i];
  est.samples = samples;
  est.hits = chunked_hits(samples, seed, [&](Rng& rng) {
    NPoint n{htype::Vec(alg.p()), htype::Vec(alg.q())};
    for (int i = 0; i < d; ++i) {
      const double v = rng.uniform(lo[i], hi[i]);
      if (i < alg.p()) n.x[i] = v; else n.z[i - alg.p()] = v;
    }
    for (std::size_t k = 0; k < centers.size(); ++k) {
      if (in_gauge_ball(alg, centers[k], radii[k], n)) return true;
    }
    return false;
  });
  const double frac = static_cast<double>(est.hits) / static_cast<double>(samples);
  est.mean = box * frac;
  est.stderr = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
  return est;
}

VitaliResult vitali_select(const Space& space, const std::vector<AdmissibleCylinder>& family, std::int64_t samples,
                           std::uint64_t seed) {
  if (family.empty()) throw std::invalid_argument("vitali_select: empty family");
  require_one_level(family);
  const HTypeAlgebra alg = cylinder_algebra(space);
  const double nu = alg.nu();

  VitaliResult res;
  res.selected = greedy_disjoint(alg, family);
  res.bound = std::pow(5.0, nu);

  std::vector<NPoint> fc;
  std::vector<double> fr;
  for (const auto& c : family) {
    fc.push_back(c.n0());
    fr.push_back(base_radius(c));
  }
  std::vector<NPoint> sc;
  std::vector<double> sr;
  for (std::size_t i : res.selected) {
    sc.push_back(fc[i]);
    sr.push_back(fr[i]);
  }

  double u_fam = 0.0;
  double u_sel = 0.0;
  if (exact_line(alg)) {
    u_fam = union_n_measure(alg, fc, fr, 0, seed).mean;
    u_sel = union_n_measure(alg, sc, sr, 0, seed).mean;
    res.union_ratio = u_fam / u_sel;
  } else {
    // one shared sample: every hit of the selected union is a hit of the full union
    const int d = alg.p() + alg.q();
    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < fc.size(); ++i) grow_box(fc[i], fr[i], lo, hi);
    double box = 1.0;
    for (int i = 0; i < d; ++i) box *= hi[i] - lo[i];
    const auto codes = chunked_draws<std::uint8_t>(samples, seed, [&](Rng& rng) {
      NPoint n{htype::Vec(alg.p()), htype::Vec(alg.q())};
      for (int i = 0; i < d; ++i) {
        const double v = rng.uniform(lo[i], hi[i]);
        if (i < alg.p()) n.x[i] = v; else n.z[i - alg.p()] = v;
      }
      std::uint8_t code = 0;
      for (std::size_t k = 0; k < sc.size(); ++k) {
        if (in_gauge_ball(alg, sc[k], sr[k], n)) return static_cast<std::uint8_t>(3);
      }
      for (std::size_t k = 0; k < fc.size(); ++k) {
        if (in_gauge_ball(alg, fc[k], fr[k], n)) {
          code = 1;
          break;
        }
      }
      return code;
    });
    std::int64_t hf = 0, hs = 0;
    for (auto c : codes) {
      hf += (c & 1) ? 1 : 0;
      hs += (c & 2) ? 1 : 0;
    }
    const double scale = box / static_cast<double>(samples);
    u_fam = scale * static_cast<double>(hf);
    u_sel = scale * static_cast<double>(hs);
    if (hs == 0) throw std::runtime_error("vitali_select: no Monte Carlo hits in the selected union");
    const double qhat = static_cast<double>(hs) / static_cast<double>(hf);
    res.union_ratio = 1.0 / qhat;
    res.ratio_stderr = std::sqrt(qhat * (1.0 - qhat) / static_cast<double>(hf)) / (qhat * qhat);
  }

  std::int64_t overlaps = 0;
  for (std::size_t a = 0; a < res.selected.size(); ++a) {
    for (std::size_t b = a + 1; b < res.selected.size(); ++b) {
      if (!drsets::gauge_balls_disjoint(alg, fc[res.selected[a]], fr[res.selected[a]], fc[res.selected[b]],
                                        fr[res.selected[b]])) {
        ++overlaps;
      }
    }
  }

  // on one horocycle the S-measure of a union is μ_N(∪ bases) base^{-ν} / ν
  const double base = std::exp(static_cast<double>(family.front().base_level()));
  const double lift = std::pow(base, -nu) / nu;

  auto& rep = res.report;
  rep.name = "vitali";
  rep.seed = seed;
  rep.config["space"] = space.name();
  auto& t = rep.add_table("vitali", {"members", "selected", "base_level", "union_family", "union_selected",
                                      "ratio", "ratio_stderr", "bound"});
  t.add_row({static_cast<std::int64_t>(family.size()), static_cast<std::int64_t>(res.selected.size()),
             static_cast<std::int64_t>(family.front().base_level()), u_fam * lift, u_sel * lift, res.union_ratio,
             res.ratio_stderr, res.bound});
  rep.expect_le("selected_pair_overlaps", static_cast<double>(overlaps), 0.0);
  rep.expect_le("union_ratio_plus_3se", res.union_ratio + 3.0 * res.ratio_stderr, res.bound);
  return res;
}

std::vector<AdmissibleCylinder> random_cylinders(const Space& space, const GeneratorParams& params,
                                                 std::uint64_t seed) {
  if (params.count < 0 || params.j_lo > params.j_hi || params.r_lo > params.r_hi || params.r_lo < 2) {
    throw std::invalid_argument("random_cylinders: bad generator parameters");
  }
  const HTypeAlgebra alg = cylinder_algebra(space);
  Rng rng(seed);
  std::vector<AdmissibleCylinder> out;
  for (int i = 0; i < params.count; ++i) {
    NPoint n{htype::Vec(alg.p()), htype::Vec(alg.q())};
    for (int a = 0; a < alg.p(); ++a) n.x[a] = rng.uniform(-params.half_width, params.half_width);
    for (int a = 0; a < alg.q(); ++a) n.z[a] = rng.uniform(-params.half_width, params.half_width);
    const int j = static_cast<int>(rng.uniform_int(params.j_lo, params.j_hi));
    const int r = static_cast<int>(rng.uniform_int(params.r_lo, params.r_hi));
    out.emplace_back(std::move(n), j, r);
  }
  return out;
}

MaximalFamily prune_to_maximal(const Space& space, const std::vector<AdmissibleCylinder>& cylinders) {
  const HTypeAlgebra alg = cylinder_algebra(space);
  std::vector<drsets::Cylinder> cyl;
  for (const auto& c : cylinders) cyl.push_back(c.to_cylinder());
  std::vector<AdmissibleCylinder> kept;
  for (std::size_t i = 0; i < cylinders.size(); ++i) {
    bool dominated = false;
    for (std::size_t k = 0; k < cylinders.size() && !dominated; ++k) {
      if (k == i || !drsets::cylinder_encloses(alg, cyl[k], cyl[i])) continue;
      // equal members enclose each other; keep the first
      dominated = !drsets::cylinder_encloses(alg, cyl[i], cyl[k]) || k < i;
    }
    if (!dominated) kept.push_back(cylinders[i]);
  }
  std::map<int, std::vector<AdmissibleCylinder>> levels;
  for (const auto& c : kept) levels[c.base_level()].push_back(c);
  MaximalFamily fam;
  fam.space = space;
  for (const auto& [level, members] : levels) {
    for (std::size_t i : greedy_disjoint(alg, members)) fam.cylinders.push_back(members[i]);
  }
  return fam;
}

MaximalFamily build_maximal_family(const Space& space, const GeneratorParams& params, std::uint64_t seed) {
  return prune_to_maximal(space, random_cylinders(space, params, seed));
}

MaximalFamily stacked_chain(const Space& space, int m) {
  if (m < 1) throw std::invalid_argument("stacked_chain: m must be positive");
  const HTypeAlgebra alg = cylinder_algebra(space);
  MaximalFamily fam;
  fam.space = space;
  for (int k = 1; k <= m; ++k) fam.cylinders.emplace_back(htype::n_identity(alg), 2 - k, 2);
  return fam;
}

MaximalityCheck verify_maximal_family(const MaximalFamily& fam) {
  const HTypeAlgebra alg = cylinder_algebra(fam.space);
  MaximalityCheck chk;
  const auto& c = fam.cylinders;
  for (std::size_t a = 0; a < c.size(); ++a) {
    const auto ca = c[a].to_cylinder();
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      const auto cb = c[b].to_cylinder();
      if (c[a].base_level() == c[b].base_level() && !drsets::cylinders_disjoint(alg, ca, cb)) {
        ++chk.same_level_overlaps;
      }
      if (drsets::cylinder_encloses(alg, ca, cb) || drsets::cylinder_encloses(alg, cb, ca)) ++chk.containments;
    }
  }
  return chk;
}

namespace {

OverlapProfile profile_from_counts(const std::map<int, double>& by_k, const std::map<int, double>& se_k, double nu,
                                   bool exact) {
  OverlapProfile prof;
  prof.nu = nu;
  prof.exact = exact;
  prof.bound_constant = std::exp(2.0 * nu) / std::expm1(nu);
  std::vector<double> g_terms;
  for (const auto& [k, m] : by_k) {
    if (k < 1) continue;
    prof.omega_k.emplace_back(k, m);
    const auto it = se_k.find(k);
    prof.omega_k_stderr.push_back(it == se_k.end() ? 0.0 : it->second);
    g_terms.push_back(m);
    if (m > 0.0) prof.max_omega = std::max(prof.max_omega, k);
  }
  prof.g_measure = pairwise_sum(g_terms);
  return prof;
}

}  // namespace

OverlapProfile overlap_profile(const MaximalFamily& fam, const measure::SampleGrid& grid) {
  std::vector<measure::SetDescriptor> sets(fam.cylinders.begin(), fam.cylinders.end());
  std::map<int, std::vector<double>> terms;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    int k = 0;
    for (const auto& s : sets) k += measure::contains_point(grid.space, s, grid.point(i)) ? 1 : 0;
    if (k > 0) terms[k].push_back(grid.weights[i]);
  }
  std::map<int, double> by_k;
  for (auto& [k, t] : terms) by_k[k] = pairwise_sum(t);
  return profile_from_counts(by_k, {}, grid.space.nu(), false);
}

OverlapProfile overlap_profile_exact(const MaximalFamily& fam) {
  const HTypeAlgebra alg = cylinder_algebra(fam.space);
  if (!exact_line(alg)) throw std::invalid_argument("overlap_profile_exact: needs h2 or dr-abelian:1");
  struct Rect {
    double x_lo, x_hi, base;
  };
  std::vector<Rect> rects;
  std::vector<double> xs;
  for (const auto& c : fam.cylinders) {
    const double a0 = std::exp(static_cast<double>(c.log_height()));
    const double x0 = c.n0().z[0];
    rects.push_back({x0 - a0, x0 + a0, std::exp(static_cast<double>(c.base_level()))});
    xs.push_back(x0 - a0);
    xs.push_back(x0 + a0);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::map<int, std::vector<double>> terms;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const double mid = 0.5 * (xs[i] + xs[i + 1]);
    const double dx = xs[i + 1] - xs[i];
    std::vector<double> bases;
    for (const auto& r : rects) {
      if (r.x_lo < mid && mid < r.x_hi) bases.push_back(r.base);
    }
    std::sort(bases.begin(), bases.end());
    // above bases[k-1] and below bases[k], exactly k members cover the column
    for (std::size_t k = 1; k <= bases.size(); ++k) {
      const double top = k < bases.size() ? 1.0 / bases[k] : 0.0;
      const double m = dx * (1.0 / bases[k - 1] - top);
      if (m > 0.0) terms[static_cast<int>(k)].push_back(m);
    }
  }
  std::map<int, double> by_k;
  for (auto& [k, t] : terms) by_k[k] = pairwise_sum(t);
  return profile_from_counts(by_k, {}, 1.0, true);
}

OverlapProfile overlap_profile_mc(const MaximalFamily& fam, std::int64_t samples, std::uint64_t seed) {
  if (fam.cylinders.empty()) throw std::invalid_argument("overlap_profile_mc: empty family");
  std::vector<measure::SetDescriptor> sets(fam.cylinders.begin(), fam.cylinders.end());
  const Window box = measure::union_box(fam.space, sets);
  const double nu = fam.space.nu();
  const int hd = fam.space.horizontal_dim();
  const auto counts = chunked_draws<int>(samples, seed, [&](Rng& rng) {
    std::vector<double> c(static_cast<std::size_t>(hd + 1));
    for (int a = 0; a < hd; ++a) c[a] = rng.uniform(box.lo[a], box.hi[a]);
    c[hd] = box.u_lo - std::log1p(-rng.uniform()) / nu;
    int k = 0;
    for (const auto& s : sets) k += measure::contains_point(fam.space, s, c.data()) ? 1 : 0;
    return k;
  });
  std::map<int, std::int64_t> hits;
  for (int k : counts) {
    if (k > 0) ++hits[k];
  }
  const double m = box.measure(nu);
  const double n = static_cast<double>(samples);
  std::map<int, double> by_k, se_k;
  for (const auto& [k, h] : hits) {
    const double f = static_cast<double>(h) / n;
    by_k[k] = m * f;
    se_k[k] = m * std::sqrt(f * (1.0 - f) / n);
  }
  auto prof = profile_from_counts(by_k, se_k, nu, false);
  // deep overlaps have tiny measure, so the maximum also scans probe points:
  // every centre at every member's centre level and just above every base
  std::vector<double> levels;
  for (const auto& c : fam.cylinders) {
    levels.push_back(c.log_height());
    levels.push_back(c.base_level() + 1e-9);
  }
  std::vector<double> probe(static_cast<std::size_t>(hd + 1));
  for (const auto& centre : fam.cylinders) {
    const auto& n0 = centre.n0();
    for (int a = 0; a < n0.x.size(); ++a) probe[static_cast<std::size_t>(a)] = n0.x[a];
    for (int a = 0; a < n0.z.size(); ++a) probe[static_cast<std::size_t>(n0.x.size() + a)] = n0.z[a];
    for (double u : levels) {
      probe[static_cast<std::size_t>(hd)] = u;
      int k = 0;
      for (const auto& s : sets) k += measure::contains_point(fam.space, s, probe.data()) ? 1 : 0;
      prof.max_omega = std::max(prof.max_omega, k);
    }
  }
  std::int64_t g_hits = 0;
  for (const auto& [k, h] : hits) g_hits += h;
  const double fg = static_cast<double>(g_hits) / n;
  prof.g_stderr = m * std::sqrt(fg * (1.0 - fg) / n);
  return prof;
}

double overlap_a_r_power(double nu, double r) {
  double s = 0.0;
  for (int k = 1; k < 2000; ++k) s += std::pow(k, r) * std::exp(-static_cast<double>(k));
  return std::exp(2.0 * nu) / std::expm1(nu) * s;
}

ExperimentReport overlap_report(const OverlapProfile& prof, const std::string& name) {
  ExperimentReport rep;
  rep.name = name;
  rep.config["exact"] = prof.exact ? "true" : "false";
  auto& t = rep.add_table("omega_k", {"k", "measure", "stderr", "bound", "pass"});
  double worst = 0.0;
  std::int64_t viol = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < prof.omega_k.size(); ++i) {
    const auto [k, m] = prof.omega_k[i];
    const double bound = prof.bound_constant * prof.g_measure * std::exp(-static_cast<double>(k));
    // Monte Carlo entries fail only when significantly above the bound
    const bool ok = m - 3.0 * prof.omega_k_stderr[i] <= bound;
    viol += ok ? 0 : 1;
    worst = std::max(worst, m / bound);
    sum += m;
    t.add_row({static_cast<std::int64_t>(k), m, prof.omega_k_stderr[i], bound, ok});
  }
  auto& s = rep.add_table("summary", {"g_measure", "g_stderr", "max_omega", "bound_constant", "worst_ratio"});
  s.add_row({prof.g_measure, prof.g_stderr, static_cast<std::int64_t>(prof.max_omega), prof.bound_constant, worst});
  rep.expect_le("omega_k_bound_violations", static_cast<double>(viol), 0.0);
  rep.expect_le("omega_k_sum_minus_G", std::abs(sum - prof.g_measure), 1e-9 * std::max(1.0, prof.g_measure));
  auto& lr = rep.add_table("lr_norms", {"r", "norm_r_power", "a_r_power_times_G"});
  for (double r : {1.0, 2.0, 3.0}) {
    double acc = 0.0;
    for (const auto& [k, m] : prof.omega_k) acc += std::pow(k, r) * m;
    const double rhs = overlap_a_r_power(prof.nu, r) * prof.g_measure;
    lr.add_row({r, acc, rhs});
    rep.expect_le("lr_norm_r" + std::to_string(static_cast<int>(r)), acc, rhs);
  }
  return rep;
}

ExperimentReport vitali_experiment(const Space& space, int families, int max_members, std::int64_t samples,
                                   std::uint64_t seed) {
  if (families < 1 || max_members < 1) throw std::invalid_argument("vitali_experiment: bad sizes");
  const HTypeAlgebra alg = cylinder_algebra(space);
  ExperimentReport rep;
  rep.name = "vitali";
  rep.seed = seed;
  rep.config["space"] = space.name();
  rep.config["families"] = std::to_string(families);
  rep.config["max_members"] = std::to_string(max_members);
  auto& t = rep.add_table("families", {"family", "members", "selected", "base_level", "ratio", "ratio_stderr",
                                       "bound", "pass"});
  Rng rng(seed);
  double worst = 0.0;
  double bound = 0.0;
  std::int64_t overlaps = 0;
  for (int f = 0; f < families; ++f) {
    const int size = static_cast<int>(rng.uniform_int(1, max_members));
    const int level = static_cast<int>(rng.uniform_int(-4, -2));
    std::vector<AdmissibleCylinder> fam;
    for (int i = 0; i < size; ++i) {
      NPoint n{htype::Vec(alg.p()), htype::Vec(alg.q())};
      for (int a = 0; a < alg.p(); ++a) n.x[a] = rng.uniform(-3.0, 3.0);
      for (int a = 0; a < alg.q(); ++a) n.z[a] = rng.uniform(-3.0, 3.0);
      const int j = static_cast<int>(rng.uniform_int(level + 2, level + 4));
      fam.emplace_back(std::move(n), j, j - level);
    }
    const auto res = vitali_select(space, fam, samples, substream_seed(seed, static_cast<std::uint64_t>(f)));
    const double upper = res.union_ratio + 3.0 * res.ratio_stderr;
    worst = std::max(worst, upper);
    bound = res.bound;
    for (const auto& a : res.report.assertions) {
      if (a.name == "selected_pair_overlaps") overlaps += static_cast<std::int64_t>(a.observed);
    }
    t.add_row({static_cast<std::int64_t>(f), static_cast<std::int64_t>(size),
               static_cast<std::int64_t>(res.selected.size()), static_cast<std::int64_t>(level), res.union_ratio,
               res.ratio_stderr, res.bound, upper <= res.bound});
  }
  rep.expect_le("worst_ratio_plus_3se", worst, bound);
  rep.expect_le("selected_pair_overlaps", static_cast<double>(overlaps), 0.0);
  return rep;
}

ExperimentReport overlap_experiment(const Space& space, int families, int chain_m, std::int64_t samples,
                                    std::uint64_t seed) {
  const bool exact = exact_line(cylinder_algebra(space));
  auto profile = [&](const MaximalFamily& fam, std::uint64_t s) {
    return exact ? overlap_profile_exact(fam) : overlap_profile_mc(fam, samples, s);
  };
  ExperimentReport rep;
  rep.name = "overlap";
  rep.seed = seed;
  rep.config["space"] = space.name();
  rep.config["families"] = std::to_string(families);
  rep.config["chain_m"] = std::to_string(chain_m);
  rep.config["method"] = exact ? "exact" : "monte_carlo";
  auto& t = rep.add_table("families", {"family", "members", "max_omega", "g_measure", "worst_ratio",
                                       "maximality_ok", "bounds_ok"});
  std::int64_t bound_fail = 0, maximal_fail = 0;
  double worst_all = 0.0;
  auto run = [&](const std::string& label, std::int64_t idx, const MaximalFamily& fam, std::uint64_t s) {
    const auto prof = profile(fam, s);
    const auto sub = overlap_report(prof, label);
    const auto chk = verify_maximal_family(fam);
    const double worst = std::get<double>(sub.table("summary").rows.at(0).at(4));
    worst_all = std::max(worst_all, worst);
    bound_fail += sub.all_pass() ? 0 : 1;
    maximal_fail += chk.ok() ? 0 : 1;
    t.add_row({idx, static_cast<std::int64_t>(fam.cylinders.size()), static_cast<std::int64_t>(prof.max_omega),
               prof.g_measure, worst, chk.ok(), sub.all_pass()});
    return std::make_pair(prof, sub);
  };
  for (int f = 0; f < families; ++f) {
    const auto fs = substream_seed(seed, static_cast<std::uint64_t>(f));
    run("family", f, build_maximal_family(space, GeneratorParams{}, fs), splitmix64(fs));
  }
  if (chain_m > 0) {
    const auto [prof, sub] = run("chain", -1, stacked_chain(space, chain_m), substream_seed(seed, 0xc4a1));
    rep.merge(sub, "chain");
    rep.expect_ge("chain_max_omega", static_cast<double>(prof.max_omega), static_cast<double>(chain_m));
  }
  rep.expect_le("families_with_bound_failures", static_cast<double>(bound_fail), 0.0);
  rep.expect_le("families_not_maximal", static_cast<double>(maximal_fail), 0.0);
  rep.add_table("summary", {"worst_ratio"}).add_row({worst_all});
  return rep;
}

// ------------------------------------------------------------------ eta

int eta_chain_radius(double alpha) {
  const double c = drsets::trig_lower_constant(1.0, 2.0);
  const double big_c = drsets::trig_upper_constant(1.0, 2.0);
  return static_cast<int>(std::floor(std::log(c / (big_c * big_c * kE * alpha))));
}

double eta_kappa() { return 2.0 * (std::sqrt(kE - 1.0) - 1.0) / kE * (1.0 - 1.0 / kE); }

EtaLevel eta_level(double alpha, const EtaOptions& opts) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("eta_level: alpha must lie in (0, 1)");
  if (!(opts.radius_step > 0.0) || opts.horizontal_lattice < 1 || opts.u_nodes_per_unit < 1) {
    throw std::invalid_argument("eta_level: bad lattice options");
  }
  EtaLevel lvl;
  lvl.alpha = alpha;
  int k = 0;
  while (trigonon_area((k + 1) * opts.radius_step) < 1.0 / alpha) ++k;
  if (k == 0) return lvl;
  const double r = k * opts.radius_step;
  lvl.radius = r;
  lvl.witness_area = trigonon_area(r);

  // trigona T_R(z) containing i: y0 > 1, |x0| < sqrt(y0^2 - 1), i above the base
  std::vector<H2Set> witnesses;
  const HPoint e(0.0, 1.0);
  for (int ku = 1; ku * opts.radius_step < r; ++ku) {
    const double y0 = std::exp(ku * opts.radius_step);
    const double reach = std::sqrt((y0 - 1.0) * (y0 + 1.0));
    for (int i = 0; i < opts.horizontal_lattice; ++i) {
      const double s = -1.0 + (2.0 * i + 1.0) / opts.horizontal_lattice;
      const H2Set t = H2Set::trigonon(HPoint(s * reach, y0), r);
      if (hyp2::contains_h2(t, e)) witnesses.push_back(t);
    }
  }
  lvl.witnesses = static_cast<std::int64_t>(witnesses.size());
  if (witnesses.empty()) return lvl;

  double u_lo = std::numeric_limits<double>::infinity();
  double u_hi = -std::numeric_limits<double>::infinity();
  for (const auto& t : witnesses) {
    u_lo = std::min(u_lo, std::log(t.center().y()) - r);
    u_hi = std::max(u_hi, std::log(t.center().y()));
  }
  const int nodes = static_cast<int>(std::ceil((u_hi - u_lo) * opts.u_nodes_per_unit));
  const double du = (u_hi - u_lo) / nodes;
  std::vector<double> slices(static_cast<std::size_t>(nodes));
  parallel_for(slices.size(), [&](std::size_t n) {
    const double u = u_lo + (static_cast<double>(n) + 0.5) * du;
    const double y = std::exp(u);
    std::vector<std::pair<double, double>> iv;
    for (const auto& t : witnesses) {
      const double w = slice_half_width(t, y);
      if (w > 0.0) iv.emplace_back(t.center().x() - w, t.center().x() + w);
    }
    slices[n] = merged_length(iv) * std::exp(-u) * du;
  });
  lvl.e_measure = pairwise_sum(slices);
  return lvl;
}

double trigonon_difference_area(const H2Set& a, const H2Set& b) {
  if (a.kind() != hyp2::SetKind::Trigonon || b.kind() != hyp2::SetKind::Trigonon) {
    throw std::invalid_argument("trigonon_difference_area: both sets must be trigona");
  }
  auto diff_len = [&](double u) {
    const double y = std::exp(u);
    const double wa = slice_half_width(a, y);
    if (wa <= 0.0) return 0.0;
    const double wb = slice_half_width(b, y);
    const double alo = a.center().x() - wa, ahi = a.center().x() + wa;
    const double blo = b.center().x() - wb, bhi = b.center().x() + wb;
    const double overlap = wb > 0.0 ? std::max(0.0, std::min(ahi, bhi) - std::max(alo, blo)) : 0.0;
    return (2.0 * wa - overlap) * std::exp(-u);
  };
  std::vector<double> cuts;
  for (const auto* t : {&a, &b}) {
    cuts.push_back(std::log(t->center().y()) - t->radius());
    cuts.push_back(std::log(t->center().y()));
  }
  std::sort(cuts.begin(), cuts.end());
  const double lo = std::log(a.center().y()) - a.radius();
  const double hi = std::log(a.center().y());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double p = std::max(cuts[i], lo);
    const double q = std::min(cuts[i + 1], hi);
    if (q > p) {
      total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(diff_len, p, q, 15, 1e-12);
    }
  }
  return total;
}

ExperimentReport eta_level_growth(const std::vector<double>& alpha_ladder, const EtaOptions& opts) {
  if (alpha_ladder.size() < 2) throw std::invalid_argument("eta_level_growth: need at least two ladder values");
  ExperimentReport rep;
  rep.name = "eta";
  rep.seed = opts.seed;
  rep.config["radius_step"] = fmt(opts.radius_step);
  rep.config["horizontal_lattice"] = std::to_string(opts.horizontal_lattice);
  rep.config["mc_samples"] = std::to_string(opts.mc_samples);

  const double c_nu = drsets::trig_lower_constant(1.0, 2.0);
  const double big_c = drsets::trig_upper_constant(1.0, 2.0);
  auto& levels = rep.add_table("levels", {"alpha", "log_inv_alpha", "lattice_R", "witnesses", "E_measure",
                                          "alpha_E", "witness_area", "witness_lower", "witness_upper"});
  std::vector<double> xs, ys;
  std::int64_t witness_viol = 0;
  for (double alpha : alpha_ladder) {
    const EtaLevel lvl = eta_level(alpha, opts);
    const double w_lo = c_nu / (big_c * kE * alpha);
    const double w_hi = 1.0 / alpha;
    if (lvl.witnesses > 0 && !(lvl.witness_area >= w_lo && lvl.witness_area < w_hi)) ++witness_viol;
    levels.add_row({alpha, std::log(1.0 / alpha), lvl.radius, lvl.witnesses, lvl.e_measure, alpha * lvl.e_measure,
                    lvl.witness_area, w_lo, w_hi});
    xs.push_back(std::log(1.0 / alpha));
    ys.push_back(alpha * lvl.e_measure);
  }
  const LinearFit fit = fit_line(xs, ys);
  auto& ft = rep.add_table("fit", {"slope", "intercept", "r2", "points"});
  ft.add_row({fit.slope, fit.intercept, fit.r2, static_cast<std::int64_t>(xs.size())});
  rep.expect_gt("fit_slope", fit.slope, 0.0);
  rep.expect_gt("fit_r2", fit.r2, 0.9);
  rep.expect_le("witness_area_out_of_range", static_cast<double>(witness_viol), 0.0);

  // stacked chain w_j = i e^j, j = 1..R_α - 1
  const double kappa = eta_kappa();
  auto& chain = rep.add_table("chain", {"alpha", "R_alpha", "j", "contains_e", "area", "area_bound",
                                        "difference_mc", "difference_stderr", "difference_exact", "kappa_bound"});
  auto& skipped = rep.add_table("skipped", {"alpha", "R_alpha", "reason"});
  std::int64_t contain_viol = 0, area_viol = 0, diff_viol = 0, chain_rows = 0;
  const HPoint e(0.0, 1.0);
  const Space h2 = Space::h2();
  std::uint64_t stream = 0;
  for (double alpha : alpha_ladder) {
    const int r_alpha = eta_chain_radius(alpha);
    if (r_alpha <= 2) {
      skipped.add_row({alpha, static_cast<std::int64_t>(r_alpha), std::string("R_alpha <= 2")});
      continue;
    }
    const double r = r_alpha;
    H2Set prev = H2Set::trigonon(e, r);
    for (int j = 1; j <= r_alpha - 1; ++j) {
      const H2Set t = H2Set::trigonon(HPoint(0.0, std::exp(static_cast<double>(j))), r);
      const bool has_e = hyp2::contains_h2(t, e);
      const double area = hyp2::area_closed_form(t);
      const Window box = measure::set_box(h2, t);
      const auto est = measure::mc_predicate_volume(
          h2, box, opts.mc_samples, substream_seed(opts.seed, stream++), [&](const double* c) {
            const HPoint w(c[0], std::exp(c[1]));
            return hyp2::contains_h2(t, w) && !hyp2::contains_h2(prev, w);
          });
      const double exact = trigonon_difference_area(t, prev);
      const double bound = kappa * std::exp(r);
      contain_viol += has_e ? 0 : 1;
      area_viol += area < 1.0 / alpha ? 0 : 1;
      diff_viol += est.mean >= bound ? 0 : 1;
      ++chain_rows;
      chain.add_row({alpha, static_cast<std::int64_t>(r_alpha), static_cast<std::int64_t>(j), has_e, area,
                     1.0 / alpha, est.mean, est.stderr, exact, bound});
      prev = t;
    }
  }
  rep.expect_le("chain_contains_e_violations", static_cast<double>(contain_viol), 0.0);
  rep.expect_le("chain_area_violations", static_cast<double>(area_viol), 0.0);
  rep.expect_le("chain_difference_violations", static_cast<double>(diff_viol), 0.0);
  rep.config["chain_rows"] = std::to_string(chain_rows);
  return rep;
}

// -------------------------------------------------------------- packing

std::vector<PackingLevel> packing_construct(int max_level, std::int64_t samples_per_ball, std::uint64_t seed) {
  if (max_level < 0 || max_level > 4) throw std::invalid_argument("packing_construct: level must be in 0..4");
  std::vector<PackingLevel> out;
  for (int l = 0; l <= max_level; ++l) {
    PackingLevel lv;
    lv.level = l;
    lv.radius = std::ldexp(1.0, l);
    lv.height = std::exp(-lv.radius);
    lv.rho = 2.0 * lv.height * std::tanh(lv.radius);
    lv.n_count = static_cast<std::int64_t>(std::floor(1.0 / lv.rho)) + 1;
    lv.centers.resize(static_cast<std::size_t>(lv.n_count));
    const double spacing = 2.0 / static_cast<double>(lv.n_count - 1);
    for (std::int64_t i = 0; i < lv.n_count; ++i) lv.centers[i] = -1.0 + spacing * static_cast<double>(i);
    lv.centers.back() = 1.0;
    lv.e_measure = static_cast<double>(lv.n_count) * hyp2::area_closed_form(H2Set::half_ball(HPoint(0, 1), lv.radius));

    // equal spacing makes every neighbouring pair congruent; sample the first,
    // middle and last pairs
    std::vector<std::int64_t> pairs{0, (lv.n_count - 2) / 2, lv.n_count - 2};
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    Rng rng(substream_seed(seed, static_cast<std::uint64_t>(l)));
    for (std::int64_t pi : pairs) {
      const H2Set left = H2Set::half_ball(HPoint(lv.centers[pi], lv.height), lv.radius);
      const H2Set right = H2Set::half_ball(HPoint(lv.centers[pi + 1], lv.height), lv.radius);
      for (const auto* pair : {&left, &right}) {
        const H2Set& self = *pair;
        const H2Set& other = pair == &left ? right : left;
        const auto bb = hyp2::bounding_box(self);
        std::int64_t got = 0;
        while (got < samples_per_ball) {
          const HPoint w(rng.uniform(bb.x_lo, bb.x_hi), rng.uniform(bb.y_lo, bb.y_hi));
          if (!hyp2::contains_h2(self, w)) continue;
          ++got;
          if (hyp2::contains_h2(other, w)) ++lv.disjointness_violations;
        }
      }
    }
    out.push_back(std::move(lv));
  }
  return out;
}

ExperimentReport packing_report(const std::vector<PackingLevel>& levels) {
  ExperimentReport rep;
  rep.name = "packing";
  auto& t = rep.add_table("levels", {"level", "rho", "n", "spacing", "ball_width", "E_measure", "log_n_over_2l",
                                     "disjointness_violations"});
  std::int64_t viol = 0, gap_viol = 0;
  for (const auto& lv : levels) {
    const double spacing = 2.0 / static_cast<double>(lv.n_count - 1);
    const double width = 2.0 * lv.height * std::tanh(lv.radius);
    const double growth = std::log(static_cast<double>(lv.n_count)) / lv.radius;
    viol += lv.disjointness_violations;
    gap_viol += spacing >= width ? 0 : 1;
    t.add_row({static_cast<std::int64_t>(lv.level), lv.rho, lv.n_count, spacing, width, lv.e_measure, growth,
               lv.disjointness_violations});
    if (lv.level >= 2) {
      rep.expect_ge("log_n_over_2l_lower_level" + std::to_string(lv.level), growth, 0.8);
      rep.expect_le("log_n_over_2l_upper_level" + std::to_string(lv.level), growth, 1.2);
    }
  }
  rep.expect_le("sampled_disjointness_violations", static_cast<double>(viol), 0.0);
  rep.expect_le("spacing_below_width", static_cast<double>(gap_viol), 0.0);
  const double d = 2.0;
  rep.expect_lt("satellite_centre_distance", d, 2.0 * std::sinh(1.0));
  return rep;
}

namespace {

Window satellite_box() {
  const double half = std::sinh(1.0) - 1.0;
  return Window{{-half}, {half}, -1.0, 1.0};
}

bool in_region(const HPoint& w) {
  return hyp2::distance_h2(HPoint(-1.0, 1.0), w) < 1.0 && hyp2::distance_h2(HPoint(1.0, 1.0), w) < 1.0;
}

}  // namespace

VolumeEstimate satellite_intersection_measure(std::int64_t samples, std::uint64_t seed) {
  return measure::mc_predicate_volume(Space::h2(), satellite_box(), samples, seed,
                                      [](const double* c) { return in_region(HPoint(c[0], std::exp(c[1]))); });
}

ExperimentReport modified_lp_sums(double p, int max_level, const LpSumOptions& opts) {
  if (!(p >= 1.0 && p <= 4.0)) throw std::invalid_argument("modified_lp_sums: p must lie in [1, 4]");
  ExperimentReport rep;
  rep.name = "modified_lp_sums";
  rep.seed = opts.seed;
  rep.config["p"] = fmt(p);
  rep.config["levels"] = std::to_string(max_level);
  rep.config["region_samples"] = std::to_string(opts.region_samples);

  // one sample of R serves both |R| and the witness averages
  const Window box = satellite_box();
  const Space h2 = Space::h2();
  const double box_measure = box.measure(1.0);
  const double span = -std::expm1(-(box.u_hi - box.u_lo));
  const auto draws = chunked_draws<std::pair<double, double>>(opts.region_samples, opts.seed, [&](Rng& rng) {
    const double x = rng.uniform(box.lo[0], box.hi[0]);
    const double u = box.u_lo - std::log1p(-span * rng.uniform());
    return std::make_pair(x, std::exp(u));
  });
  std::vector<HPoint> region;
  for (const auto& [x, y] : draws) {
    if (in_region(HPoint(x, y))) region.emplace_back(x, y);
  }
  const double n = static_cast<double>(opts.region_samples);
  const double frac = static_cast<double>(region.size()) / n;
  const double r_measure = box_measure * frac;
  const double r_stderr = box_measure * std::sqrt(frac * (1.0 - frac) / n);
  auto& rt = rep.add_table("region", {"measure", "stderr", "samples", "hits"});
  rt.add_row({r_measure, r_stderr, static_cast<std::int64_t>(opts.region_samples),
              static_cast<std::int64_t>(region.size())});

  const auto levels = packing_construct(max_level, 200, opts.seed + 1);
  auto& lt = rep.add_table("levels", {"level", "n", "E_measure", "modified_area", "c_level", "increment",
                                      "partial_sum", "log10_increment"});
  auto& pt = rep.add_table("pointwise", {"level", "points", "witness_misses", "region_misses", "min_average",
                                         "c_level"});
  std::vector<double> inc;
  double partial = 0.0;
  std::int64_t witness_viol = 0, average_viol = 0;
  Rng rng(substream_seed(opts.seed, 0xfeed));
  for (const auto& lv : levels) {
    const H2Set ref = H2Set::modified_half_ball(HPoint(0.0, lv.height), lv.radius);
    const double b_area = hyp2::area_closed_form(ref);
    const double c_l = r_measure / b_area;
    const double i_l = lv.e_measure * std::pow(c_l, p);
    partial += i_l;
    inc.push_back(i_l);
    lt.add_row({static_cast<std::int64_t>(lv.level), lv.n_count, lv.e_measure, b_area, c_l, i_l, partial,
                std::log10(i_l)});

    std::int64_t misses = 0, region_misses = 0;
    double min_avg = std::numeric_limits<double>::infinity();
    for (int s = 0; s < opts.points_per_level; ++s) {
      const auto idx = rng.uniform_int(0, lv.n_count - 1);
      const HPoint zc(lv.centers[static_cast<std::size_t>(idx)], lv.height);
      const H2Set half = H2Set::half_ball(zc, lv.radius);
      const auto bb = hyp2::bounding_box(half);
      HPoint z(zc.x(), zc.y());
      do z = HPoint(rng.uniform(bb.x_lo, bb.x_hi), rng.uniform(bb.y_lo, bb.y_hi));
      while (!hyp2::contains_h2(half, z));
      const H2Set witness = H2Set::modified_half_ball(zc, lv.radius);
      if (!hyp2::contains_h2(witness, z)) ++misses;
      std::int64_t inside = 0;
      for (const auto& w : region) inside += hyp2::contains_h2(witness, w) ? 1 : 0;
      region_misses += static_cast<std::int64_t>(region.size()) - inside;
      // same operation order as r_measure, so a full hit count reproduces c_l exactly
      const double avg = box_measure * (static_cast<double>(inside) / n) / b_area;
      min_avg = std::min(min_avg, avg);
    }
    witness_viol += misses;
    if (min_avg < c_l) ++average_viol;
    pt.add_row({static_cast<std::int64_t>(lv.level), static_cast<std::int64_t>(opts.points_per_level), misses,
                region_misses, min_avg, c_l});
  }
  rep.expect_le("witness_contains_point_violations", static_cast<double>(witness_viol), 0.0);
  rep.expect_le("pointwise_lower_bound_violations", static_cast<double>(average_viol), 0.0);
  rep.expect_gt("region_measure", r_measure, 0.0);

  if (p < 2.0) {
    std::int64_t drops = 0;
    for (std::size_t i = 1; i < inc.size(); ++i) {
      if (std::floor(std::log10(inc[i])) < std::floor(std::log10(inc[i - 1]))) ++drops;
    }
    rep.expect_le("increment_order_of_magnitude_drops", static_cast<double>(drops), 0.0);
  } else if (p == 2.0) {
    const double lo = *std::min_element(inc.begin(), inc.end());
    rep.expect_ge("min_increment_over_first", lo / inc.front(), 0.25);
  } else if (p >= 3.0) {
    rep.expect_lt("last_increment_over_first", inc.back() / inc.front(), 1e-3);
  } else {
    rep.expect_lt("last_increment_over_first", inc.back() / inc.front(), 1.0);
  }
  return rep;
}

// ------------------------------------------------------------- level sets

std::vector<std::string> levelset_function_names() {
  return {"indicator", "indicator_thin", "indicator_sum", "weighted_sum", "inverse_height"};
}

std::function<double(const double*)> levelset_function(const std::string& name, int dim) {
  if (dim < 2) throw std::invalid_argument("levelset_function: need at least two coordinates");
  const int ui = dim - 1;
  const auto box = [ui](const double* c, double x0, double x1, double u0, double u1) {
    return c[0] > x0 && c[0] < x1 && c[ui] > u0 && c[ui] < u1 ? 1.0 : 0.0;
  };
  if (name == "indicator") return [=](const double* c) { return box(c, -0.5, 0.5, -0.5, 0.5); };
  if (name == "indicator_thin") return [=](const double* c) { return box(c, 0.0, 0.25, -1.5, -1.25); };
  if (name == "indicator_sum") {
    return [=](const double* c) {
      return box(c, -0.5, 0.5, -0.5, 0.5) + box(c, 0.7, 1.3, 0.0, 0.4) + box(c, -1.3, -0.7, -1.0, -0.6);
    };
  }
  if (name == "weighted_sum") {
    return [=](const double* c) { return 4.0 * box(c, -0.75, -0.25, -0.5, 0.0) + box(c, 0.25, 1.25, -1.5, 0.5); };
  }
  if (name == "inverse_height") {
    // 1/y truncated at 4 on |x| < 1, y < 1
    return [=](const double* c) {
      return box(c, -1.0, 1.0, -std::numeric_limits<double>::infinity(), 0.0) * std::min(std::exp(-c[ui]), 4.0);
    };
  }
  throw std::invalid_argument("unknown level-set function: " + name);
}

ExperimentReport levelset_suite(const Window& window, const std::vector<int>& resolution,
                                const std::vector<double>& alphas, const std::vector<std::string>& functions,
                                int k_max) {
  const Space h2 = Space::h2();
  auto g = measure::build_grid(h2, window, resolution);
  const auto fam = maxop::admissible_rectangles_for(g, k_max, 1);
  const double lambda = maxop::lambda_star(1.0);
  ExperimentReport rep;
  rep.name = "levelset";
  rep.config["lambda"] = fmt(lambda);
  rep.config["members"] = std::to_string(fam.size());
  rep.config["points"] = std::to_string(g.size());
  rep.config["k_max"] = std::to_string(k_max);
  for (const auto& name : functions) {
    measure::set_values(g, levelset_function(name, g.dim));
    rep.merge(maxop::levelset_table(g, fam, alphas, lambda), name);
  }
  return rep;
}

}  // namespace halfball::experiments
