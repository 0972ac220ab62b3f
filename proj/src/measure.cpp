#include "halfball/measure.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "halfball/random.hpp"

namespace halfball::measure {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ∫_{u_lo}^{u_hi} e^{-νu} du, with u_hi = +inf allowed
double height_measure(double nu, double u_lo, double u_hi) {
  if (std::isinf(u_hi)) return std::exp(-nu * u_lo) / nu;
  return std::exp(-nu * u_lo) * -std::expm1(-nu * (u_hi - u_lo)) / nu;
}

bool abelian_one(const Space& space) {
  return space.is_h2() || (space.algebra().p() == 0 && space.algebra().q() == 1);
}

void require_window(const Space& space, const Window& w, bool finite_top) {
  const auto d = static_cast<std::size_t>(space.horizontal_dim());
  if (w.lo.size() != d || w.hi.size() != d) {
    throw std::invalid_argument("window dimension does not match space " + space.name());
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!(w.hi[i] > w.lo[i]) || !std::isfinite(w.lo[i]) || !std::isfinite(w.hi[i])) {
      throw std::invalid_argument("window is degenerate in a horizontal axis");
    }
  }
  if (!(w.u_hi > w.u_lo) || !std::isfinite(w.u_lo) || (finite_top && !std::isfinite(w.u_hi))) {
    throw std::invalid_argument("window is degenerate in the height axis");
  }
}

htype::SPoint to_spoint(const Space& space, const double* c) {
  const int p = space.is_h2() ? 0 : space.algebra().p();
  const int q = space.is_h2() ? 1 : space.algebra().q();
  return htype::SPoint(Eigen::Map<const htype::Vec>(c, p), Eigen::Map<const htype::Vec>(c + p, q),
                       std::exp(c[p + q]));
}

Window gauge_ball_box(const Space& space, const htype::NPoint& n0, double r, double u_lo) {
  Window w;
  const int p = space.is_h2() ? 0 : space.algebra().p();
  const int q = space.is_h2() ? 1 : space.algebra().q();
  const double xr = 2.0 * r;
  const double zr = r * r + n0.x.norm() * r;
  for (int i = 0; i < p; ++i) {
    w.lo.push_back(n0.x[i] - xr);
    w.hi.push_back(n0.x[i] + xr);
  }
  for (int k = 0; k < q; ++k) {
    w.lo.push_back(n0.z[k] - zr);
    w.hi.push_back(n0.z[k] + zr);
  }
  w.u_lo = u_lo;
  w.u_hi = kInf;
  return w;
}

}  // namespace

Space Space::h2() { return Space{}; }

Space Space::damek_ricci(const htype::HTypeAlgebra& alg) {
  Space s;
  s.alg_ = alg;
  return s;
}

Space Space::parse(const std::string& id) {
  if (id == "h2") return h2();
  const auto colon = id.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("unknown space: " + id);
  const std::string kind = id.substr(0, colon);
  int param = 0;
  try {
    std::size_t used = 0;
    param = std::stoi(id.substr(colon + 1), &used);
    if (used != id.size() - colon - 1) throw std::invalid_argument(id);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad dimension in space id: " + id);
  }
  if (kind == "dr-abelian" || kind == "abelian") return damek_ricci(htype::HTypeAlgebra::degenerate_abelian(param));
  if (kind == "dr-heisenberg" || kind == "heisenberg") return damek_ricci(htype::HTypeAlgebra::heisenberg(param));
  throw std::invalid_argument("unknown space: " + id);
}

const htype::HTypeAlgebra& Space::algebra() const {
  if (!alg_) throw std::logic_error("the hyperbolic plane has no H-type algebra");
  return *alg_;
}

double Space::nu() const { return alg_ ? alg_->nu() : 1.0; }

int Space::horizontal_dim() const { return alg_ ? alg_->p() + alg_->q() : 1; }

std::string Space::name() const { return alg_ ? alg_->name() : "h2"; }

double Window::measure(double nu) const {
  double m = height_measure(nu, u_lo, u_hi);
  for (std::size_t i = 0; i < lo.size(); ++i) m *= hi[i] - lo[i];
  return m;
}

std::string describe(const SetDescriptor& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, hyp2::H2Set>) {
          return v.describe();
        } else if constexpr (std::is_same_v<T, drsets::Cylinder>) {
          return "cylinder(a0=" + std::to_string(v.a0()) + ", R=" + std::to_string(v.radius()) + ")";
        } else {
          return "admissible_cylinder(j=" + std::to_string(v.log_height()) + ", R=" + std::to_string(v.radius()) +
                 ")";
        }
      },
      s);
}

hyp2::HPoint SampleGrid::hpoint(std::size_t i) const {
  const double* c = point(i);
  return hyp2::HPoint(c[0], std::exp(c[1]));
}

htype::SPoint SampleGrid::spoint(std::size_t i) const { return to_spoint(space, point(i)); }

std::size_t SampleGrid::index(const std::vector<int>& cell) const {
  if (shape.empty() || cell.size() != shape.size()) throw std::invalid_argument("index: not a structured grid cell");
  std::size_t idx = 0;
  for (std::size_t a = 0; a < shape.size(); ++a) {
    if (cell[a] < 0 || cell[a] >= shape[a]) throw std::out_of_range("index: cell outside the grid");
    idx = idx * static_cast<std::size_t>(shape[a]) + static_cast<std::size_t>(cell[a]);
  }
  return idx;
}

double SampleGrid::total_weight() const { return pairwise_sum(weights); }

SampleGrid build_grid(const Space& space, const Window& window, const std::vector<int>& resolution) {
  require_window(space, window, true);
  const int hd = space.horizontal_dim();
  const int dim = hd + 1;
  std::vector<int> shape;
  if (resolution.size() == 1) {
    shape.assign(static_cast<std::size_t>(dim), resolution[0]);
  } else if (resolution.size() == static_cast<std::size_t>(dim)) {
    shape = resolution;
  } else {
    throw std::invalid_argument("build_grid: resolution needs 1 or " + std::to_string(dim) + " entries");
  }
  std::size_t total = 1;
  for (int n : shape) {
    if (n < 1) throw std::invalid_argument("build_grid: resolution must be positive");
    total *= static_cast<std::size_t>(n);
  }

  const double nu = space.nu();
  std::vector<double> step(static_cast<std::size_t>(dim));
  double hcell = 1.0;
  for (int a = 0; a < hd; ++a) {
    step[a] = (window.hi[a] - window.lo[a]) / shape[a];
    hcell *= step[a];
  }
  step[hd] = (window.u_hi - window.u_lo) / shape[hd];
  std::vector<double> uweight(static_cast<std::size_t>(shape[hd]));
  for (int k = 0; k < shape[hd]; ++k) {
    const double a = window.u_lo + k * step[hd];
    const double b = k + 1 == shape[hd] ? window.u_hi : a + step[hd];
    uweight[k] = hcell * height_measure(nu, a, b);
  }

  SampleGrid g;
  g.space = space;
  g.window = window;
  g.shape = shape;
  g.dim = dim;
  g.coords.resize(total * static_cast<std::size_t>(dim));
  g.weights.resize(total);
  g.values.assign(total, 0.0);
  std::vector<int> cell(static_cast<std::size_t>(dim), 0);
  for (std::size_t i = 0; i < total; ++i) {
    double* c = g.coords.data() + i * static_cast<std::size_t>(dim);
    for (int a = 0; a < hd; ++a) c[a] = window.lo[a] + (cell[a] + 0.5) * step[a];
    c[hd] = window.u_lo + (cell[hd] + 0.5) * step[hd];
    g.weights[i] = uweight[cell[hd]];
    for (int a = dim - 1; a >= 0; --a) {
      if (++cell[a] < shape[a]) break;
      cell[a] = 0;
    }
  }
  return g;
}

SampleGrid random_cloud(const Space& space, const Window& window, std::int64_t count, std::uint64_t seed) {
  require_window(space, window, true);
  if (count < 1) throw std::invalid_argument("random_cloud: count must be positive");
  const int hd = space.horizontal_dim();
  const double nu = space.nu();
  const double span = -std::expm1(-nu * (window.u_hi - window.u_lo));
  SampleGrid g;
  g.space = space;
  g.window = window;
  g.dim = hd + 1;
  using Coord = std::vector<double>;
  const auto pts = chunked_draws<Coord>(count, seed, [&](Rng& rng) {
    Coord c(static_cast<std::size_t>(hd + 1));
    for (int a = 0; a < hd; ++a) c[a] = rng.uniform(window.lo[a], window.hi[a]);
    c[hd] = window.u_lo - std::log1p(-span * rng.uniform()) / nu;
    return c;
  });
  g.coords.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(g.dim));
  for (const auto& c : pts) g.coords.insert(g.coords.end(), c.begin(), c.end());
  g.weights.assign(static_cast<std::size_t>(count), window.measure(nu) / static_cast<double>(count));
  g.values.assign(static_cast<std::size_t>(count), 0.0);
  return g;
}

void set_values(SampleGrid& g, const std::function<double(const double*)>& f) {
  for (std::size_t i = 0; i < g.size(); ++i) g.values[i] = f(g.point(i));
}

bool contains_point(const Space& space, const SetDescriptor& s, const double* coord) {
  return std::visit(
      [&](const auto& set) -> bool {
        using T = std::decay_t<decltype(set)>;
        if constexpr (std::is_same_v<T, hyp2::H2Set>) {
          if (!abelian_one(space)) throw std::invalid_argument("H2 sets need h2 or dr-abelian:1");
          return hyp2::contains_h2(set, hyp2::HPoint(coord[0], std::exp(coord[1])));
        } else {
          static const htype::HTypeAlgebra line = htype::HTypeAlgebra::degenerate_abelian(1);
          return drsets::cylinder_contains(space.is_h2() ? line : space.algebra(), set, coord);
        }
      },
      s);
}

Window set_box(const Space& space, const SetDescriptor& s) {
  return std::visit(
      [&](const auto& set) -> Window {
        using T = std::decay_t<decltype(set)>;
        if constexpr (std::is_same_v<T, hyp2::H2Set>) {
          if (!abelian_one(space)) throw std::invalid_argument("H2 sets need h2 or dr-abelian:1");
          if (set.kind() == hyp2::SetKind::HalfPlane) {
            throw std::domain_error("set_box: the special half plane reaches the boundary");
          }
          const auto b = hyp2::bounding_box(set);
          return Window{{b.x_lo}, {b.x_hi}, std::log(b.y_lo), std::isinf(b.y_hi) ? kInf : std::log(b.y_hi)};
        } else {
          const drsets::Cylinder c = [&] {
            if constexpr (std::is_same_v<T, drsets::Cylinder>) {
              return set;
            } else {
              return set.to_cylinder();
            }
          }();
          return gauge_ball_box(space, c.n0(), c.base_radius(), std::log(c.base_height()));
        }
      },
      s);
}

IntegralResult integrate_set(const SampleGrid& g, const SetDescriptor& s) {
  IntegralResult out;
  const Window box = set_box(g.space, s);
  for (std::size_t a = 0; a < box.lo.size(); ++a) {
    if (box.lo[a] < g.window.lo[a] || box.hi[a] > g.window.hi[a]) out.truncated = true;
  }
  if (box.u_lo < g.window.u_lo || box.u_hi > g.window.u_hi) out.truncated = true;

  std::vector<double> terms;
  terms.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.values[i] != 0.0 && contains_point(g.space, s, g.point(i))) terms.push_back(g.weights[i] * g.values[i]);
  }
  out.value = pairwise_sum(terms);
  return out;
}

namespace {

VolumeEstimate hit_or_miss_impl(const Space& space, const Window& box, std::int64_t samples, std::uint64_t seed,
                           const std::function<bool(const double*)>& inside) {
  require_window(space, box, false);
  if (samples < 1) throw std::invalid_argument("mc_volume: samples must be positive");
  const int hd = space.horizontal_dim();
  const double nu = space.nu();
  const double span = std::isinf(box.u_hi) ? 1.0 : -std::expm1(-nu * (box.u_hi - box.u_lo));
  VolumeEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.hits = chunked_hits(samples, seed, [&](Rng& rng) {
    double c[64];
    for (int a = 0; a < hd; ++a) c[a] = rng.uniform(box.lo[a], box.hi[a]);
    c[hd] = box.u_lo - std::log1p(-span * rng.uniform()) / nu;
    return inside(c);
  });
  const double m = box.measure(nu);
  const double frac = static_cast<double>(est.hits) / static_cast<double>(samples);
  est.mean = m * frac;
  est.stderr = m * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
  return est;
}

}  // namespace

VolumeEstimate mc_predicate_volume(const Space& space, const Window& box, std::int64_t samples, std::uint64_t seed,
                                   const std::function<bool(const double*)>& inside) {
  if (space.horizontal_dim() >= 64) throw std::invalid_argument("mc_predicate_volume: dimension too large");
  return hit_or_miss_impl(space, box, samples, seed, inside);
}

VolumeEstimate mc_volume(const Space& space, const SetDescriptor& s, const Window& box, std::int64_t samples,
                         std::uint64_t seed) {
  return mc_predicate_volume(space, box, samples, seed, [&](const double* c) { return contains_point(space, s, c); });
}

VolumeEstimate mc_volume(const Space& space, const SetDescriptor& s, std::int64_t samples, std::uint64_t seed) {
  return mc_volume(space, s, set_box(space, s), samples, seed);
}

Window union_box(const Space& space, const std::vector<SetDescriptor>& sets) {
  if (sets.empty()) throw std::invalid_argument("union_box: empty list");
  Window w = set_box(space, sets.front());
  for (std::size_t i = 1; i < sets.size(); ++i) {
    const Window b = set_box(space, sets[i]);
    for (std::size_t a = 0; a < w.lo.size(); ++a) {
      w.lo[a] = std::min(w.lo[a], b.lo[a]);
      w.hi[a] = std::max(w.hi[a], b.hi[a]);
    }
    w.u_lo = std::min(w.u_lo, b.u_lo);
    w.u_hi = std::max(w.u_hi, b.u_hi);
  }
  return w;
}

VolumeEstimate mc_union_volume(const Space& space, const std::vector<SetDescriptor>& sets, const Window& box,
                               std::int64_t samples, std::uint64_t seed) {
  return mc_predicate_volume(space, box, samples, seed, [&](const double* c) {
    for (const auto& s : sets) {
      if (contains_point(space, s, c)) return true;
    }
    return false;
  });
}

}  // namespace halfball::measure
