#include "halfball/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "halfball/drsets.hpp"
#include "halfball/experiments.hpp"
#include "halfball/figures.hpp"
#include "halfball/htype.hpp"
#include "halfball/hyp2.hpp"
#include "halfball/maxop.hpp"
#include "halfball/measure.hpp"
#include "halfball/random.hpp"
#include "halfball/report.hpp"

#ifndef HALFBALL_VERSION
#define HALFBALL_VERSION "0.0.0"
#endif

namespace halfball::cli {

namespace {

using measure::Space;
using measure::Window;

const char* kOutEnv = "HALFBALL_OUT_DIR";

struct Outcome {
  std::vector<ExperimentReport> reports;
  std::vector<std::pair<std::string, std::string>> svgs;  // (file stem, document)
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

double parse_number(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("not a number: " + s);
  return v;
}

// "2^k" -> k, otherwise nullopt-like flag
bool parse_power_of_two(const std::string& s, int& exponent) {
  if (s.rfind("2^", 0) != 0) return false;
  std::size_t used = 0;
  exponent = std::stoi(s.substr(2), &used);
  if (used != s.size() - 2) throw std::invalid_argument("bad power of two: " + s);
  return true;
}

std::vector<int> parse_grid(const std::string& s, int dim) {
  std::vector<int> out;
  for (const auto& tok : split(s, ',')) {
    const double v = parse_number(tok);
    if (v < 1 || v != std::floor(v)) throw std::invalid_argument("--grid: counts must be positive integers");
    out.push_back(static_cast<int>(v));
  }
  if (out.size() != 1 && out.size() != static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("--grid: give one count or one per axis (" + std::to_string(dim) + ")");
  }
  return out;
}

Window parse_window(const std::string& s, int horizontal_dim) {
  const auto tok = split(s, ',');
  if (tok.size() != 4) throw std::invalid_argument("--window: expected lo,hi,u_lo,u_hi");
  Window w;
  const double lo = parse_number(tok[0]);
  const double hi = parse_number(tok[1]);
  w.lo.assign(static_cast<std::size_t>(horizontal_dim), lo);
  w.hi.assign(static_cast<std::size_t>(horizontal_dim), hi);
  w.u_lo = parse_number(tok[2]);
  w.u_hi = parse_number(tok[3]);
  if (!(hi > lo) || !(w.u_hi > w.u_lo) || !std::isfinite(w.u_hi)) {
    throw std::invalid_argument("--window: bounds must be finite and increasing");
  }
  return w;
}

std::string error_json(const std::string& msg) { return nlohmann::json{{"error", msg}}.dump(); }

std::int64_t or_default(std::int64_t v, std::int64_t fallback) { return v > 0 ? v : fallback; }

void stamp(ExperimentReport& rep, const RunConfig& c) {
  rep.seed = c.seed;
  rep.config["subcommand"] = c.subcommand;
  rep.config["space"] = c.space;
}

double space_omega(const htype::HTypeAlgebra& alg, const RunConfig& c) {
  if (alg.p() == 0) return drsets::omega_n(alg, drsets::OmegaMethod::Analytic).mean;
  return drsets::omega_n(alg, drsets::OmegaMethod::MonteCarlo, 400000, substream_seed(c.seed, 9001)).mean;
}

// ------------------------------------------------------------------ validate

Outcome cmd_validate(const RunConfig& c) {
  const Space space = Space::parse(c.space);
  const auto alg = experiments::cylinder_algebra(space);
  const auto draws = or_default(c.samples, 10000);
  const auto r = htype::validate_algebra(alg, static_cast<int>(draws), c.seed);
  ExperimentReport rep;
  rep.name = "validate";
  stamp(rep, c);
  rep.config["algebra"] = alg.name();
  rep.config["draws"] = std::to_string(draws);
  auto& t = rep.add_table("residuals", {"identity", "residual"});
  const std::vector<std::pair<std::string, double>> rows{{"antisymmetry", r.antisymmetry},
                                                         {"defining_relation", r.defining_relation},
                                                         {"h_type", r.h_type},
                                                         {"polarisation", r.polarisation}};
  for (const auto& [name, v] : rows) {
    t.add_row({name, v});
    rep.expect_lt(name, v, 1e-10);
  }
  rep.add_table("algebra", {"name", "p", "q", "nu"})
      .add_row({alg.name(), static_cast<std::int64_t>(alg.p()), static_cast<std::int64_t>(alg.q()), alg.nu()});
  return {{rep}, {}};
}

// --------------------------------------------------------------------- areas

Outcome cmd_areas(const RunConfig& c) {
  const auto radii = c.radii.empty() ? std::vector<double>{1.0} : c.radii;
  const hyp2::HPoint e(0.0, 1.0);
  const Space h2 = Space::h2();
  ExperimentReport rep;
  rep.name = "areas";
  stamp(rep, c);
  auto& t = rep.add_table("areas", {"R", "ball", "half_ball", "trigonon", "rectangle"});
  Table* mc = nullptr;
  if (c.samples > 0) {
    rep.config["samples"] = std::to_string(c.samples);
    mc = &rep.add_table("monte_carlo", {"R", "set", "closed_form", "mean", "stderr", "z_score"});
  }
  std::uint64_t stream = 0;
  for (double r : radii) {
    const std::vector<hyp2::H2Set> sets{hyp2::H2Set::ball(e, r), hyp2::H2Set::half_ball(e, r),
                                        hyp2::H2Set::trigonon(e, r), hyp2::H2Set::rectangle(e, r)};
    std::vector<double> exact;
    for (const auto& s : sets) exact.push_back(hyp2::area_closed_form(s));
    t.add_row({r, exact[0], exact[1], exact[2], exact[3]});
    rep.expect_le("half_ball_is_half_R" + fmt(r), std::abs(exact[1] - 0.5 * exact[0]), 0.0);
    if (mc == nullptr) continue;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const auto est = measure::mc_volume(h2, sets[i], c.samples, substream_seed(c.seed, stream++));
      const double z = est.stderr > 0.0 ? (est.mean - exact[i]) / est.stderr : 0.0;
      const std::string kind(hyp2::to_string(sets[i].kind()));
      mc->add_row({r, kind, exact[i], est.mean, est.stderr, z});
      rep.expect_le(kind + "_R" + fmt(r) + "_abs_z", std::abs(z), 3.0);
    }
  }
  return {{rep}, {}};
}

// -------------------------------------------------------------------- volume

Outcome cmd_volume(const RunConfig& c) {
  const Space space = Space::parse(c.space);
  const auto alg = experiments::cylinder_algebra(space);
  const auto radii = c.radii.empty() ? std::vector<double>{1.5, 2.0} : c.radii;
  const auto samples = or_default(c.samples, 1000000);
  const double nu = alg.nu();

  ExperimentReport rep;
  rep.name = "volume";
  stamp(rep, c);
  rep.config["algebra"] = alg.name();
  rep.config["samples"] = std::to_string(samples);

  VolumeEstimate omega;
  if (alg.p() == 0) {
    omega = drsets::omega_n(alg, drsets::OmegaMethod::Analytic);
  } else {
    omega = drsets::omega_n(alg, drsets::OmegaMethod::MonteCarlo, samples, substream_seed(c.seed, 9001));
  }
  rep.add_table("omega", {"omega", "stderr", "samples"}).add_row({omega.mean, omega.stderr, omega.samples});

  auto& vt = rep.add_table("cylinder", {"R", "closed_form", "mean", "stderr", "z_score"});
  auto& st = rep.add_table("slices", {"R", "k", "slice", "rescaled", "slice_0", "rel_diff"});
  const htype::NPoint n0 = htype::n_identity(alg);
  std::uint64_t stream = 0;
  for (double r : radii) {
    const drsets::Cylinder cyl(n0, 1.0, r);
    const double exact = drsets::cylinder_volume(alg, r, omega.mean);
    const auto est = measure::mc_volume(space, cyl, samples, substream_seed(c.seed, stream++));
    // the reference inherits the uncertainty of ω
    const double ref_se = exact / omega.mean * omega.stderr;
    const double se = std::hypot(est.stderr, ref_se);
    const double z = se > 0.0 ? (est.mean - exact) / se : 0.0;
    vt.add_row({r, exact, est.mean, se, z});
    rep.expect_le("cylinder_R" + fmt(r) + "_abs_z", std::abs(z), 3.0);

    const double s0 = drsets::slice_volume(alg, r, 0, omega.mean);
    double worst = 0.0;
    double total = 0.0;
    for (int k = 0; k < 60; ++k) {
      const double sk = drsets::slice_volume(alg, r, k, omega.mean);
      total += sk;
      const double rescaled = std::exp(k * nu) * sk;
      const double rel = std::abs(rescaled - s0) / s0;
      worst = std::max(worst, rel);
      if (k < 6) st.add_row({r, static_cast<std::int64_t>(k), sk, rescaled, s0, rel});
    }
    rep.expect_le("slice_identity_R" + fmt(r), worst, 1e-12);
    rep.expect_le("slice_sum_R" + fmt(r), std::abs(total - exact) / exact, 1e-12);
  }
  return {{rep}, {}};
}

// -------------------------------------------------------------------- maxfn

maxop::FamilySpec default_family(const Space& space, const measure::SampleGrid& g, const std::string& name,
                                 const RunConfig& c) {
  maxop::FamilySpec fam;
  fam.kind = maxop::family_kind_from_string(name);
  fam.centers_h = maxop::grid_centers(g, 2);
  if (maxop::is_admissible(fam.kind)) {
    fam.center_u = maxop::integer_heights(static_cast<int>(std::floor(g.window.u_lo)) - 1,
                                          static_cast<int>(std::ceil(g.window.u_hi)) + 1);
    fam.radii = maxop::integer_ladder(2, 4);
  } else {
    fam.center_u = maxop::grid_heights(g, 2);
    fam.radii = maxop::geometric_ladder(1.25, 4);
  }
  if (!space.is_h2()) fam.omega = space_omega(space.algebra(), c);
  fam.validate(space);
  return fam;
}

Outcome cmd_maxfn(const RunConfig& c) {
  const Space space = Space::parse(c.space);
  const int dim = space.horizontal_dim() + 1;
  const auto window = parse_window(c.window.empty() ? (space.is_h2() ? "-2,2,-2,1" : "-1,1,-1,1") : c.window,
                                   space.horizontal_dim());
  auto g = measure::build_grid(space, window, parse_grid(c.grid.empty() ? (space.is_h2() ? "32" : "6") : c.grid, dim));
  const std::string fn = c.function == "all" ? "indicator" : c.function;
  measure::set_values(g, experiments::levelset_function(fn, dim));
  const std::string family = c.family.empty() ? (space.is_h2() ? "half_balls" : "cylinders") : c.family;
  const auto fam = default_family(space, g, family, c);

  std::vector<std::int64_t> witness;
  const auto nf = maxop::maximal_on_grid(g, fam, &witness);

  ExperimentReport rep;
  rep.name = "maxfn";
  stamp(rep, c);
  rep.config["family"] = family;
  rep.config["function"] = fn;
  rep.config["members"] = std::to_string(fam.size());
  rep.config["points"] = std::to_string(g.size());

  std::vector<std::string> cols;
  for (int i = 0; i + 1 < dim; ++i) cols.push_back("h" + std::to_string(i));
  cols.insert(cols.end(), {"u", "f", "Nf", "witness"});
  auto& t = rep.add_table("maxfn", cols);
  double f_max = 0.0;
  double nf_max = 0.0;
  double nf_min = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<Cell> row;
    for (int k = 0; k < dim; ++k) row.emplace_back(g.point(i)[k]);
    row.emplace_back(g.values[i]);
    row.emplace_back(nf[i]);
    row.emplace_back(witness[i]);
    t.add_row(std::move(row));
    f_max = std::max(f_max, std::abs(g.values[i]));
    nf_max = std::max(nf_max, nf[i]);
    nf_min = std::min(nf_min, nf[i]);
  }
  auto& nt = rep.add_table("norms", {"p", "f_norm", "Nf_norm"});
  for (double p : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
    nt.add_row({p, maxop::lp_norm(g, p), maxop::lp_norm(g, nf, p)});
  }
  rep.expect_le("Nf_max_over_f_max", nf_max, f_max * (1.0 + 1e-12));
  rep.expect_ge("Nf_min", nf_min, 0.0);
  if (space.is_h2() && fam.kind == maxop::FamilyKind::HalfBalls) rep.merge(maxop::operator_compare(g), "compare");
  return {{rep}, {}};
}

// ------------------------------------------------------------------ levelset

Outcome cmd_levelset(const RunConfig& c) {
  const Space space = Space::parse(c.space);
  if (!space.is_h2()) throw std::invalid_argument("levelset runs on h2 (ν = 1)");
  if (!c.family.empty() && c.family != "admissible_rectangles") {
    throw std::invalid_argument("levelset uses the admissible_rectangles family");
  }
  const auto window = parse_window(c.window.empty() ? "-2,2,-2,1" : c.window, 1);
  const auto res = parse_grid(c.grid.empty() ? "48" : c.grid, 2);
  const auto alphas = parse_alpha_ladder(c.alpha_ladder.empty() ? "2^-3..2^-10" : c.alpha_ladder);
  const auto fns = c.function == "all" ? experiments::levelset_function_names() : split(c.function, ',');
  auto rep = experiments::levelset_suite(window, res, alphas, fns);
  stamp(rep, c);
  rep.config["alpha_ladder"] = c.alpha_ladder.empty() ? "2^-3..2^-10" : c.alpha_ladder;
  return {{rep}, {}};
}

// ----------------------------------------------------- overlap / vitali / eta

Outcome cmd_overlap(const RunConfig& c) {
  const Space space = Space::parse(c.space);
  auto rep = experiments::overlap_experiment(space, c.families > 0 ? c.families : 100, 8,
                                             or_default(c.samples, 200000), c.seed);
  stamp(rep, c);
  return {{rep}, {}};
}

Outcome cmd_vitali(const RunConfig& c) {
  const Space space = Space::parse(c.space);
  auto rep = experiments::vitali_experiment(space, c.families > 0 ? c.families : 100, 50,
                                            or_default(c.samples, 200000), c.seed);
  stamp(rep, c);
  return {{rep}, {}};
}

Outcome cmd_eta(const RunConfig& c) {
  const auto ladder = parse_alpha_ladder(c.alpha_ladder.empty() ? "2^-6..2^-14" : c.alpha_ladder);
  experiments::EtaOptions opts;
  opts.seed = c.seed;
  if (c.samples > 0) opts.mc_samples = c.samples;
  auto rep = experiments::eta_level_growth(ladder, opts);
  stamp(rep, c);
  return {{rep}, {}};
}

// ---------------------------------------------------------------------- pack

Outcome cmd_pack(const RunConfig& c) {
  Outcome out;
  const auto levels = experiments::packing_construct(c.levels, or_default(c.samples, 2000), c.seed);
  auto rep = experiments::packing_report(levels);
  stamp(rep, c);
  out.reports.push_back(std::move(rep));
  for (double p : c.p_values) {
    experiments::LpSumOptions opts;
    opts.seed = substream_seed(c.seed, static_cast<std::uint64_t>(p * 1000.0));
    if (c.samples > 0) opts.region_samples = c.samples;
    auto lp = experiments::modified_lp_sums(p, c.levels, opts);
    lp.name += "_p" + fmt(p);
    lp.config["subcommand"] = c.subcommand;
    out.reports.push_back(std::move(lp));
  }
  return out;
}

// ------------------------------------------------------------------- figures

Outcome cmd_figures(const RunConfig& c) {
  Outcome out;
  const auto want = [&](const std::string& k) { return c.figure == "all" || c.figure == k; };
  if (c.figure != "all" && c.figure != "axes" && c.figure != "rectangle" && c.figure != "tiling" &&
      c.figure != "packing") {
    throw std::invalid_argument("--figure must be axes, rectangle, tiling, packing or all");
  }
  if (c.z.size() != 2) throw std::invalid_argument("--z expects x,y");
  const double r = c.radii.empty() ? 1.0 : c.radii.front();
  if (want("axes")) out.svgs.emplace_back("figure_axes", figures::axes_svg());
  if (want("rectangle")) {
    out.svgs.emplace_back("figure_rectangle", figures::rectangle_svg(hyp2::HPoint(c.z[0], c.z[1]), r));
  }
  if (want("tiling")) out.svgs.emplace_back("figure_tiling", figures::tiling_svg(5, r));
  if (want("packing")) out.svgs.emplace_back("figure_packing", figures::packing_svg(c.level));
  return out;
}

const std::map<std::string, std::function<Outcome(const RunConfig&)>>& commands() {
  static const std::map<std::string, std::function<Outcome(const RunConfig&)>> table{
      {"validate", cmd_validate}, {"areas", cmd_areas},   {"volume", cmd_volume}, {"maxfn", cmd_maxfn},
      {"levelset", cmd_levelset}, {"overlap", cmd_overlap}, {"vitali", cmd_vitali}, {"eta", cmd_eta},
      {"pack", cmd_pack},         {"figures", cmd_figures}};
  return table;
}

// ------------------------------------------------------------------- output

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << body;
}

void emit(const RunConfig& c, const Outcome& o, std::ostream& out) {
  const bool to_dir = !c.out_dir.empty();
  if (to_dir) std::filesystem::create_directories(c.out_dir);
  const std::filesystem::path dir(c.out_dir);

  if (!o.svgs.empty()) {
    if (!to_dir && o.svgs.size() > 1) throw std::invalid_argument("several figures need --out");
    for (const auto& [stem, doc] : o.svgs) {
      if (to_dir) {
        write_file(dir / (stem + ".svg"), doc);
      } else {
        out << doc;
      }
    }
    return;
  }

  if (c.format == Format::Svg) throw std::invalid_argument("--format svg applies to the figures subcommand");
  if (c.format == Format::Json) {
    const std::string body = to_json_reports(o.reports, HALFBALL_VERSION) + "\n";
    if (to_dir) {
      write_file(dir / (c.subcommand + ".json"), body);
    } else {
      out << body;
    }
    return;
  }
  const bool single = o.reports.size() == 1 && o.reports.front().tables.size() == 1;
  for (const auto& rep : o.reports) {
    const std::string prefix = o.reports.size() == 1 ? c.subcommand : c.subcommand + "_" + rep.name;
    for (const auto& t : rep.tables) {
      if (to_dir) {
        write_file(dir / (prefix + "_" + t.name + ".csv"), to_csv(t));
      } else {
        if (!single) out << "# " << prefix << "_" << t.name << "\n";
        out << to_csv(t);
      }
    }
  }
}

const char* kFooter = R"(CSV tables (one file per table with --format csv --out DIR):
  validate  residuals: identity,residual          algebra: name,p,q,nu
  areas     areas: R,ball,half_ball,trigonon,rectangle
            monte_carlo (with --samples): R,set,closed_form,mean,stderr,z_score
  volume    omega: omega,stderr,samples  cylinder: R,closed_form,mean,stderr,z_score
            slices: R,k,slice,rescaled,slice_0,rel_diff
  maxfn     maxfn: h0..,u,f,Nf,witness   norms: p,f_norm,Nf_norm   compare.*: see JSON
  levelset  <function>.levelset: alpha,measure,rhs_bound,pass
            <function>.summary: worst_ratio,lambda,tolerance
  overlap   families, chain.omega_k, chain.summary, chain.lr_norms
  vitali    families: per-family selection and union ratio
  eta       levels, fit, chain, skipped
  pack      packing levels; modified_lp_sums_p*: region, levels, pointwise
JSON schema: {meta:{name,seed,version,config}, tables:[{name,columns,rows}],
              assertions:[{name,bound,observed,pass}]}
Exit status: 0 all assertions pass, 1 some fail (JSON list on stderr), 2 error.
The default output directory is taken from HALFBALL_OUT_DIR.)";

}  // namespace

std::vector<double> parse_alpha_ladder(const std::string& spec) {
  std::vector<double> out;
  for (const auto& tok : split(spec, ',')) {
    const auto dots = tok.find("..");
    if (dots != std::string::npos) {
      int a = 0;
      int b = 0;
      if (!parse_power_of_two(tok.substr(0, dots), a) || !parse_power_of_two(tok.substr(dots + 2), b)) {
        throw std::invalid_argument("alpha ladder ranges must look like 2^-3..2^-10");
      }
      const int step = b >= a ? 1 : -1;
      for (int k = a;; k += step) {
        out.push_back(std::ldexp(1.0, k));
        if (k == b) break;
      }
      continue;
    }
    int k = 0;
    out.push_back(parse_power_of_two(tok, k) ? std::ldexp(1.0, k) : parse_number(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty alpha ladder");
  for (double a : out) {
    if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("alpha values must be positive");
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto& cmds = commands();
    const auto it = cmds.find(config.subcommand);
    if (it == cmds.end()) throw std::invalid_argument("unknown subcommand: " + config.subcommand);
    if (config.nu != 0.0) {
      const Space space = Space::parse(config.space);
      if (std::abs(config.nu - space.nu()) > 1e-12) {
        throw std::invalid_argument("--nu " + fmt(config.nu) + " does not match space " + config.space +
                                    " (nu = " + fmt(space.nu()) + ")");
      }
    }
    const Outcome o = it->second(config);
    emit(config, o, out);
    std::vector<Assertion> failed;
    for (const auto& rep : o.reports) {
      for (const auto& a : rep.failures()) {
        Assertion named = a;
        if (o.reports.size() > 1) named.name = rep.name + "." + a.name;
        failed.push_back(named);
      }
    }
    if (!failed.empty()) {
      err << failures_json(failed) << "\n";
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    err << error_json(e.what()) << "\n";
    return 2;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Half-ball maximal operators on the hyperbolic plane and Damek-Ricci spaces", "halfball"};
  app.footer(kFooter);
  app.set_version_flag("--version", HALFBALL_VERSION);
  app.set_config("--config", "", "Flat key=value file; command-line flags take precedence");
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig c;
  if (const char* env = std::getenv(kOutEnv)) c.out_dir = env;
  std::string format = "json";
  app.add_option("--space", c.space, "h2 | dr-abelian:q | dr-heisenberg:d")->capture_default_str();
  app.add_option("--family", c.family,
                 "balls | half_balls | trigona | rectangles | admissible_rectangles | modified_half_balls | "
                 "cylinders | admissible_cylinders");
  app.add_option("--seed", c.seed, "Master seed of every random stream")->capture_default_str();
  app.add_option("--samples", c.samples, "Monte Carlo sample count (0: subcommand default)");
  app.add_option("--grid", c.grid, "Grid resolution: n or n1,...,nd");
  app.add_option("--window", c.window, "Grid window lo,hi,u_lo,u_hi with u = log height");
  app.add_option("--alpha-ladder", c.alpha_ladder, "Levels, e.g. 2^-3..2^-10 or 0.5,0.25");
  app.add_option("--out", c.out_dir, "Output directory (default $HALFBALL_OUT_DIR, else stdout)");
  app.add_option("--format", format, "json | csv | svg")
      ->check(CLI::IsMember({"json", "csv", "svg"}))
      ->capture_default_str();
  app.add_option("--R", c.radii, "Radius or radii");
  app.add_option("--nu", c.nu, "Homogeneous dimension check");
  app.add_option("--L", c.levels, "Packing levels 0..L (L <= 4)")->capture_default_str();
  app.add_option("--p", c.p_values, "Exponents for the packing L^p sums")->capture_default_str();
  app.add_option("--figure", c.figure, "axes | rectangle | tiling | packing | all")->capture_default_str();
  app.add_option("--function", c.function, "Level-set test function(s), comma separated, or all")
      ->capture_default_str();
  app.add_option("--families", c.families, "Number of random families (overlap, vitali)");
  app.add_option("--z", c.z, "Centre x y of the rectangle figure")->expected(2)->capture_default_str();
  app.add_option("--level", c.level, "Level of the packing figure")->capture_default_str();

  for (const auto& [name, fn] : commands()) {
    (void)fn;
    app.add_subcommand(name, "Run " + name)->callback([&c, n = name] { c.subcommand = n; });
  }
  app.get_subcommand("validate")->description("Check the H-type algebra identities");
  app.get_subcommand("areas")->description("Closed-form areas of balls, half balls, trigona and rectangles");
  app.get_subcommand("volume")->description("Cylinder volumes and slice identities");
  app.get_subcommand("maxfn")->description("Maximal function of a test function on a grid");
  app.get_subcommand("levelset")->description("L log L level-set table over an alpha ladder");
  app.get_subcommand("overlap")->description("Overlap decay of maximal cylinder families");
  app.get_subcommand("vitali")->description("Greedy Vitali selection on one horocycle");
  app.get_subcommand("eta")->description("Level-set growth of the trigonon operator");
  app.get_subcommand("pack")->description("Half-ball packing and modified L^p sums");
  app.get_subcommand("figures")->description("SVG figures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << HALFBALL_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json(e.what()) << "\n";
    return 2;
  }
  c.format = format == "csv" ? Format::Csv : format == "svg" ? Format::Svg : Format::Json;
  if (c.subcommand == "figures") c.format = Format::Svg;
  return run(c, out, err);
}

}  // namespace halfball::cli
