#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "halfball/cli.hpp"
#include "halfball/experiments.hpp"
#include "halfball/htype.hpp"
#include "halfball/hyp2.hpp"
#include "halfball/maxop.hpp"
#include "halfball/measure.hpp"

namespace py = pybind11;
using namespace halfball;

namespace {

hyp2::H2Set make_set(const std::string& kind, double x, double y, double radius) {
  const hyp2::HPoint z(x, y);
  switch (hyp2::set_kind_from_string(kind)) {
    case hyp2::SetKind::Ball: return hyp2::H2Set::ball(z, radius);
    case hyp2::SetKind::HalfPlane: return hyp2::H2Set::half_plane(z);
    case hyp2::SetKind::HalfBall: return hyp2::H2Set::half_ball(z, radius);
    case hyp2::SetKind::Trigonon: return hyp2::H2Set::trigonon(z, radius);
    case hyp2::SetKind::Rectangle: return hyp2::H2Set::rectangle(z, radius);
    case hyp2::SetKind::ModifiedHalfBall: return hyp2::H2Set::modified_half_ball(z, radius);
    case hyp2::SetKind::AdmissibleRectangle: break;
  }
  throw std::invalid_argument("use admissible_rectangle parameters (x, j, K) via the CLI");
}

htype::SPoint make_spoint(const std::vector<double>& x, const std::vector<double>& z, double a) {
  return {Eigen::Map<const htype::Vec>(x.data(), static_cast<Eigen::Index>(x.size())),
          Eigen::Map<const htype::Vec>(z.data(), static_cast<Eigen::Index>(z.size())), a};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Half-ball maximal operator geometry and experiments";

  m.def("distance_h2", [](double x1, double y1, double x2, double y2) {
    return hyp2::distance_h2({x1, y1}, {x2, y2});
  }, py::arg("x1"), py::arg("y1"), py::arg("x2"), py::arg("y2"));

  m.def("area", [](const std::string& kind, double radius) {
    return hyp2::area_closed_form(make_set(kind, 0.0, 1.0, radius));
  }, py::arg("kind"), py::arg("radius"), "Closed-form hyperbolic area of a set of the given kind and radius.");

  m.def("contains", [](const std::string& kind, double x, double y, double radius, double wx, double wy) {
    return hyp2::contains_h2(make_set(kind, x, y, radius), {wx, wy});
  }, py::arg("kind"), py::arg("x"), py::arg("y"), py::arg("radius"), py::arg("wx"), py::arg("wy"));

  m.def("mc_area", [](const std::string& kind, double x, double y, double radius, std::int64_t samples,
                      std::uint64_t seed) {
    py::gil_scoped_release release;
    const auto est = measure::mc_volume(measure::Space::h2(), make_set(kind, x, y, radius), samples, seed);
    return std::make_pair(est.mean, est.stderr);
  }, py::arg("kind"), py::arg("x"), py::arg("y"), py::arg("radius"), py::arg("samples"), py::arg("seed") = 1,
     "Monte Carlo (mean, stderr) of the area.");

  m.def("dist_s", [](const std::string& space, const std::vector<double>& x1, const std::vector<double>& z1,
                     double a1, const std::vector<double>& x2, const std::vector<double>& z2, double a2) {
    const auto alg = experiments::cylinder_algebra(measure::Space::parse(space));
    return htype::dist_s(alg, make_spoint(x1, z1, a1), make_spoint(x2, z2, a2));
  }, py::arg("space"), py::arg("x1"), py::arg("z1"), py::arg("a1"), py::arg("x2"), py::arg("z2"), py::arg("a2"),
     "Riemannian distance on a Damek-Ricci space given (X, Z, a) coordinates.");

  m.def("nu", [](const std::string& space) { return measure::Space::parse(space).nu(); }, py::arg("space"));
  m.def("lambda_star", &maxop::lambda_star, py::arg("nu") = 1.0);
  m.def("eta_kappa", &experiments::eta_kappa);
  m.def("eta_chain_radius", &experiments::eta_chain_radius, py::arg("alpha"));

  m.def("packing_levels", [](int max_level) {
    py::list out;
    for (const auto& lv : experiments::packing_construct(max_level)) {
      py::dict d;
      d["level"] = lv.level;
      d["rho"] = lv.rho;
      d["n"] = lv.n_count;
      d["E_measure"] = lv.e_measure;
      d["disjointness_violations"] = lv.disjointness_violations;
      out.append(d);
    }
    return out;
  }, py::arg("max_level"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::main_entry(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs a command-line invocation; returns (exit_code, stdout, stderr).");
}
