#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "radmax/bounds.hpp"
#include "radmax/cli.hpp"
#include "radmax/errors.hpp"
#include "radmax/geometry.hpp"
#include "radmax/optimize.hpp"
#include "radmax/oracle.hpp"
#include "radmax/radial_measure.hpp"
#include "radmax/serialize.hpp"

namespace py = pybind11;
using namespace radmax;

namespace {

RadialDensity density(const std::string& name) {
  if (name == "gaussian") return RadialDensity::gaussian();
  if (name == "unitball") return RadialDensity::unit_ball_indicator();
  if (name == "lebesgue") return RadialDensity::lebesgue();
  throw DomainError("unknown measure: " + name);
}

std::string json_text(const Json& j) { return dump_json(j, -1); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lower bounds for centered maximal operators of radial measures.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NonFiniteMeasure>(m, "NonFiniteMeasure", PyExc_ArithmeticError);
  py::register_exception<NoBalancedRadius>(m, "NoBalancedRadius", PyExc_ArithmeticError);
  py::register_exception<BracketError>(m, "BracketError", PyExc_ArithmeticError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.def(
      "p0_json",
      [](const std::string& target, std::size_t grid, double tol) {
        return json_text(to_json(critical_exponent(parse_exponent_kind(target), {grid, tol})));
      },
      py::arg("target"), py::arg("grid") = 2048, py::arg("tol") = 1e-12);

  m.def(
      "log_ball_measure",
      [](const std::string& measure, long n, double rho) {
        return log_ball_measure(density(measure), Dimension(n), rho).log();
      },
      py::arg("measure"), py::arg("n"), py::arg("rho"));

  m.def(
      "log_off_center_ball_measure",
      [](const std::string& measure, long n, double d, double t) {
        return off_center_ball_measure(density(measure), GeometrySpec(Dimension(n), d, t)).log();
      },
      py::arg("measure"), py::arg("n"), py::arg("d"), py::arg("t"));

  m.def(
      "log_T_exact",
      [](const std::string& measure, long n, double p, double R, double r) {
        return T_exact(density(measure), Dimension(n), p, R, r).log();
      },
      py::arg("measure"), py::arg("n"), py::arg("p"), py::arg("R"), py::arg("r"));

  m.def(
      "theorem1_json",
      [](const std::string& measure, long n, double p, double lambda, long exact_threshold) {
        return json_text(
            to_json(theorem1_construction(density(measure), Dimension(n), p, lambda,
                                          exact_threshold)));
      },
      py::arg("measure"), py::arg("n"), py::arg("p"), py::arg("lam"),
      py::arg("exact_threshold") = kExactThreshold);

  m.def(
      "gaussian_construction_json",
      [](long n, double p, double lambda, long exact_threshold) {
        return json_text(to_json(gaussian_construction(Dimension(n), p, lambda, exact_threshold)));
      },
      py::arg("n"), py::arg("p"), py::arg("lam"), py::arg("exact_threshold") = kExactThreshold);

  m.def(
      "unitball_construction_json",
      [](long n, double p, double R, double lambda, long exact_threshold) {
        return json_text(
            to_json(unitball_construction(Dimension(n), p, R, lambda, exact_threshold)));
      },
      py::arg("n"), py::arg("p"), py::arg("R"), py::arg("lam"),
      py::arg("exact_threshold") = kExactThreshold);

  m.def(
      "maximal_function_at",
      [](const std::string& measure, long n, double r, double rho) {
        return maximal_function_at(density(measure), Dimension(n), TestFunctionSpec(r), rho);
      },
      py::arg("measure"), py::arg("n"), py::arg("r"), py::arg("rho"));

  m.def(
      "monte_carlo_json",
      [](const std::string& measure, long n, double d, double t, std::uint64_t samples,
         std::uint64_t seed) {
        MonteCarloResult result;
        {
          py::gil_scoped_release release;
          result = monte_carlo_ball_measure(density(measure), Dimension(n), d, t, samples, seed);
        }
        return json_text(to_json(result));
      },
      py::arg("measure"), py::arg("n"), py::arg("d"), py::arg("t"),
      py::arg("samples") = 1'000'000, py::arg("seed") = 12345);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = radmax::run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
