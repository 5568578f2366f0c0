#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dirint/cli.hpp"
#include "dirint/closed_form.hpp"
#include "dirint/kernel.hpp"
#include "dirint/quadrature.hpp"
#include "dirint/record.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace dirint;

namespace {

py::object to_py_int(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::object to_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.to_string());
}

QuadratureConfig make_config(QuadratureConfig cfg, std::optional<double> abs_tol,
                             std::optional<long long> max_intervals,
                             std::optional<double> truncation_cap) {
  if (abs_tol) cfg.abs_tol = *abs_tol;
  if (max_intervals) cfg.max_intervals = *max_intervals;
  if (truncation_cap) cfg.truncation_cap = *truncation_cap;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact and numerical evaluation of integral_0^inf sin^n(x)/x^m dx";

  py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);

  py::class_<SymbolicReal>(m, "SymbolicReal")
      .def_property_readonly("pi_coeff",
                             [](const SymbolicReal& v) { return to_fraction(v.pi_coeff()); })
      .def_property_readonly("log_coeffs",
                             [](const SymbolicReal& v) {
                               py::dict d;
                               for (const auto& [p, c] : v.log_coeffs()) d[py::int_(p)] = to_fraction(c);
                               return d;
                             })
      .def("__float__", [](const SymbolicReal& v) { return to_float(v); })
      .def("__eq__", [](const SymbolicReal& a, const SymbolicReal& b) { return a == b; })
      .def("__str__", [](const SymbolicReal& v) { return render(v, RenderFormat::Plain); })
      .def("__repr__", [](const SymbolicReal& v) {
        return "SymbolicReal(" + render(v, RenderFormat::Plain) + ")";
      })
      .def("latex", [](const SymbolicReal& v) { return render(v, RenderFormat::Latex); });

  py::class_<ClosedFormResult>(m, "ClosedFormResult")
      .def_property_readonly("is_exact", &ClosedFormResult::is_exact)
      .def_property_readonly("value",
                             [](const ClosedFormResult& r) -> py::object {
                               if (!r.is_exact()) return py::none();
                               return py::cast(r.value());
                             })
      .def_property_readonly("divergence_reason",
                             [](const ClosedFormResult& r) -> py::object {
                               if (r.is_exact()) return py::none();
                               return py::str(std::string(to_string(r.reason())));
                             })
      .def("__str__", [](const ClosedFormResult& r) { return render(r, RenderFormat::Plain); })
      .def("latex", [](const ClosedFormResult& r) { return render(r, RenderFormat::Latex); });

  py::class_<NumericEstimate>(m, "NumericEstimate")
      .def_readonly("value", &NumericEstimate::value)
      .def_readonly("error_bound", &NumericEstimate::error_bound)
      .def_readonly("function_evals", &NumericEstimate::function_evals)
      .def_readonly("intervals", &NumericEstimate::intervals)
      .def("__repr__", [](const NumericEstimate& e) {
        std::ostringstream s;
        s.precision(17);
        s << "NumericEstimate(value=" << e.value << ", error_bound=" << e.error_bound << ")";
        return s.str();
      });

  m.def("classify", [](int mm, int n) { return std::string(to_string(classify({mm, n}))); },
        py::arg("m"), py::arg("n"));
  m.def("evaluate", [](int mm, int n, int max_n) { return evaluate({mm, n}, max_n); },
        py::arg("m"), py::arg("n"), py::arg("max_n") = kDefaultMaxN,
        "Exact closed form of I(m,n), or its divergence reason.");
  m.def("to_json", [](int mm, int n) { return to_json(make_record({mm, n}, evaluate({mm, n}))); },
        py::arg("m"), py::arg("n"), "One OutputRecord as a JSON line.");
  m.def("binomial", [](int n, int l) { return to_py_int(binomial(n, l)); }, py::arg("n"), py::arg("l"));
  m.def("harmonic", [](int k) { return to_fraction(harmonic(k)); }, py::arg("k"));
  m.def("alternating_power_sum", [](int n, int mm) { return to_py_int(alternating_power_sum(n, mm)); },
        py::arg("n"), py::arg("m"));

  m.attr("EULER_GAMMA") = kEulerGamma;
  m.def("ft_theta_over_x", &ft_theta_over_x, py::arg("k"));
  m.def("ft_theta_over_xm", &ft_theta_over_xm, py::arg("m"), py::arg("k"));
  m.def("eval_regularized", &eval_regularized, py::arg("m"), py::arg("n"), py::arg("eps"));

  m.def(
      "integrate_sinc_power",
      [](int mm, int n, std::optional<double> abs_tol, std::optional<long long> max_intervals,
         std::optional<double> truncation_cap) {
        py::gil_scoped_release release;
        return integrate_sinc_power(
            mm, n, make_config(QuadratureConfig::for_order(mm), abs_tol, max_intervals, truncation_cap));
      },
      py::arg("m"), py::arg("n"), py::arg("abs_tol") = py::none(),
      py::arg("max_intervals") = py::none(), py::arg("truncation_cap") = py::none());
  m.def(
      "integrate_regularized",
      [](int mm, int n, double eps, std::optional<double> abs_tol) {
        py::gil_scoped_release release;
        return integrate_regularized(
            mm, n, eps, make_config(QuadratureConfig::for_damped(), abs_tol, std::nullopt, std::nullopt));
      },
      py::arg("m"), py::arg("n"), py::arg("eps"), py::arg("abs_tol") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
