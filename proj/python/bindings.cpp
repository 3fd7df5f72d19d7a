#include "diffortho/cli.hpp"
#include "diffortho/serialize.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace diffortho;

namespace {

ExtScalar to_ext(const py::handle& v) {
  if (py::isinstance<py::str>(v)) return parse_scalar(v.cast<std::string>());
  return parse_scalar(py::str(v).cast<std::string>());
}

ExtComplex to_ext_complex(std::complex<double> z) { return ExtComplex::from(z); }

std::vector<std::complex<double>> to_py(const std::vector<ExtComplex>& zs) {
  std::vector<std::complex<double>> out;
  out.reserve(zs.size());
  for (const auto& z : zs) out.push_back(z.to_complex());
  return out;
}

std::vector<std::string> decimals(const std::vector<ExtScalar>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_decimal(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(_diffortho, m) {
  m.doc() = "Differentially orthogonal polynomials for the Laguerre and Hermite operators";

  static py::exception<Error> exc(m, "DiffOrthoError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  m.def("set_precision", &set_precision_bits, py::arg("bits"));
  m.def("precision", &precision_bits);

  py::class_<MeasureSpec>(m, "MeasureSpec")
      .def(py::init([](const std::string& family, const py::list& rho, const py::object& alpha) {
             std::vector<ExtScalar> coeffs;
             for (const auto& v : rho) coeffs.push_back(to_ext(v));
             MeasureSpec spec = make_spec(parse_case(family, to_ext(alpha)), coeffs);
             validate_spec(spec);
             return spec;
           }),
           py::arg("family"), py::arg("rho"), py::arg("alpha") = "0")
      .def_property_readonly("m", &MeasureSpec::m)
      .def_property_readonly("family", [](const MeasureSpec& s) { return s.basis.name(); })
      .def("to_json", &spec_json)
      .def_static("from_json", &parse_spec_json);

  m.def(
      "construct",
      [](const MeasureSpec& spec, std::size_t n) {
        DiffOrthoPoly d = qhat(spec, n);
        py::dict out;
        out["n"] = n;
        out["coeffs_basis"] = decimals(d.qhat.coeffs);
        out["pn_basis"] = decimals(d.pn.coeffs);
        out["eigen_residual"] = eigen_residual(d).convert_to<double>();
        out["json"] = poly_json(d);
        return out;
      },
      py::arg("spec"), py::arg("n"));

  m.def(
      "diff_orthogonality_residuals",
      [](const MeasureSpec& spec, std::size_t n) {
        std::vector<double> out;
        for (const auto& r : diff_orthogonality_residuals(qhat(spec, n), n - 1)) out.push_back(r.convert_to<double>());
        return out;
      },
      py::arg("spec"), py::arg("n"));

  m.def(
      "zeros",
      [](const MeasureSpec& spec, std::size_t n, bool normalise) {
        ZeroCloud zc = roots(qhat(spec, n).qhat);
        if (normalise) zc = normalized(zc, scaling_constant(spec.basis, n));
        return to_py(zc.zeros);
      },
      py::arg("spec"), py::arg("n"), py::arg("normalized") = true);

  m.def(
      "nth_root",
      [](const MeasureSpec& spec, std::complex<double> z, std::size_t n) {
        auto rows = nth_root_report(spec, {to_ext_complex(z)}, {n});
        return py::make_tuple(rows[0].value.convert_to<double>(), rows[0].limit.convert_to<double>());
      },
      py::arg("spec"), py::arg("z"), py::arg("n"));

  m.def(
      "level_curve",
      [](const std::string& family, std::complex<double> zeta, double step, const py::object& alpha) {
        Case c = parse_case(family, to_ext(alpha));
        ExtComplex zt = to_ext_complex(zeta);
        return trace_level_curve(c, zt, default_window(c, zt), step).polylines;
      },
      py::arg("family"), py::arg("zeta"), py::arg("step") = 0.02, py::arg("alpha") = "0");

  m.def(
      "stagnation",
      [](const MeasureSpec& spec, std::size_t n) {
        StagnationReport rep = stagnation_verify(spec, n);
        py::dict out;
        out["points"] = to_py(rep.system.points);
        out["strengths"] = to_py(rep.system.strengths);
        out["pn_zeros"] = to_py(rep.pn_zeros);
        out["max_residual"] = rep.max_residual.convert_to<double>();
        out["recovered"] = rep.recovered;
        out["max_recovery_distance"] = rep.max_recovery_distance.convert_to<double>();
        return out;
      },
      py::arg("spec"), py::arg("n"));

  m.def(
      "velocity",
      [](const std::string& family, const std::vector<std::complex<double>>& points, std::complex<double> z,
         const py::object& alpha) {
        std::vector<ExtComplex> pts;
        for (auto p : points) pts.push_back(to_ext_complex(p));
        FlowSystem sys = make_flow_system(parse_case(family, to_ext(alpha)), pts);
        return potential_and_velocity(sys, to_ext_complex(z)).velocity.to_complex();
      },
      py::arg("family"), py::arg("points"), py::arg("z"), py::arg("alpha") = "0");

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = execute(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
