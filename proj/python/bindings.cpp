#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qhcurve/cli.hpp"
#include "qhcurve/error.hpp"
#include "qhcurve/ideal.hpp"
#include "qhcurve/parser.hpp"
#include "qhcurve/quasihom.hpp"
#include "qhcurve/report.hpp"

namespace py = pybind11;
using namespace qhcurve;

namespace {

CheckSelection selection(const std::string& checks) {
  if (checks == "valuation") return CheckSelection::Valuation;
  if (checks == "trace") return CheckSelection::Trace;
  if (checks == "all") return CheckSelection::All;
  throw py::value_error("checks must be 'valuation', 'trace' or 'all'");
}

Ring ring_from(const std::string& generators, std::optional<int> precision, int max_precision) {
  return Ring::build(parse_generators(generators, max_precision), RingOptions{precision, max_precision});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quasihomogeneity of algebroid curves k[[x_1, ..., x_n]] inside k[[t]]";

  // Module-lifetime exception types; attributes mirror the C++ error.
  static PyObject* error_type = PyErr_NewException("qhcurve._core.Error", PyExc_ValueError, nullptr);
  static PyObject* parse_error_type = PyErr_NewException("qhcurve._core.ParseError", error_type, nullptr);
  m.add_object("Error", py::handle(error_type));
  m.add_object("ParseError", py::handle(parse_error_type));

  py::register_exception_translator([](std::exception_ptr p) {
    auto raise = [](PyObject* type, const Error& e, py::dict attrs) {
      py::object exc = py::reinterpret_borrow<py::object>(type)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      for (auto item : attrs) py::setattr(exc, item.first, item.second);
      PyErr_SetObject(type, exc.ptr());
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SyntaxError& e) {
      py::dict attrs;
      attrs["line"] = e.line();
      attrs["column"] = e.column();
      raise(parse_error_type, e, attrs);
    } catch (const Error& e) {
      raise(error_type, e, py::dict());
    }
  });

  m.attr("DEFAULT_MAX_PRECISION") = kDefaultMaxPrecision;

  m.def(
      "analyze_json",
      [](const std::string& generators, std::optional<int> precision, int max_precision, const std::string& checks,
         bool reparametrize) {
        AnalyzeOptions options;
        options.precision = precision;
        options.max_precision = max_precision;
        options.checks = selection(checks);
        options.reparametrize = reparametrize;
        const auto gens = parse_generators(generators, max_precision);
        AnalysisReport report;
        {
          py::gil_scoped_release release;
          report = analyze(gens, options);
        }
        return report_to_json(report).dump();
      },
      py::arg("generators"), py::arg("precision") = py::none(), py::arg("max_precision") = kDefaultMaxPrecision,
      py::arg("checks") = "all", py::arg("reparametrize") = true,
      "Full analysis of one ring; the report as a JSON string.");

  m.def(
      "verdict",
      [](const std::string& generators) { return verdict_line(analyze(parse_generators(generators))); },
      py::arg("generators"), "One-line verdict.");

  m.def(
      "semigroup",
      [](const std::string& generators, std::optional<int> precision, int max_precision) {
        const Ring ring = ring_from(generators, precision, max_precision);
        py::dict out;
        out["gaps"] = ring.semigroup().gaps;
        out["conductor"] = ring.conductor();
        out["genus"] = ring.semigroup().genus;
        out["precision"] = ring.precision();
        return out;
      },
      py::arg("generators"), py::arg("precision") = py::none(), py::arg("max_precision") = kDefaultMaxPrecision);

  m.def(
      "contains",
      [](const std::string& generators, const std::string& element, int max_precision) {
        const Ring ring = ring_from(generators, std::nullopt, max_precision);
        return ring.contains(parse_polynomial(element, max_precision));
      },
      py::arg("generators"), py::arg("element"), py::arg("max_precision") = kDefaultMaxPrecision,
      "Whether the polynomial `element` lies in the ring.");

  m.def(
      "h_invariant",
      [](const std::string& generators) { return h_invariant(ring_from(generators, std::nullopt, kDefaultMaxPrecision)); },
      py::arg("generators"));

  m.def(
      "inverse_valuation",
      [](const std::string& generators, const std::vector<std::string>& ideal_generators) {
        const Ring ring = ring_from(generators, std::nullopt, kDefaultMaxPrecision);
        std::vector<TruncatedSeries> gens;
        for (const auto& g : ideal_generators) gens.push_back(parse_polynomial(g));
        return inverse(FractionalIdeal(std::move(gens)), ring).min_valuation();
      },
      py::arg("generators"), py::arg("ideal_generators"), "v(I^{-1}) for the ideal generated by the given polynomials.");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, in, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "", "Run `qhcurve ARGS...`; returns (exit code, stdout, stderr).");
}
