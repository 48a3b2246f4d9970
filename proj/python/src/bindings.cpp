#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "cli.hpp"
#include "mlgap/cover.hpp"
#include "mlgap/jp.hpp"
#include "mlgap/report.hpp"
#include "mlgap/sft_io.hpp"
#include "mlgap/symbolic.hpp"

namespace py = pybind11;
using namespace mlgap;

namespace {

py::dict enclosure(const Interval& x, int digits) {
  py::dict d;
  d["lower"] = x.lower().to_fixed(digits, MPFR_RNDD);
  d["upper"] = x.upper().to_fixed(digits, MPFR_RNDU);
  d["value"] = x.midpoint().to_double();
  return d;
}

}  // namespace

PYBIND11_MODULE(_mlgap, m) {
  m.doc() = "Bindings for the mlgap core library.";

  m.def(
      "markov_value",
      [](const std::string& period, int digits) {
        const MarkovValue v = markov_value(PeriodicSeq{Word::parse(period)});
        py::dict d = enclosure(approx(SurdSum(v.value), digits), digits);
        d["exact"] = v.value.to_string();
        d["position"] = v.position;
        return d;
      },
      py::arg("period"), py::arg("digits") = 30, "Markov value of the periodic sequence with the given period.");

  m.def(
      "gap_constant",
      [](const std::string& b, const std::string& c, int digits) {
        const GapConstant g = gap_constant(resolve_spec(b), resolve_spec(c));
        py::dict d = enclosure(approx(g.value, digits), digits);
        d["exact"] = g.value.to_string();
        d["expression"] = g.expression();
        d["majorant"] = g.majorant.to_string();
        return d;
      },
      py::arg("b"), py::arg("c"), py::arg("digits") = 30, "c(B, C) for two spec files or builtin names.");

  m.def(
      "verify_case",
      [](const std::string& name) {
        const Certificate cert = verify_case(resolve_case(name));
        py::dict d;
        d["case"] = cert.case_name;
        d["s"] = cert.s;
        d["sum_upper"] = cert.sum_at_s.upper().to_fixed(12, MPFR_RNDU);
        d["verdict"] = cert.verdict;
        d["margin_met"] = cert.margin_met;
        return d;
      },
      py::arg("name"), "Covering certificate for a case file or builtin case.");

  m.def(
      "estimate_dimension",
      [](const std::string& name, std::optional<int> order, int threads) {
        const GaussSystem sys = make_gauss_system(resolve_spec(name));
        py::gil_scoped_release release;
        const DimEstimate e = estimate_dimension(sys, order.value_or(default_order(sys)), 1e-10, threads);
        py::gil_scoped_acquire acquire;
        py::dict d;
        d["set"] = e.set_name;
        d["value"] = e.value;
        d["order"] = e.order;
        d["residual"] = e.residual;
        d["method"] = e.method;
        return d;
      },
      py::arg("name"), py::arg("order") = py::none(), py::arg("threads") = 1,
      "Jenkinson-Pollicott estimate (heuristic).");

  m.def(
      "pressure_bracket",
      [](const std::string& name, int depth) {
        const PressureBracket b = pressure_bracket(make_gauss_system(resolve_spec(name)), depth);
        return py::make_tuple(b.lower.get_d(), b.upper.get_d());
      },
      py::arg("name"), py::arg("depth") = 8, "Cylinder-pressure bracket for the dimension.");

  m.def(
      "report",
      [](const std::string& mode, const std::string& format) {
        const Mode md = parse_mode(mode);
        const GlobalReport r = assemble(md, compute_inputs(md));
        return format == "structured" ? to_structured(r) : to_text(r);
      },
      py::arg("mode") = "rigorous", py::arg("format") = "structured", "Piecewise global bound.");

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int status = cli::run(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Run the command line; returns (status, stdout, stderr).");
}
