#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gft/documents.hpp"
#include "gft/harness.hpp"

namespace py = pybind11;
using namespace gft;

// Documents cross the boundary as JSON text; the Python wrapper converts dicts.
namespace {

HarnessConfig config(const std::string& scan) {
  return scan.empty() ? HarnessConfig{} : harness_config_from_json(json::parse(scan));
}

AnalyticFunction function(const std::string& spec) { return make_function(function_spec_from_json(json::parse(spec))); }

CriterionSpec criterion(const std::string& spec) { return criterion_from_json(json::parse(spec)); }

template <typename T, typename Parse>
std::vector<T> many(const std::string& text, Parse parse) {
  const json j = json::parse(text);
  std::vector<T> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(parse(item));
  } else {
    out.push_back(parse(j));
  }
  return out;
}

std::vector<Complex> list(const TaylorSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

py::tuple point(const PointValue& v) { return py::make_tuple(v.value, v.flags.names()); }

}  // namespace

PYBIND11_MODULE(_gft, m) {
  m.doc() = "Sufficient-condition checks for starlike and related classes";

  static py::exception<Error> error(m, "GftError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    } catch (const json::exception& e) {
      py::set_error(error, (std::string("parse: ") + e.what()).c_str());
    }
  });

  m.def("series_mul", [](const std::vector<Complex>& a, const std::vector<Complex>& b, std::size_t n) {
    return list(series_mul(TaylorSeries(a, n), TaylorSeries(b, n)));
  });
  m.def("series_div", [](const std::vector<Complex>& a, const std::vector<Complex>& b, std::size_t n) {
    return list(series_div(TaylorSeries(a, n), TaylorSeries(b, n)));
  });
  m.def("series_exp_integral", [](const std::vector<Complex>& a, std::size_t n) {
    return list(series_exp_integral(TaylorSeries(a, n)));
  });

  m.def("normalize_function", [](const std::string& spec) { return to_json(function(spec).spec()).dump(); });
  m.def("function_coeffs", [](const std::string& spec) { return list(function(spec).series()); });
  m.def("evaluate", [](const std::string& spec, Complex z) {
    const AnalyticFunction f = function(spec);
    py::dict d;
    d["f"] = f.f(z);
    d["fp"] = f.fp(z);
    d["fpp"] = f.fpp(z);
    const GValues g = eval_G(f, z);
    if (!g.pole) {
      d["G"] = g.G;
      d["Gp"] = g.Gp;
    }
    return d;
  });
  m.def("count_zeros", [](const std::string& spec, double r) {
    const ZeroReport z = count_zeros(function(spec), r);
    return py::make_tuple(z.winding, z.extra_zeros, z.min_modulus);
  });
  m.def("synthesize_C", [](const std::vector<Complex>& w) {
    return to_json(synthesize_from_schwarz_C(SchwarzFunction::from_coeffs(w)).spec()).dump();
  });
  m.def("synthesize_Sstar", [](const std::vector<Complex>& w, double alpha) {
    return to_json(synthesize_from_schwarz_Sstar(SchwarzFunction::from_coeffs(w), alpha).spec()).dump();
  });

  m.def("criterion_value", [](const std::string& f, const std::string& c, Complex z) {
    return point(criterion_value(function(f), z, criterion(c)));
  });
  m.def("criterion_bound", [](const std::string& c) { return criterion_bound(criterion(c)); });

  m.def("circle_extremum", [](const std::string& f, const std::string& c, double r, bool maximize,
                              const std::string& scan) {
    const AnalyticFunction fn = function(f);
    const CriterionSpec spec = criterion(c);
    const Quantity q = [&](Complex z) { return criterion_value(fn, z, spec); };
    const CircleExtremum e = circle_extremum(q, r, config(scan).scan, maximize ? ScanMode::Max : ScanMode::Min);
    return py::make_tuple(e.value, e.theta, e.witness);
  });

  m.def("check_hypothesis", [](const std::string& f, const std::string& c, const std::string& scan) {
    return to_json(check_hypothesis(function(f), criterion(c), config(scan))).dump();
  });
  m.def("check_conclusion", [](const std::string& f, const std::string& c, const std::string& scan) {
    return to_json(check_conclusion(function(f), criterion(c), config(scan))).dump();
  });
  m.def("verify_implication", [](const std::string& f, const std::string& c, const std::string& scan) {
    return to_json(verify_implication(function(f), criterion(c), config(scan))).dump();
  });
  m.def("jack_probe", [](const std::vector<Complex>& w, double r, const std::string& scan) {
    return to_json(jack_probe(SchwarzFunction::from_coeffs(w), r, config(scan))).dump();
  });
  m.def(
      "corpus_run",
      [](const std::string& functions, const std::string& criteria, const std::string& scan, std::size_t workers) {
        const auto fs = many<FunctionSpec>(functions, [](const json& j) { return function_spec_from_json(j); });
        const auto cs = criteria.empty()
                            ? standard_criteria()
                            : many<CriterionSpec>(criteria, [](const json& j) { return criterion_from_json(j); });
        HarnessConfig cfg = config(scan);
        cfg.workers = workers;
        CorpusReport report;
        {
          py::gil_scoped_release release;
          report = corpus_run(fs, cs, cfg);
        }
        json out{{"counts", to_json(report.counts)}, {"pairs", json::array()}};
        for (const auto& p : report.pairs) out["pairs"].push_back(to_json(p));
        return out.dump();
      },
      py::arg("functions"), py::arg("criteria") = "", py::arg("scan") = "", py::arg("workers") = 0);
  m.def("random_polynomial_corpus", [](std::size_t count, double rho, std::uint64_t seed) {
    json out = json::array();
    for (const auto& s : random_polynomial_corpus(count, rho, seed)) out.push_back(to_json(s));
    return out.dump();
  });
  m.def("standard_criteria", [] {
    json out = json::array();
    for (const auto& c : standard_criteria()) out.push_back(to_json(c));
    return out.dump();
  });
}
