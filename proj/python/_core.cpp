#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "htspec/io.hpp"
#include "htspec/matching.hpp"
#include "htspec/spectra.hpp"
#include "htspec/tensor.hpp"

namespace py = pybind11;
using namespace htspec;

namespace {

WeightedHypertree tree_from(const std::string& doc) { return parse_tree(json::parse(doc)); }
WeightedHypergraph graph_from(const std::string& doc) { return parse_document(json::parse(doc)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Eigenvalues of weighted uniform hypertrees (compiled core). Documents are JSON strings.";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<NumericError> numeric_error(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    } catch (const NumericError& e) {
      py::set_error(numeric_error, e.what());
    } catch (const json::exception& e) {
      py::set_error(domain_error, e.what());
    }
  });

  m.def("validate", [](const std::string& doc) {
    return certificate_to_json(validate(graph_from(doc).graph())).dump();
  });
  m.def("matching_polynomial", [](const std::string& doc) {
    WeightedHypergraph g = graph_from(doc);
    bool tree = validate(g.graph()).acyclic;
    return polynomial_to_json(tree ? matching_polynomial_dp(g) : matching_polynomial(g)).dump();
  });
  m.def("matching_polynomial_enumerated", [](const std::string& doc) {
    return polynomial_to_json(matching_polynomial(graph_from(doc))).dump();
  });
  m.def("phi", [](const std::string& doc) { return polynomial_to_json(phi_polynomial(tree_from(doc).graph())).dump(); });
  m.def("subtrees", [](const std::string& doc) {
    WeightedHypertree t = tree_from(doc);
    json out = json::array();
    for (const auto& s : enumerate_subtrees(t)) out.push_back(subtree_to_json(t.graph(), s));
    return out.dump();
  });
  m.def(
      "spectrum",
      [](const std::string& doc, double tol, bool vectors) {
        SpectrumOptions opts;
        opts.tol = tol;
        WeightedHypertree t = tree_from(doc);
        SpectrumReport report;
        {
          py::gil_scoped_release release;
          report = eigenvalues(t, opts);
        }
        return report_to_json(report, vectors).dump();
      },
      py::arg("doc"), py::arg("tol") = kDefaultResidualTol, py::arg("vectors") = false);
  m.def(
      "verify",
      [](const std::string& doc, const std::string& report, double tol) {
        WeightedHypertree t = tree_from(doc);
        return verification_to_json(verify_report(t, report_from_json(json::parse(report), t.graph()), tol)).dump();
      },
      py::arg("doc"), py::arg("report"), py::arg("tol") = kDefaultResidualTol);
  m.def("spectral_radius", [](const std::string& doc) { return spectral_radius(tree_from(doc)); });
  m.def("power_spectral_radius", [](const std::string& doc) {
    PowerResult r = power_spectral_radius(graph_from(doc));
    return py::make_tuple(r.rho, r.lower, r.upper, r.iterations);
  });
  m.def("apply", [](const std::string& doc, const std::vector<Complex>& x) {
    return htspec::apply(graph_from(doc), x);
  });
  m.def("residual", [](const std::string& doc, Complex lambda, const std::vector<Complex>& x) {
    return residual(graph_from(doc), lambda, x);
  });
  m.def("mu_tilde", [](const std::string& doc, Complex lambda) { return eval_mu_tilde(graph_from(doc), lambda); });
}
