#include "htspec/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

namespace htspec {
namespace {

double clean(double v) { return v == 0.0 ? 0.0 : v; }  // drops the sign of -0

int require_int(const json& doc, const char* key) {
  if (!doc.contains(key)) throw DomainError(std::string("document is missing \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw DomainError(std::string("\"") + key + "\" must be an integer");
  auto x = v.get<long long>();
  if (x < 0 || x > std::numeric_limits<int>::max()) throw DomainError(std::string("\"") + key + "\" out of range");
  return static_cast<int>(x);
}

std::vector<Scalar> scalar_array(const json& doc, const char* key, std::size_t expected) {
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw DomainError(std::string("\"") + key + "\" must be an array");
  if (arr.size() != expected) {
    throw DomainError(std::string("\"") + key + "\" has " + std::to_string(arr.size()) + " entries, expected " +
                      std::to_string(expected));
  }
  std::vector<Scalar> out;
  for (const auto& v : arr) out.push_back(scalar_from_json(v));
  return out;
}

json edges_json(const std::vector<int>& ids) { return json(ids); }

CertStatus status_from_string(const std::string& s) {
  if (s == "certified") return CertStatus::kCertified;
  if (s == "singular") return CertStatus::kSingular;
  if (s == "collision") return CertStatus::kCollision;
  if (s == "uncertified") return CertStatus::kUncertified;
  throw DomainError("unknown certification status \"" + s + "\"");
}

}  // namespace

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Scalar(Rational(BigInt(j.get<unsigned long long>())));
    return Scalar(j.get<long long>());
  }
  if (j.is_number_float()) return Scalar(Complex(j.get<double>(), 0.0));
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Scalar(Complex(j[0].get<double>(), j[1].get<double>()));
  }
  throw DomainError("scalar must be a number, a \"p/q\" string or [re, im]; got " + j.dump());
}

json scalar_to_json(const Scalar& s) {
  if (!s.is_rational()) return complex_to_json(s.to_complex());
  const Rational& r = s.as_rational();
  if (denominator(r) == 1) {
    BigInt num = numerator(r);
    if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max()) {
      return num.convert_to<long long>();
    }
  }
  return s.to_string();
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return Scalar::parse(j.get<std::string>()).to_complex();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw DomainError("complex value must be a number, a \"p/q\" string or [re, im]; got " + j.dump());
}

json complex_to_json(Complex z) { return json::array({clean(z.real()), clean(z.imag())}); }

json load_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError("invalid JSON in " + (path == "-" ? std::string("stdin") : path) + ": " + e.what());
  }
}

WeightedHypergraph parse_document(const json& doc) {
  if (!doc.is_object()) throw DomainError("document must be a JSON object");
  int k = require_int(doc, "k");
  int n = require_int(doc, "n");
  if (k < 2) throw DomainError("k must be at least 2");
  if (!doc.contains("edges") || !doc.at("edges").is_array()) throw DomainError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array()) throw DomainError("each edge must be an array of vertex ids");
    Edge ed;
    for (const auto& v : e) {
      if (!v.is_number_integer()) throw DomainError("vertex ids must be integers; got " + v.dump());
      auto id = v.get<long long>();
      if (id < 0 || id >= n) throw StructuralError("vertex id " + std::to_string(id) + " out of range");
      ed.push_back(static_cast<int>(id));
    }
    edges.push_back(std::move(ed));
  }
  Hypergraph graph(k, n, std::move(edges));

  std::string mode = "explicit";
  if (doc.contains("weighting")) {
    if (!doc.at("weighting").is_string()) throw DomainError("\"weighting\" must be a string");
    mode = doc.at("weighting").get<std::string>();
  } else if (!doc.contains("vertex_weights") && !doc.contains("edge_weights")) {
    mode = "adjacency-unit";
  }

  Weighting w;
  if (mode == "adjacency-unit") {
    w = unit_weighting(graph);
  } else if (mode == "laplacian") {
    w = corollary_weighting(graph, LaplacianSign::kLaplacian);
  } else if (mode == "signless") {
    w = corollary_weighting(graph, LaplacianSign::kSignless);
  } else if (mode == "explicit") {
    const auto nv = static_cast<std::size_t>(graph.n());
    const auto ne = static_cast<std::size_t>(graph.m());
    w.vertex_weights = doc.contains("vertex_weights") ? scalar_array(doc, "vertex_weights", nv)
                                                      : std::vector<Scalar>(nv, Scalar(0));
    w.edge_weights = doc.contains("edge_weights") ? scalar_array(doc, "edge_weights", ne)
                                                  : std::vector<Scalar>(ne, Scalar(1));
  } else {
    throw DomainError("unknown weighting \"" + mode + "\" (explicit, adjacency-unit, laplacian, signless)");
  }
  return WeightedHypergraph(std::move(graph), std::move(w));
}

WeightedHypertree parse_tree(const json& doc) { return WeightedHypertree(parse_document(doc)); }

json certificate_to_json(const TreeCertificate& cert) {
  json j{{"connected", cert.connected},
         {"acyclic", cert.acyclic},
         {"component_count", cert.component_count},
         {"is_tree", cert.is_tree()},
         {"detail", cert.describe()}};
  j["cycle_edge"] = cert.cycle_edge >= 0 ? json(cert.cycle_edge) : json(nullptr);
  return j;
}

json polynomial_to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(scalar_to_json(c));
  return {{"backend", p.backend() == Backend::kRational ? "rational" : "complex"},
          {"degree", p.degree()},
          {"coeffs", std::move(coeffs)}};
}

json subtree_to_json(const Hypergraph& g, const Subtree& s) {
  return {{"edges", edges_json(s.edge_indices)}, {"vertices", s.vertex_set}, {"induced", is_induced(g, s)}};
}

json eigenpair_to_json(const Eigenpair& p) {
  json x = json::array();
  for (const auto& z : p.x) x.push_back(complex_to_json(z));
  return {{"lambda", complex_to_json(p.lambda)}, {"x", std::move(x)}, {"residual", p.residual}};
}

json report_to_json(const SpectrumReport& report, bool with_vectors) {
  json trivial = json::array();
  for (const auto& t : report.trivial) {
    trivial.push_back({{"lambda", complex_to_json(t.lambda)},
                       {"vertex", t.vertex},
                       {"also_subtree_root", t.also_subtree_root},
                       {"residual", t.residual}});
  }
  json roots = json::array();
  for (const auto& r : report.roots) {
    json entry{{"lambda", complex_to_json(r.lambda)},
               {"witness_edges", edges_json(r.witness.edge_indices)},
               {"status", to_string(r.status)},
               {"residual", r.residual}};
    json all = json::array();
    for (const auto& w : r.witnesses) all.push_back(edges_json(w.edge_indices));
    entry["witnesses"] = std::move(all);
    if (r.status == CertStatus::kCollision) entry["collision_vertex"] = r.collision_vertex;
    if (!r.note.empty() && r.status != CertStatus::kCertified) entry["note"] = r.note;
    if (with_vectors && r.pair) {
      json x = json::array();
      for (const auto& z : r.pair->x) x.push_back(complex_to_json(z));
      entry["x"] = std::move(x);
    }
    roots.push_back(std::move(entry));
  }
  json eigen = json::array();
  for (const auto& z : report.eigenvalues()) eigen.push_back(complex_to_json(z));
  json j{{"eigenvalues", std::move(eigen)},
         {"trivial", std::move(trivial)},
         {"roots", std::move(roots)},
         {"counts",
          {{"distinct", report.eigenvalues().size()},
           {"certified", report.count(CertStatus::kCertified)},
           {"singular", report.count(CertStatus::kSingular)},
           {"collision", report.count(CertStatus::kCollision)},
           {"uncertified", report.count(CertStatus::kUncertified)}}},
         {"tol", report.tol},
         {"dedup_tol", report.dedup_tol}};
  j["spectral_radius"] = report.spectral_radius ? json(*report.spectral_radius) : json(nullptr);
  return j;
}

SpectrumReport report_from_json(const json& j, const Hypergraph& graph) {
  if (!j.is_object() || !j.contains("trivial") || !j.contains("roots")) {
    throw DomainError("report must be an object with \"trivial\" and \"roots\"");
  }
  SpectrumReport report;
  if (j.contains("tol")) report.tol = j.at("tol").get<double>();
  if (j.contains("dedup_tol")) report.dedup_tol = j.at("dedup_tol").get<double>();
  try {
    for (const auto& t : j.at("trivial")) {
      TrivialEigenvalue entry;
      entry.lambda = complex_from_json(t.at("lambda"));
      entry.vertex = t.at("vertex").get<int>();
      if (entry.vertex < 0 || entry.vertex >= graph.n()) throw DomainError("trivial entry vertex out of range");
      entry.also_subtree_root = t.value("also_subtree_root", false);
      report.trivial.push_back(entry);
    }
    for (const auto& r : j.at("roots")) {
      RootEigenvalue entry;
      entry.lambda = complex_from_json(r.at("lambda"));
      entry.status = status_from_string(r.value("status", std::string("uncertified")));
      entry.collision_vertex = r.value("collision_vertex", -1);
      // Witnesses are re-validated by verify_report; keep invalid ones out.
      auto read_edges = [&](const json& e) -> std::optional<Subtree> {
        try {
          return make_subtree(graph, e.get<std::vector<int>>());
        } catch (const DomainError&) {
          return std::nullopt;
        }
      };
      if (r.contains("witness_edges")) {
        if (auto s = read_edges(r.at("witness_edges"))) entry.witness = *s;
      }
      if (r.contains("witnesses")) {
        for (const auto& w : r.at("witnesses")) {
          if (auto s = read_edges(w)) entry.witnesses.push_back(*s);
        }
      }
      if (entry.witnesses.empty() && !entry.witness.edge_indices.empty()) entry.witnesses.push_back(entry.witness);
      report.roots.push_back(std::move(entry));
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
  return report;
}

json verification_to_json(const VerificationSummary& s) {
  json entries = json::array();
  for (const auto& e : s.entries) {
    json row{{"lambda", complex_to_json(e.lambda)}, {"status", to_string(e.status)}, {"residual", e.residual}};
    if (!e.note.empty() && e.status != CertStatus::kCertified) row["note"] = e.note;
    entries.push_back(std::move(row));
  }
  return {{"trivial_checked", s.trivial_checked},
          {"trivial_failed", s.trivial_failed},
          {"certified", s.certified},
          {"singular", s.singular},
          {"collisions", s.collisions},
          {"uncertified", s.uncertified},
          {"all_certified", s.all_certified()},
          {"entries", std::move(entries)}};
}

WeightedIncidenceMatrix matrix_from_json(const json& j, const Hypergraph& graph) {
  if (!j.is_array()) throw DomainError("matrix must be an array of {\"v\", \"e\", \"value\"} entries");
  WeightedIncidenceMatrix b;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("v") || !entry.contains("e") || !entry.contains("value")) {
      throw DomainError("matrix entry needs \"v\", \"e\" and \"value\"; got " + entry.dump());
    }
    int v = entry.at("v").get<int>();
    int e = entry.at("e").get<int>();
    if (v < 0 || v >= graph.n() || e < 0 || e >= graph.m()) {
      throw DomainError("matrix entry (" + std::to_string(v) + ", " + std::to_string(e) + ") out of range");
    }
    b.set(graph, v, e, complex_from_json(entry.at("value")));
  }
  return b;
}

json matrix_to_json(const WeightedIncidenceMatrix& b) {
  json out = json::array();
  for (const auto& [key, value] : b.entries()) {
    out.push_back({{"v", key.first}, {"e", key.second}, {"value", complex_to_json(value)}});
  }
  return out;
}

json normal_report_to_json(const NormalReport& r) {
  auto worst = [](const std::vector<double>& xs) {
    double m = 0;
    for (double x : xs) m = std::max(m, x);
    return m;
  };
  return {{"c1", {{"ok", r.c1_ok}, {"max_residual", worst(r.c1_residuals)}, {"residuals", r.c1_residuals}}},
          {"c2", {{"ok", r.c2_ok}, {"max_residual", worst(r.c2_residuals)}, {"residuals", r.c2_residuals}}},
          {"c3", {{"ok", r.c3_ok}, {"max_residual", worst(r.c3_residuals)}, {"residuals", r.c3_residuals}}},
          {"normal", r.normal()},
          {"consistent", r.consistent()}};
}

}  // namespace htspec
