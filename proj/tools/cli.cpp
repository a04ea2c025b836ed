#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "htspec/io.hpp"
#include "htspec/matching.hpp"
#include "htspec/random_tree.hpp"
#include "htspec/roots.hpp"
#include "htspec/spectra.hpp"

namespace htspec {
namespace {

struct Globals {
  std::optional<double> tol;
  std::string format = "json";
  std::uint64_t seed = 1;
};

std::string format_number(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string format_complex(const json& z) {
  double re = z[0].get<double>();
  double im = z[1].get<double>();
  if (im == 0.0) return format_number(re);
  std::ostringstream os;
  os << format_number(re) << (im < 0 ? " - " : " + ") << format_number(std::abs(im)) << "i";
  return os.str();
}

bool is_complex_pair(const json& j) { return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(); }

std::string cell(const std::string& key, const json& v) {
  if ((key == "lambda" || key == "value") && is_complex_pair(v)) return format_complex(v);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_number(v.get<double>());
  if (key == "eigenvalues" && v.is_array()) {
    std::string s;
    for (const auto& z : v) s += (s.empty() ? "" : ", ") + format_complex(z);
    return s;
  }
  return v.dump();
}

// Plain-text rendering of a result document. Arrays of objects become
// aligned tables; everything else is "key: value".
void render_table(const json& j, std::ostream& out, const std::string& indent = "") {
  if (!j.is_object()) {
    out << indent << cell("", j) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      std::vector<std::string> cols;
      for (const auto& row : value) {
        for (const auto& [c, unused] : row.items()) {
          (void)unused;
          if (std::find(cols.begin(), cols.end(), c) == cols.end() && c != "x" && c != "witnesses" &&
              c != "residuals") {
            cols.push_back(c);
          }
        }
      }
      std::vector<std::vector<std::string>> cells;
      std::vector<std::size_t> width;
      for (const auto& c : cols) width.push_back(c.size());
      for (const auto& row : value) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < cols.size(); ++i) {
          line.push_back(row.contains(cols[i]) ? cell(cols[i], row.at(cols[i])) : "");
          width[i] = std::max(width[i], line.back().size());
        }
        cells.push_back(std::move(line));
      }
      out << indent << key << ":\n";
      auto print_row = [&](const std::vector<std::string>& line) {
        out << indent << "  ";
        for (std::size_t i = 0; i < line.size(); ++i) {
          if (i + 1 < line.size()) {
            out << std::left << std::setw(static_cast<int>(width[i])) << line[i] << "  ";
          } else {
            out << line[i];
          }
        }
        out << "\n";
      };
      print_row(cols);
      for (const auto& line : cells) print_row(line);
    } else if (value.is_object()) {
      out << indent << key << ":\n";
      render_table(value, out, indent + "  ");
    } else {
      out << indent << key << ": " << cell(key, value) << "\n";
    }
  }
}

void emit(const json& j, const Globals& g, std::ostream& out) {
  if (g.format == "table") {
    render_table(j, out);
  } else {
    out << j.dump(2) << "\n";
  }
}

SpectrumOptions spectrum_options(const Globals& g) {
  SpectrumOptions opts;
  if (g.tol) opts.tol = *g.tol;
  return opts;
}

void warn_k2(const Hypergraph& graph, std::ostream& err) {
  if (graph.k() == 2) {
    err << "warning: k = 2; the weighted matching polynomial of a tree coincides with its characteristic "
           "polynomial, and the tensor eigenvalue pipeline does not apply\n";
  }
}

json cmd_validate(const json& doc, std::ostream& err, int& code) {
  WeightedHypergraph g = parse_document(doc);
  TreeCertificate cert = validate(g.graph());
  json j = certificate_to_json(cert);
  j["k"] = g.k();
  j["n"] = g.n();
  j["m"] = g.m();
  j["nonnegative"] = g.weights().is_nonnegative();
  if (!cert.is_tree()) {
    err << "error: not a hypertree: " << cert.describe() << "\n";
    code = 2;
  }
  return j;
}

json cmd_matching_poly(const json& doc, std::ostream& err) {
  WeightedHypergraph g = parse_document(doc);
  warn_k2(g.graph(), err);
  bool tree = validate(g.graph()).acyclic;
  json j = polynomial_to_json(tree ? matching_polynomial_dp(g) : matching_polynomial(g));
  j["method"] = tree ? "tree-recursion" : "enumeration";
  return j;
}

json cmd_phi(const json& doc) {
  WeightedHypertree t = parse_tree(doc);
  json j = polynomial_to_json(phi_polynomial(t.graph()));
  j["matching_number"] = static_cast<int>(matching_counts(t.graph()).size()) - 1;
  return j;
}

json cmd_subtrees(const json& doc) {
  WeightedHypertree t = parse_tree(doc);
  json list = json::array();
  for (const auto& s : enumerate_subtrees(t)) list.push_back(subtree_to_json(t.graph(), s));
  return {{"count", list.size()}, {"subtrees", std::move(list)}};
}

json cmd_radius(const json& doc, bool cross_check) {
  WeightedHypertree t = parse_tree(doc);
  RadiusEstimate est = spectral_radius_estimates(t);
  if (est.gap > 1e-6) {
    std::ostringstream os;
    os << std::setprecision(17) << "spectral radius routes disagree: roots " << est.by_roots << ", power "
       << est.by_power << ", gap " << est.gap;
    throw NumericError(os.str());
  }
  json j{{"spectral_radius", est.by_roots}};
  if (cross_check) {
    j["by_roots"] = est.by_roots;
    j["by_power"] = est.by_power;
    j["gap"] = est.gap;
    j["power_iterations"] = est.power_iterations;
  }
  return j;
}

json cmd_verify(const json& doc, const std::string& report_path, const Globals& g) {
  WeightedHypertree t = parse_tree(doc);
  SpectrumReport report =
      report_path.empty() ? eigenvalues(t, spectrum_options(g)) : report_from_json(load_json(report_path), t.graph());
  return verification_to_json(verify_report(t, report, g.tol.value_or(kDefaultResidualTol)));
}

json cmd_corollary(const json& doc, const std::string& sign, const Globals& g) {
  WeightedHypergraph parsed = parse_document(doc);
  LaplacianSign s = sign == "laplacian" ? LaplacianSign::kLaplacian : LaplacianSign::kSignless;
  WeightedHypertree t(parsed.graph(), corollary_weighting(parsed.graph(), s));
  SpectrumReport report = corollary_spectrum(t.graph(), s, spectrum_options(g));
  json j = report_to_json(report);
  j["sign"] = sign;
  j["polynomial"] = polynomial_to_json(matching_polynomial_dp(t));
  return j;
}

std::vector<Complex> parse_lambda_list(const std::string& text, int m) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw DomainError("--lambdas must be a JSON array with one scalar per edge");
  }
  if (!j.is_array() || static_cast<int>(j.size()) != m) {
    throw DomainError("--lambdas must be a JSON array with " + std::to_string(m) + " entries");
  }
  std::vector<Complex> out;
  for (const auto& v : j) out.push_back(complex_from_json(v));
  return out;
}

Complex parse_lambda(const std::string& text) {
  try {
    return complex_from_json(json::parse(text));
  } catch (const json::parse_error&) {
    return Scalar::parse(text).to_complex();
  }
}

json cmd_mu_tilde(const json& doc, const std::string& lambdas, const std::string& lambda) {
  WeightedHypergraph g = parse_document(doc);
  if (!lambdas.empty()) {
    std::vector<Complex> ls = parse_lambda_list(lambdas, g.m());
    return {{"value", complex_to_json(eval_mu_tilde(g, ls))}};
  }
  if (lambda.empty()) throw DomainError("mu-tilde needs --lambdas or --lambda");
  Complex l = parse_lambda(lambda);
  Complex tilde = eval_mu_tilde(g, l);
  Complex scale(1.0, 0.0);
  for (int v = 0; v < g.n(); ++v) scale *= l - g.vertex_weight(v).to_complex();
  return {{"value", complex_to_json(tilde)},
          {"scaled", complex_to_json(scale * tilde)},
          {"mu", complex_to_json(matching_polynomial(g).evaluate(l))}};
}

json cmd_normal_check(const json& doc, const std::string& matrix_path, const std::string& lambda,
                      const std::string& lambdas, const Globals& g) {
  WeightedHypergraph graph = parse_document(doc);
  WeightedIncidenceMatrix b = matrix_from_json(load_json(matrix_path), graph.graph());
  double tol = g.tol.value_or(kDefaultCheckTol);
  if (!lambdas.empty()) {
    auto ls = parse_lambda_list(lambdas, graph.m());
    return normal_report_to_json(check_normal(graph, b, ls, tol));
  }
  if (lambda.empty()) throw DomainError("normal-check needs --lambda or --lambdas");
  return normal_report_to_json(check_consistent(graph, b, parse_lambda(lambda), tol));
}

json cmd_normal_build(const json& doc, const std::string& lambda, const Globals& g) {
  WeightedHypertree t = parse_tree(doc);
  Complex l = parse_lambda(lambda);
  NormalBuild built = build_normal_matrix(t, l, g.tol.value_or(kDefaultCheckTol));
  if (const auto* s = std::get_if<Singular>(&built)) {
    return {{"singular", {{"vertex", s->vertex}, {"edge", s->edge}, {"detail", s->detail}}}};
  }
  const auto& b = std::get<WeightedIncidenceMatrix>(built);
  json j{{"matrix", matrix_to_json(b)}};
  j["eigenpair"] = eigenpair_to_json(eigenvector_from_normal(t, b, l, g.tol.value_or(kDefaultResidualTol)));
  return j;
}

json cmd_selftest(const Globals& g, int count) {
  std::mt19937_64 rng(g.seed);
  int dp_mismatch = 0, uncertified = 0, singular = 0, radius_fail = 0, eigenvalues_seen = 0;
  for (int i = 0; i < count; ++i) {
    RandomTreeOptions opts;
    opts.k = 3 + static_cast<int>(rng() % 3);
    opts.m = 1 + static_cast<int>(rng() % 4);
    WeightedHypertree t = random_hypertree(rng, opts);
    if (!(matching_polynomial_dp(t) == matching_polynomial(t))) ++dp_mismatch;
    SpectrumReport r = eigenvalues(t, spectrum_options(g));
    eigenvalues_seen += static_cast<int>(r.eigenvalues().size());
    singular += r.count(CertStatus::kSingular);
    uncertified += r.count(CertStatus::kUncertified);
    if (spectral_radius_estimates(t).gap > 1e-6) ++radius_fail;
  }
  bool ok = dp_mismatch == 0 && uncertified == 0 && radius_fail == 0;
  return {{"seed", g.seed},        {"trees", count},         {"eigenvalues", eigenvalues_seen},
          {"dp_mismatch", dp_mismatch}, {"singular", singular}, {"uncertified", uncertified},
          {"radius_disagreements", radius_fail}, {"ok", ok}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenvalues and spectral radius of weighted uniform hypertrees", "htspec"};
  app.require_subcommand(1);
  Globals g;
  double tol_value = 0;
  auto* tol_opt = app.add_option("--tol", tol_value, "Residual / check tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", g.seed, "Seed for randomized self-tests");
  app.fallthrough();

  std::string input = "-";
  auto add_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "Input document (default: stdin)");
    return sub;
  };

  auto* validate_cmd = add_cmd("validate", "Check that the input is a hypertree");
  auto* poly_cmd = add_cmd("matching-poly", "Weighted matching polynomial");
  auto* phi_cmd = add_cmd("phi", "Unweighted phi polynomial");
  auto* subtrees_cmd = add_cmd("subtrees", "List all subtrees");
  auto* spectrum_cmd = add_cmd("spectrum", "Certified eigenvalue set");
  bool vectors = false;
  spectrum_cmd->add_flag("--vectors", vectors, "Include eigenvectors");
  auto* radius_cmd = add_cmd("radius", "Spectral radius (nonnegative weights)");
  bool cross_check = false;
  radius_cmd->add_flag("--cross-check", cross_check, "Print root and power-iteration estimates");
  auto* verify_cmd = add_cmd("verify", "Re-certify a spectrum report");
  std::string report_path;
  verify_cmd->add_option("--report", report_path, "Report from `spectrum` (default: compute one)");
  auto* corollary_cmd = add_cmd("corollary", "Laplacian / signless Laplacian spectrum");
  std::string sign;
  corollary_cmd->add_option("--sign", sign, "laplacian or signless")
      ->required()
      ->check(CLI::IsMember({"laplacian", "signless"}));
  auto* mu_cmd = add_cmd("mu-tilde", "Evaluate the multivariate matching sum");
  std::string lambdas, lambda;
  mu_cmd->add_option("--lambdas", lambdas, "JSON array, one value per edge");
  mu_cmd->add_option("--lambda", lambda, "Same value on every edge");
  auto* normal_cmd = add_cmd("normal-check", "Check a weighted incidence matrix");
  std::string matrix_path;
  normal_cmd->add_option("--matrix", matrix_path, "Matrix file")->required();
  normal_cmd->add_option("--lambda", lambda, "Constant lambda (all three conditions)");
  normal_cmd->add_option("--lambdas", lambdas, "Per-edge lambdas (row-sum and product conditions)");
  auto* build_cmd = add_cmd("normal-build", "Build a normal matrix and eigenvector at a root");
  build_cmd->add_option("--lambda", lambda, "Root of the matching polynomial")->required();
  auto* selftest_cmd = app.add_subcommand("selftest", "Randomized consistency run");
  int count = 20;
  selftest_cmd->add_option("--count", count, "Number of random trees")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 1;
  }
  if (tol_opt->count() > 0) g.tol = tol_value;

  int code = 0;
  try {
    json result;
    if (selftest_cmd->parsed()) {
      result = cmd_selftest(g, count);
      if (!result["ok"].get<bool>()) code = 3;
    } else {
      json doc = load_json(input);
      if (validate_cmd->parsed()) {
        result = cmd_validate(doc, err, code);
      } else if (poly_cmd->parsed()) {
        result = cmd_matching_poly(doc, err);
      } else if (phi_cmd->parsed()) {
        result = cmd_phi(doc);
      } else if (subtrees_cmd->parsed()) {
        result = cmd_subtrees(doc);
      } else if (spectrum_cmd->parsed()) {
        WeightedHypertree t = parse_tree(doc);
        warn_k2(t.graph(), err);
        result = report_to_json(eigenvalues(t, spectrum_options(g)), vectors);
      } else if (radius_cmd->parsed()) {
        result = cmd_radius(doc, cross_check);
      } else if (verify_cmd->parsed()) {
        result = cmd_verify(doc, report_path, g);
      } else if (corollary_cmd->parsed()) {
        result = cmd_corollary(doc, sign, g);
      } else if (mu_cmd->parsed()) {
        result = cmd_mu_tilde(doc, lambdas, lambda);
      } else if (normal_cmd->parsed()) {
        result = cmd_normal_check(doc, matrix_path, lambda, lambdas, g);
      } else if (build_cmd->parsed()) {
        result = cmd_normal_build(doc, lambda, g);
      }
    }
    emit(result, g, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 2;
  }
  return code;
}

}  // namespace htspec
