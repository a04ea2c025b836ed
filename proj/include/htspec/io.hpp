#pragma once

#include <string>

#include <json.hpp>

#include "htspec/hypertree.hpp"
#include "htspec/normal.hpp"
#include "htspec/polynomial.hpp"
#include "htspec/spectra.hpp"

namespace htspec {

using json = nlohmann::json;

/// Integers and "p/q" strings are exact; other numbers and [re, im] pairs go
/// to the complex backend.
Scalar scalar_from_json(const json& j);
/// Integers that fit in 64 bits as numbers, other rationals as "p/q",
/// complex values as [re, im].
json scalar_to_json(const Scalar& s);

Complex complex_from_json(const json& j);
json complex_to_json(Complex z);

/// Reads a whole file, or stdin for "-". Throws DomainError on bad JSON.
json load_json(const std::string& path);

/// Input document -> weighted hypergraph, no tree requirement.
///
/// "weighting" selects explicit | adjacency-unit | laplacian | signless. A
/// named weighting replaces any weight arrays. Without "weighting", present
/// arrays are used and a missing array defaults to w(v) = 0 / w(e) = 1.
WeightedHypergraph parse_document(const json& doc);
/// Same, then validated as a hypertree (NotATreeError otherwise).
WeightedHypertree parse_tree(const json& doc);

json certificate_to_json(const TreeCertificate& cert);
json polynomial_to_json(const Polynomial& p);
json subtree_to_json(const Hypergraph& g, const Subtree& s);
json eigenpair_to_json(const Eigenpair& p);

json report_to_json(const SpectrumReport& report, bool with_vectors = false);
/// Reads the fields verify_report needs back from report_to_json output.
SpectrumReport report_from_json(const json& j, const Hypergraph& graph);
json verification_to_json(const VerificationSummary& s);

/// [{"v": int, "e": int, "value": scalar}, ...]
WeightedIncidenceMatrix matrix_from_json(const json& j, const Hypergraph& graph);
json matrix_to_json(const WeightedIncidenceMatrix& b);
json normal_report_to_json(const NormalReport& r);

}  // namespace htspec
