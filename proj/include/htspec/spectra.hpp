#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "htspec/hypertree.hpp"
#include "htspec/normal.hpp"
#include "htspec/roots.hpp"
#include "htspec/tensor.hpp"

namespace htspec {

enum class CertStatus {
  kCertified,    // explicit eigenvector on the whole tree, residual <= tol
  kSingular,     // every witness hit a vanishing divisor
  kCollision,    // the root equals some w(v); reported as a trivial eigenvalue
  kUncertified,  // no witness produced an eigenvector (not a root, numerics)
};

const char* to_string(CertStatus s);

struct TrivialEigenvalue {
  Complex lambda;
  int vertex = -1;
  /// Some subtree polynomial also vanishes here.
  bool also_subtree_root = false;
  double residual = 0.0;
};

struct RootEigenvalue {
  Complex lambda;
  /// Preferred witness: fewest edges, then lexicographic. Edge ids refer to
  /// the input tree.
  Subtree witness;
  /// Every subtree whose polynomial produced this root, preferred first.
  std::vector<Subtree> witnesses;
  CertStatus status = CertStatus::kUncertified;
  double residual = 0.0;
  /// Vertex whose weight this root equals (kCollision only).
  int collision_vertex = -1;
  std::optional<Eigenpair> pair;
  std::string note;
};

struct SpectrumReport {
  std::vector<TrivialEigenvalue> trivial;
  std::vector<RootEigenvalue> roots;
  double dedup_tol = kDefaultDedupTol;
  double tol = kDefaultResidualTol;
  std::optional<double> spectral_radius;

  /// Distinct eigenvalues: trivial values plus non-collision roots, sorted.
  std::vector<Complex> eigenvalues() const;
  int count(CertStatus s) const;
};

struct SpectrumOptions {
  double tol = kDefaultResidualTol;
  double root_tol = kDefaultRootTol;
  double dedup_tol = kDefaultDedupTol;
  /// 0 = hardware concurrency, capped by HTSPEC_THREADS when set.
  int threads = 0;
  bool keep_eigenvectors = true;
};

/// Worker count for the given request (see SpectrumOptions::threads).
int resolve_thread_count(int requested);

/// Result of trying to certify one eigenvalue through its witnesses.
struct Certification {
  CertStatus status = CertStatus::kUncertified;
  double residual = 0.0;
  std::optional<Eigenpair> pair;
  std::optional<Subtree> used_witness;
  std::string note;
};

/// For each witness in order: build a lambda-normal matrix on it, turn it
/// into an eigenvector, lift it back to the whole tree along the peel
/// sequence and check the residual there. Stops at the first success.
Certification certify_root(const WeightedHypertree& tree, Complex lambda, std::span<const Subtree> witnesses,
                           double tol = kDefaultResidualTol, double check_tol = kDefaultCheckTol);

/// Complete eigenvalue set of a weighted hypertree (k >= 3): all vertex
/// weights plus the roots of the matching polynomials of all subtrees of the
/// components left after deleting zero-weight edges, deduplicated and
/// certified.
SpectrumReport eigenvalues(const WeightedHypertree& tree, const SpectrumOptions& opts = {});

struct RadiusEstimate {
  double by_roots = 0.0;
  double by_power = 0.0;
  double gap = 0.0;
  int power_iterations = 0;
};

/// Largest real root of the matching polynomial together with the
/// power-iteration estimate. Weights must be nonnegative.
RadiusEstimate spectral_radius_estimates(const WeightedHypertree& tree);

/// Largest real root of the matching polynomial; NumericError when the power
/// iteration disagrees by more than agreement_tol.
double spectral_radius(const WeightedHypertree& tree, double agreement_tol = 1e-6);

/// eigenvalues() under the Laplacian / signless Laplacian weighting.
SpectrumReport corollary_spectrum(const Hypergraph& tree, LaplacianSign sign, const SpectrumOptions& opts = {});

struct VerificationEntry {
  Complex lambda;
  CertStatus status = CertStatus::kUncertified;
  double residual = 0.0;
  std::string note;
};

struct VerificationSummary {
  int trivial_checked = 0;
  int trivial_failed = 0;
  int certified = 0;
  int singular = 0;
  int collisions = 0;
  int uncertified = 0;
  std::vector<VerificationEntry> entries;

  bool all_certified() const { return trivial_failed == 0 && singular == 0 && uncertified == 0; }
};

/// Re-derives every certificate in a report from scratch. Failures are
/// recorded, never thrown.
VerificationSummary verify_report(const WeightedHypertree& tree, const SpectrumReport& report,
                                  double tol = kDefaultResidualTol);

}  // namespace htspec
