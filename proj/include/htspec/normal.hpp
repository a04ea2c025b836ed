#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "htspec/hypertree.hpp"
#include "htspec/tensor.hpp"

namespace htspec {

inline constexpr double kDefaultCheckTol = 1e-9;

/// Sparse (vertex, edge) -> complex map. An entry may only exist for an
/// incident pair; absent entries read as zero. Zero-valued entries are
/// allowed in storage.
class WeightedIncidenceMatrix {
 public:
  WeightedIncidenceMatrix() = default;

  void set(const Hypergraph& g, int vertex, int edge, Complex value);
  /// Stores without the incidence check; callers guarantee vertex in edge.
  void set_unchecked(int vertex, int edge, Complex value) { entries_[{vertex, edge}] = value; }
  Complex at(int vertex, int edge) const;
  bool contains(int vertex, int edge) const { return entries_.count({vertex, edge}) != 0; }
  const std::map<std::pair<int, int>, Complex>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::pair<int, int>, Complex> entries_;
};

/// Residuals of the three normality conditions:
///   row sums       sum_{e ∋ v} B(v,e) = 1                          (per vertex)
///   edge products  prod_{v ∈ e} B(v,e) = prod_{v ∈ e} w(e)/(λ_e - w(v))  (per edge)
///   cycle products prod_i B(v_i,e_i)(λ-w(v_i)) / (B(v_{i-1},e_i)(λ-w(v_{i-1}))) = 1
///                  over a fundamental cycle basis                 (per cycle)
struct NormalReport {
  std::vector<double> c1_residuals;
  std::vector<double> c2_residuals;
  std::vector<double> c3_residuals;
  bool c1_ok = false;
  bool c2_ok = false;
  bool c3_ok = false;

  bool normal() const { return c1_ok && c2_ok; }
  bool consistent() const { return c1_ok && c2_ok && c3_ok; }
};

/// Row-sum and edge-product conditions for per-edge values lambdas[e].
/// c3 is left empty and c3_ok true. Throws PoleError on lambdas[e] == w(v).
NormalReport check_normal(const WeightedHypergraph& g, const WeightedIncidenceMatrix& b,
                          std::span<const Complex> lambdas, double tol = kDefaultCheckTol);
NormalReport check_normal(const WeightedHypergraph& g, const WeightedIncidenceMatrix& b, Complex lambda,
                          double tol = kDefaultCheckTol);

/// All three conditions at a constant lambda on an arbitrary k-graph. On an
/// acyclic input the cycle condition holds vacuously.
NormalReport check_consistent(const WeightedHypergraph& g, const WeightedIncidenceMatrix& b, Complex lambda,
                              double tol = kDefaultCheckTol);

/// The leaf-to-root construction met a vanishing divisor.
struct Singular {
  int vertex = -1;
  int edge = -1;
  std::string detail;
};

using NormalBuild = std::variant<WeightedIncidenceMatrix, Singular>;

/// Builds a lambda-normal incidence matrix of a weighted hypertree. Leaves
/// get B = 1; each edge's entry at its parent vertex comes from the product
/// condition, each vertex's entry on its parent edge from the row-sum
/// condition. The tree is rooted at the lowest-id vertex of maximum degree;
/// if that fails, other vertices of degree >= 2 are tried and the first
/// root's verdict is reported when all fail.
///
/// An entry 1 - sum counts as zero (Singular) when it is below tol times
/// the size of its terms. The root row sum must close to 1 within
/// tol * (1 + sum |B(root, e)|) plus the drift of that sum across a few ulps
/// of lambda, otherwise NotARootError. Throws PoleError if lambda equals a
/// vertex weight.
NormalBuild build_normal_matrix(const WeightedHypertree& tree, Complex lambda, double tol = kDefaultCheckTol);

/// Eigenvector with no zero coordinate from a lambda-normal matrix of a
/// hypertree. With t = B(v,e)(lambda - w(v)) and s its principal k-th root,
/// each edge's product of s values equals w(e) up to a k-th root of unity;
/// that root is divided out of one child vertex of the edge, then x is
/// propagated from the root by x_u = x_p * s_p / s_u. The vector is scaled so
/// that its largest-modulus coordinate is 1.
/// Throws SingularError on a zero t, NumericError if the residual exceeds tol.
Eigenpair eigenvector_from_normal(const WeightedHypertree& tree, const WeightedIncidenceMatrix& b, Complex lambda,
                                  double tol = kDefaultResidualTol);

/// B(v,e) = w(e) x^e / ((lambda - w(v)) x_v^k) from an eigenpair with full
/// support.
WeightedIncidenceMatrix normal_from_eigenpair(const WeightedHypergraph& g, const Eigenpair& pair,
                                              double tol = kDefaultResidualTol);

}  // namespace htspec
