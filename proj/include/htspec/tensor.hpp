#pragma once

#include <span>
#include <utility>
#include <vector>

#include "htspec/hypertree.hpp"

namespace htspec {

inline constexpr double kDefaultResidualTol = 1e-8;

struct Eigenpair {
  Complex lambda;
  std::vector<Complex> x;
  /// inf-norm of A x^{k-1} - lambda x^{[k-1]}, scaled by max(1, |x|_inf)^{k-1}.
  double residual = 0.0;
};

/// y = A x^{k-1} for the weighted adjacency tensor, evaluated edge-wise:
///   y_v = w(v) x_v^{k-1} + sum_{e containing v} w(e) prod_{u in e, u != v} x_u.
/// The order-k tensor is never formed.
std::vector<Complex> apply(const WeightedHypergraph& g, std::span<const Complex> x);

double residual(const WeightedHypergraph& g, Complex lambda, std::span<const Complex> x);

/// (w(v), e_v). Needs k >= 3; for k = 2 the coordinate vector is not an
/// eigenvector and UnsupportedError is thrown.
Eigenpair unit_eigenpair(const WeightedHypergraph& g, int vertex);

/// Extends an eigenpair of g \ edge to g by zeros on the degree-one vertices
/// of edge. The edge must have at least two degree-one vertices and the
/// incoming pair must be indexed like remove_edge(g, edge).
Eigenpair lift_eigenpair(const WeightedHypergraph& g, int edge, const Eigenpair& sub_pair,
                         double tol = kDefaultResidualTol);

/// Lifts an eigenpair of the subtree `target` (indexed like
/// extract_subtree(tree, target)) to the whole tree by replaying
/// peel_sequence(tree, target) backwards, one lift_eigenpair per edge.
Eigenpair lift_to_tree(const WeightedHypertree& tree, const Subtree& target, const Eigenpair& pair,
                       double tol = kDefaultResidualTol);

struct RestrictedPair {
  SubHypergraph part;
  Eigenpair pair;
};

/// Splits an eigenpair along the components of the sub-hypergraph induced
/// on its support. Every restricted vector has no zero coordinate and solves
/// the eigen-equation of its component. Coordinates with
/// |x_v| <= support_tol * |x|_inf count as zero.
std::vector<RestrictedPair> restrict_eigenpair(const WeightedHypergraph& g, const Eigenpair& pair,
                                               double tol = kDefaultResidualTol, double support_tol = 1e-12);

struct PowerResult {
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;
  std::vector<double> x;
  /// (lower, upper) Collatz-Wielandt bracket per iteration, shift removed.
  std::vector<std::pair<double, double>> history;
};

/// Spectral radius of a connected nonnegative weighted k-graph by shifted
/// power iteration: x <- normalize((A x^{k-1} + x^{[k-1]})^{[1/(k-1)]}),
/// started from all ones, until the bracket min/max of
/// (A x^{k-1})_v / x_v^{k-1} is narrower than tol. When another eigenvalue
/// sits close to rho the iteration crawls, so once the bracket is within
/// 1e-4 a single Newton refinement of (x, rho) is attempted; the reported
/// bracket is always evaluated at a positive x and so still encloses rho.
PowerResult power_spectral_radius(const WeightedHypergraph& g, double tol = 1e-11, int max_iters = 200000);

}  // namespace htspec
