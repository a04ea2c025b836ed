#pragma once

#include <span>
#include <vector>

#include "htspec/hypertree.hpp"
#include "htspec/polynomial.hpp"

namespace htspec {

/// Pairwise vertex-disjoint edge set, ascending indices. May be empty.
struct Matching {
  std::vector<int> edge_indices;
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Every matching exactly once, the empty one first, then in lexicographic
/// order of the sorted index lists.
std::vector<Matching> enumerate_matchings(const Hypergraph& graph);

/// p(H, i): number of i-edge matchings, i = 0..matching number.
std::vector<BigInt> matching_counts(const Hypergraph& graph);

/// Weighted matching polynomial straight from its definition:
///   sum over matchings M of (-1)^|M| * prod_{e in M} w(e)^k * prod_{v not covered} (x - w(v)).
/// Works for any k-graph (forests included). Monic of degree n.
Polynomial matching_polynomial(const WeightedHypergraph& g);

/// Same polynomial by a rooted tree recursion; requires an acyclic input
/// (forest). Each vertex carries the sums for "left free for its parent edge"
/// and "already covered below", combined bottom-up.
Polynomial matching_polynomial_dp(const WeightedHypergraph& g);

/// sum_i (-1)^i p(T, i) x^{(m(T) - i) k}, m(T) the matching number.
Polynomial phi_polynomial(const Hypergraph& graph);

/// Multivariate matching sum
///   sum_M (-1)^|M| prod_{e in M} prod_{v in e} w(e) / (x_e - w(v))
/// at x_e = lambdas[e]. Throws PoleError if some lambdas[e] == w(v), v in e.
Complex eval_mu_tilde(const WeightedHypergraph& g, std::span<const Complex> lambdas);
/// Constant assignment x_e = lambda for all e.
Complex eval_mu_tilde(const WeightedHypergraph& g, Complex lambda);

/// Laplacian / signless-Laplacian matching polynomial of a subtree taken with
/// respect to the whole tree T:
///   sum_{M in M(T')} s^|M| prod_{v in V(T') \ V(M)} (x - d_T(v)),
/// with s = (-1)^{k+1} (Laplacian) or -1 (signless). Independent of the
/// weighted machinery; used to cross-check it.
Polynomial corollary_polynomial(const Hypergraph& tree, const Subtree& sub, LaplacianSign sign);

}  // namespace htspec
