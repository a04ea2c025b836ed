#pragma once

// Shared helpers and independent oracles for the test suites.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "htspec/hypertree.hpp"
#include "htspec/io.hpp"
#include "htspec/random_tree.hpp"
#include "htspec/tensor.hpp"

namespace htspec::testing {

inline std::string fixture(const std::string& name) { return std::string(HTSPEC_FIXTURE_DIR) + "/" + name; }

inline WeightedHypertree load_tree(const std::string& name) { return parse_tree(load_json(fixture(name))); }

inline WeightedHypertree make_tree(int k, int n, std::vector<Edge> edges, std::vector<Scalar> vw = {},
                                   std::vector<Scalar> ew = {}) {
  Hypergraph g(k, n, std::move(edges));
  Weighting w = unit_weighting(g);
  if (!vw.empty()) w.vertex_weights = std::move(vw);
  if (!ew.empty()) w.edge_weights = std::move(ew);
  return WeightedHypertree(std::move(g), std::move(w));
}

inline WeightedHypertree single_edge() { return make_tree(3, 3, {{0, 1, 2}}); }
inline WeightedHypertree loose_path() { return make_tree(3, 5, {{0, 1, 2}, {2, 3, 4}}); }
inline WeightedHypertree star3() { return make_tree(3, 7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}); }

inline Complex omega() { return std::polar(1.0, 2.0 * std::numbers::pi / 3.0); }

/// Roots of x^k = c for real c > 0, sorted by (Re, Im).
inline std::vector<Complex> kth_roots(double c, int k) {
  std::vector<Complex> out;
  for (int j = 0; j < k; ++j) out.push_back(std::polar(std::pow(c, 1.0 / k), 2.0 * std::numbers::pi * j / k));
  return out;
}

/// Connected edge subsets found by trying all 2^m subsets; connectivity by
/// flood fill over shared vertices.
inline int brute_force_edge_subtrees(const Hypergraph& g) {
  int count = 0;
  const int m = g.m();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> edges;
    for (int e = 0; e < m; ++e) {
      if (mask & (1u << e)) edges.push_back(e);
    }
    std::vector<char> reached(edges.size(), 0);
    reached[0] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (reached[i]) continue;
        for (std::size_t j = 0; j < edges.size() && !reached[i]; ++j) {
          if (!reached[j]) continue;
          for (int v : g.edge(edges[i])) {
            for (int u : g.edge(edges[j])) {
              if (u == v) reached[i] = 1;
            }
          }
        }
        if (reached[i]) grew = true;
      }
    }
    bool all = true;
    for (char r : reached) all = all && r;
    count += all ? 1 : 0;
  }
  return count;
}

/// (A x^{k-1})_i from the dense symmetric tensor: diagonal w(v), entry
/// w(e)/(k-1)! on every ordering of an edge. Sums over all n^{k-1} index
/// tuples, so only for tiny inputs.
inline std::vector<Complex> dense_apply(const WeightedHypergraph& g, const std::vector<Complex>& x) {
  const int n = g.n();
  const int k = g.k();
  double fact = 1;
  for (int i = 2; i < k; ++i) fact *= i;
  auto entry = [&](std::vector<int> idx) -> Complex {
    bool diag = true;
    for (int v : idx) diag = diag && v == idx[0];
    if (diag) return g.vertex_weight(idx[0]).to_complex();
    std::sort(idx.begin(), idx.end());
    for (int e = 0; e < g.m(); ++e) {
      if (g.graph().edge(e) == idx) return g.edge_weight(e).to_complex() / fact;
    }
    return 0.0;
  };
  std::vector<Complex> y(static_cast<std::size_t>(n));
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < n; ++i) {
    long total = 1;
    for (int j = 1; j < k; ++j) total *= n;
    for (long t = 0; t < total; ++t) {
      long r = t;
      idx[0] = i;
      Complex prod = 1.0;
      for (int j = 1; j < k; ++j) {
        idx[static_cast<std::size_t>(j)] = static_cast<int>(r % n);
        prod *= x[static_cast<std::size_t>(r % n)];
        r /= n;
      }
      Complex a = entry(idx);
      if (a != 0.0) y[static_cast<std::size_t>(i)] += a * prod;
    }
  }
  return y;
}

inline WeightedHypertree random_tree(std::mt19937_64& rng, int k, int m, RandomWeights w) {
  RandomTreeOptions opts;
  opts.k = k;
  opts.m = m;
  opts.weights = w;
  return random_hypertree(rng, opts);
}

}  // namespace htspec::testing
