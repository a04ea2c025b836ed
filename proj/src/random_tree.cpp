#include "htspec/random_tree.hpp"

#include <algorithm>
#include <numeric>

namespace htspec {
namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Scalar small_rational(std::mt19937_64& rng, int lo, int hi) {
  int p = uniform(rng, lo, hi);
  int q = uniform(rng, 1, 3);
  return Scalar::rational(p, q);
}

}  // namespace

WeightedHypertree random_hypertree(std::mt19937_64& rng, const RandomTreeOptions& opts) {
  if (opts.k < 2) throw DomainError("random_hypertree: k must be at least 2");
  if (opts.m < 0) throw DomainError("random_hypertree: m must be nonnegative");
  const int n = opts.m * (opts.k - 1) + 1;
  std::vector<Edge> edges;
  int next = 1;
  for (int i = 0; i < opts.m; ++i) {
    Edge e{uniform(rng, 0, next - 1)};
    for (int j = 1; j < opts.k; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  if (opts.relabel) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& e : edges) {
      for (auto& v : e) v = perm[static_cast<std::size_t>(v)];
    }
    std::shuffle(edges.begin(), edges.end(), rng);
  }
  Hypergraph graph(opts.k, n, std::move(edges));
  Weighting w;
  switch (opts.weights) {
    case RandomWeights::kUnit:
      w = unit_weighting(graph);
      break;
    case RandomWeights::kNonnegative:
      for (int v = 0; v < n; ++v) w.vertex_weights.push_back(small_rational(rng, 0, 3));
      for (int e = 0; e < opts.m; ++e) w.edge_weights.push_back(small_rational(rng, 1, 4));
      break;
    case RandomWeights::kSigned:
      for (int v = 0; v < n; ++v) w.vertex_weights.push_back(small_rational(rng, -3, 3));
      for (int e = 0; e < opts.m; ++e) {
        int p = uniform(rng, 1, 4);
        if (uniform(rng, 0, 1) == 0) p = -p;
        int q = uniform(rng, 1, 3);
        w.edge_weights.push_back(Scalar::rational(p, q));
      }
      break;
  }
  return WeightedHypertree(std::move(graph), std::move(w));
}

}  // namespace htspec
