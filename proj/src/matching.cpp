#include "htspec/matching.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace htspec {
namespace {

// Extends the current matching with edges of index >= first.
void grow_matchings(const Hypergraph& g, int first, std::vector<int>& current, std::vector<char>& used,
                    const std::function<void(const std::vector<int>&)>& visit) {
  visit(current);
  for (int e = first; e < g.m(); ++e) {
    const auto& ed = g.edge(e);
    if (std::any_of(ed.begin(), ed.end(), [&](int v) { return used[static_cast<std::size_t>(v)] != 0; })) continue;
    for (int v : ed) used[static_cast<std::size_t>(v)] = 1;
    current.push_back(e);
    grow_matchings(g, e + 1, current, used, visit);
    current.pop_back();
    for (int v : ed) used[static_cast<std::size_t>(v)] = 0;
  }
}

void for_each_matching(const Hypergraph& g, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> current;
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  grow_matchings(g, 0, current, used, visit);
}

}  // namespace

std::vector<Matching> enumerate_matchings(const Hypergraph& graph) {
  std::vector<Matching> out;
  for_each_matching(graph, [&](const std::vector<int>& m) { out.push_back(Matching{m}); });
  return out;
}

std::vector<BigInt> matching_counts(const Hypergraph& graph) {
  std::vector<BigInt> counts;
  for_each_matching(graph, [&](const std::vector<int>& m) {
    if (counts.size() <= m.size()) counts.resize(m.size() + 1, BigInt(0));
    counts[m.size()] += 1;
  });
  return counts;
}

Polynomial matching_polynomial(const WeightedHypergraph& g) {
  const Hypergraph& h = g.graph();
  const auto k = static_cast<unsigned>(h.k());
  Polynomial total;
  std::vector<char> covered(static_cast<std::size_t>(h.n()), 0);
  for_each_matching(h, [&](const std::vector<int>& m) {
    Scalar coeff(m.size() % 2 == 0 ? 1 : -1);
    std::fill(covered.begin(), covered.end(), 0);
    for (int e : m) {
      coeff *= g.edge_weight(e).pow(k);
      for (int v : h.edge(e)) covered[static_cast<std::size_t>(v)] = 1;
    }
    Polynomial term = Polynomial::constant(coeff);
    for (int v = 0; v < h.n(); ++v) {
      if (!covered[static_cast<std::size_t>(v)]) term *= Polynomial::linear_root(g.vertex_weight(v));
    }
    total += term;
  });
  return total;
}

Polynomial matching_polynomial_dp(const WeightedHypergraph& g) {
  const Hypergraph& h = g.graph();
  TreeCertificate cert = validate(h);
  if (!cert.acyclic) throw StructuralError("matching_polynomial_dp requires a forest (" + cert.describe() + ")");
  const auto k = static_cast<unsigned>(h.k());
  const auto n = static_cast<std::size_t>(h.n());

  // Root each component at its smallest vertex and record a BFS order.
  std::vector<int> parent_edge(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<int> order;
  std::vector<int> roots;
  for (int r = 0; r < h.n(); ++r) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    roots.push_back(r);
    std::queue<int> q;
    q.push(r);
    seen[static_cast<std::size_t>(r)] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      order.push_back(v);
      for (int e : h.incident(v)) {
        if (e == parent_edge[static_cast<std::size_t>(v)]) continue;
        for (int u : h.edge(e)) {
          if (u == v) continue;
          seen[static_cast<std::size_t>(u)] = 1;
          parent_edge[static_cast<std::size_t>(u)] = e;
          q.push(u);
        }
      }
    }
  }

  // reserved[v]: matchings below v leaving v uncovered, without v's own factor.
  // total[v]: all matchings below v, v's factor included when v is uncovered.
  std::vector<Polynomial> reserved(n), total(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<Polynomial> skip;   // child edge left out
    std::vector<Polynomial> taken;  // child edge in the matching
    for (int e : h.incident(v)) {
      if (e == parent_edge[static_cast<std::size_t>(v)]) continue;
      Polynomial not_taken = Polynomial::constant(Scalar(1));
      Polynomial with = Polynomial::constant(-g.edge_weight(e).pow(k));
      for (int u : h.edge(e)) {
        if (u == v) continue;
        not_taken *= total[static_cast<std::size_t>(u)];
        with *= reserved[static_cast<std::size_t>(u)];
      }
      skip.push_back(std::move(not_taken));
      taken.push_back(std::move(with));
    }
    Polynomial free_part = Polynomial::constant(Scalar(1));
    for (const auto& s : skip) free_part *= s;
    Polynomial covered_part;
    for (std::size_t i = 0; i < taken.size(); ++i) {
      Polynomial term = taken[i];
      for (std::size_t j = 0; j < skip.size(); ++j) {
        if (j != i) term *= skip[j];
      }
      covered_part += term;
    }
    auto uv = static_cast<std::size_t>(v);
    total[uv] = Polynomial::linear_root(g.vertex_weight(v)) * free_part + covered_part;
    reserved[uv] = std::move(free_part);
  }

  Polynomial result = Polynomial::constant(Scalar(1));
  for (int r : roots) result *= total[static_cast<std::size_t>(r)];
  return result;
}

Polynomial phi_polynomial(const Hypergraph& graph) {
  auto counts = matching_counts(graph);
  const int nu = static_cast<int>(counts.size()) - 1;
  Polynomial out;
  for (int i = 0; i <= nu; ++i) {
    Rational c(counts[static_cast<std::size_t>(i)]);
    if (i % 2 == 1) c = -c;
    out += Polynomial::monomial(Scalar(c), (nu - i) * graph.k());
  }
  return out;
}

Complex eval_mu_tilde(const WeightedHypergraph& g, std::span<const Complex> lambdas) {
  const Hypergraph& h = g.graph();
  if (static_cast<int>(lambdas.size()) != h.m()) {
    throw DomainError("eval_mu_tilde: expected " + std::to_string(h.m()) + " edge values, got " +
                      std::to_string(lambdas.size()));
  }
  std::vector<Complex> chi(static_cast<std::size_t>(h.m()));
  for (int e = 0; e < h.m(); ++e) {
    Complex we = g.edge_weight(e).to_complex();
    Complex lam = lambdas[static_cast<std::size_t>(e)];
    Complex prod(1.0, 0.0);
    for (int v : h.edge(e)) {
      Complex gap = lam - g.vertex_weight(v).to_complex();
      if (gap == Complex(0.0, 0.0)) {
        throw PoleError("eval_mu_tilde: lambda on edge " + std::to_string(e) + " equals the weight of vertex " +
                        std::to_string(v));
      }
      prod *= we / gap;
    }
    chi[static_cast<std::size_t>(e)] = prod;
  }
  Complex sum(0.0, 0.0);
  for_each_matching(h, [&](const std::vector<int>& m) {
    Complex term(m.size() % 2 == 0 ? 1.0 : -1.0, 0.0);
    for (int e : m) term *= chi[static_cast<std::size_t>(e)];
    sum += term;
  });
  return sum;
}

Complex eval_mu_tilde(const WeightedHypergraph& g, Complex lambda) {
  std::vector<Complex> lambdas(static_cast<std::size_t>(g.m()), lambda);
  return eval_mu_tilde(g, lambdas);
}

Polynomial corollary_polynomial(const Hypergraph& tree, const Subtree& sub, LaplacianSign sign) {
  std::vector<Edge> local_edges;
  std::vector<int> local(static_cast<std::size_t>(tree.n()), -1);
  for (std::size_t i = 0; i < sub.vertex_set.size(); ++i) local[static_cast<std::size_t>(sub.vertex_set[i])] = static_cast<int>(i);
  for (int e : sub.edge_indices) {
    Edge ed;
    for (int v : tree.edge(e)) ed.push_back(local[static_cast<std::size_t>(v)]);
    local_edges.push_back(std::move(ed));
  }
  Hypergraph h(tree.k(), static_cast<int>(sub.vertex_set.size()), std::move(local_edges));
  const bool laplacian = sign == LaplacianSign::kLaplacian;
  const bool odd_k = tree.k() % 2 == 1;
  Polynomial total;
  for (const auto& m : enumerate_matchings(h)) {
    // (-1)^{(k+1)|M|} is +1 for odd k.
    bool negative = (m.edge_indices.size() % 2 == 1) && !(laplacian && odd_k);
    Polynomial term = Polynomial::constant(Scalar(negative ? -1 : 1));
    std::vector<char> covered(sub.vertex_set.size(), 0);
    for (int e : m.edge_indices) {
      for (int v : h.edge(e)) covered[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i < sub.vertex_set.size(); ++i) {
      if (!covered[i]) term *= Polynomial::linear_root(Scalar(tree.degree(sub.vertex_set[i])));
    }
    total += term;
  }
  return total;
}

}  // namespace htspec
