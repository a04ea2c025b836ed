#include "htspec/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

namespace htspec {
namespace {

Complex ipow(Complex z, int e) {
  Complex r(1.0, 0.0);
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

double inf_norm(std::span<const Complex> x) {
  double m = 0;
  for (const auto& z : x) m = std::max(m, std::abs(z));
  return m;
}


// Newton steps on A x^{k-1} = rho x^{[k-1]} with x_top = 1, started from a
// power-iteration iterate. Used when a near-tie with another eigenvalue
// makes the iteration crawl. Returns false if x leaves the positive cone.
bool newton_refine(const Hypergraph& h, const std::vector<double>& vw, const std::vector<double>& ew,
                   std::vector<double>& x, double& rho) {
  const int k = h.k();
  const auto n = static_cast<Eigen::Index>(x.size());
  const auto top = static_cast<Eigen::Index>(std::max_element(x.begin(), x.end()) - x.begin());
  auto at = [&](Eigen::Index i) { return x[static_cast<std::size_t>(i)]; };
  for (int step = 0; step < 20; ++step) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n + 1, n + 1);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    for (Eigen::Index v = 0; v < n; ++v) {
      const double diag = vw[static_cast<std::size_t>(v)] - rho;
      const double pk = std::pow(at(v), k - 1);
      rhs(v) = -diag * pk;
      jac(v, v) = (k - 1) * diag * std::pow(at(v), k - 2);
      jac(v, n) = -pk;
    }
    for (int e = 0; e < h.m(); ++e) {
      const auto& ed = h.edge(e);
      const double we = ew[static_cast<std::size_t>(e)];
      for (int v : ed) {
        double prod = we;
        for (int u : ed) {
          if (u != v) prod *= at(u);
        }
        rhs(v) -= prod;
        for (int u : ed) {
          if (u == v) continue;
          double part = we;
          for (int t : ed) {
            if (t != v && t != u) part *= at(t);
          }
          jac(v, u) += part;
        }
      }
    }
    jac(n, top) = 1.0;
    rhs(n) = 1.0 - at(top);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(jac);
    Eigen::VectorXd delta = lu.solve(rhs);
    if (!delta.allFinite()) return false;
    for (Eigen::Index v = 0; v < n; ++v) {
      x[static_cast<std::size_t>(v)] += delta(v);
      if (!(at(v) > 0)) return false;
    }
    rho += delta(n);
    if (delta.head(n).lpNorm<Eigen::Infinity>() <= 1e-15) break;
  }
  return true;
}

}  // namespace

std::vector<Complex> apply(const WeightedHypergraph& g, std::span<const Complex> x) {
  const Hypergraph& h = g.graph();
  if (static_cast<int>(x.size()) != h.n()) {
    throw DomainError("apply: vector has length " + std::to_string(x.size()) + ", expected " + std::to_string(h.n()));
  }
  std::vector<Complex> y(x.size());
  for (int v = 0; v < h.n(); ++v) {
    y[static_cast<std::size_t>(v)] = g.vertex_weight(v).to_complex() * ipow(x[static_cast<std::size_t>(v)], h.k() - 1);
  }
  for (int e = 0; e < h.m(); ++e) {
    Complex we = g.edge_weight(e).to_complex();
    const auto& ed = h.edge(e);
    for (int v : ed) {
      Complex prod = we;
      for (int u : ed) {
        if (u != v) prod *= x[static_cast<std::size_t>(u)];
      }
      y[static_cast<std::size_t>(v)] += prod;
    }
  }
  return y;
}

double residual(const WeightedHypergraph& g, Complex lambda, std::span<const Complex> x) {
  double norm = inf_norm(x);
  if (norm == 0.0) throw DomainError("residual: zero vector is not an eigenvector");
  auto y = htspec::apply(g, x);
  double worst = 0;
  for (std::size_t v = 0; v < x.size(); ++v) {
    worst = std::max(worst, std::abs(y[v] - lambda * ipow(x[v], g.k() - 1)));
  }
  return worst / std::pow(std::max(1.0, norm), g.k() - 1);
}

Eigenpair unit_eigenpair(const WeightedHypergraph& g, int vertex) {
  if (g.k() < 3) {
    throw UnsupportedError("unit eigenpairs need k >= 3; for k = 2 the spectrum is given by the "
                           "characteristic polynomial, which equals the matching polynomial");
  }
  if (vertex < 0 || vertex >= g.n()) throw DomainError("unit_eigenpair: vertex out of range");
  Eigenpair p;
  p.lambda = g.vertex_weight(vertex).to_complex();
  p.x.assign(static_cast<std::size_t>(g.n()), Complex(0.0, 0.0));
  p.x[static_cast<std::size_t>(vertex)] = 1.0;
  p.residual = residual(g, p.lambda, p.x);
  return p;
}

Eigenpair lift_eigenpair(const WeightedHypergraph& g, int edge, const Eigenpair& sub_pair, double tol) {
  const Hypergraph& h = g.graph();
  if (h.k() < 3) throw UnsupportedError("lift_eigenpair needs k >= 3");
  if (edge < 0 || edge >= h.m()) throw DomainError("lift_eigenpair: edge out of range");
  int ones = 0;
  for (int v : h.edge(edge)) ones += h.degree(v) == 1 ? 1 : 0;
  if (ones < 2) throw DomainError("lift_eigenpair: edge has fewer than two degree-one vertices");
  SubHypergraph rest = remove_edge(g, edge);
  if (rest.vertex_map.size() != sub_pair.x.size()) {
    throw DomainError("lift_eigenpair: eigenvector length does not match the reduced graph");
  }
  double sub_res = residual(rest.graph, sub_pair.lambda, sub_pair.x);
  if (sub_res > tol) {
    throw DomainError("lift_eigenpair: incoming pair has residual " + std::to_string(sub_res));
  }
  Eigenpair out;
  out.lambda = sub_pair.lambda;
  out.x.assign(static_cast<std::size_t>(h.n()), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < rest.vertex_map.size(); ++i) {
    out.x[static_cast<std::size_t>(rest.vertex_map[i])] = sub_pair.x[i];
  }
  out.residual = residual(g, out.lambda, out.x);
  return out;
}

Eigenpair lift_to_tree(const WeightedHypertree& tree, const Subtree& target, const Eigenpair& pair, double tol) {
  if (pair.x.size() != target.vertex_set.size()) {
    throw DomainError("lift_to_tree: eigenvector length does not match the subtree");
  }
  std::vector<int> seq = peel_sequence(tree, target);
  // chain[i] is the graph before the i-th deletion; ids track the originals.
  std::vector<WeightedHypergraph> chain{static_cast<const WeightedHypergraph&>(tree)};
  std::vector<int> local_edges;
  std::vector<int> edge_ids(static_cast<std::size_t>(tree.m()));
  std::vector<int> vertex_ids(static_cast<std::size_t>(tree.n()));
  std::iota(edge_ids.begin(), edge_ids.end(), 0);
  std::iota(vertex_ids.begin(), vertex_ids.end(), 0);
  for (int e : seq) {
    auto local = static_cast<int>(std::find(edge_ids.begin(), edge_ids.end(), e) - edge_ids.begin());
    SubHypergraph rest = remove_edge(chain.back(), local);
    std::vector<int> next_edges;
    std::vector<int> next_vertices;
    for (int le : rest.edge_map) next_edges.push_back(edge_ids[static_cast<std::size_t>(le)]);
    for (int lv : rest.vertex_map) next_vertices.push_back(vertex_ids[static_cast<std::size_t>(lv)]);
    edge_ids = std::move(next_edges);
    vertex_ids = std::move(next_vertices);
    local_edges.push_back(local);
    chain.push_back(std::move(rest.graph));
  }
  if (vertex_ids != target.vertex_set) throw DomainError("lift_to_tree: peel sequence did not end at the target");
  Eigenpair out = pair;
  for (std::size_t i = seq.size(); i-- > 0;) out = lift_eigenpair(chain[i], local_edges[i], out, tol);
  out.residual = residual(tree, out.lambda, out.x);
  return out;
}

std::vector<RestrictedPair> restrict_eigenpair(const WeightedHypergraph& g, const Eigenpair& pair, double tol,
                                               double support_tol) {
  const Hypergraph& h = g.graph();
  double res = residual(g, pair.lambda, pair.x);
  if (res > tol) throw DomainError("restrict_eigenpair: pair has residual " + std::to_string(res));
  double norm = inf_norm(pair.x);
  std::vector<char> in_support(static_cast<std::size_t>(h.n()), 0);
  for (int v = 0; v < h.n(); ++v) {
    in_support[static_cast<std::size_t>(v)] = std::abs(pair.x[static_cast<std::size_t>(v)]) > support_tol * norm;
  }
  // Components of the induced sub-hypergraph on the support.
  std::vector<int> comp(static_cast<std::size_t>(h.n()), -1);
  std::vector<int> induced_edges;
  for (int e = 0; e < h.m(); ++e) {
    const auto& ed = h.edge(e);
    if (std::all_of(ed.begin(), ed.end(), [&](int v) { return in_support[static_cast<std::size_t>(v)] != 0; })) {
      induced_edges.push_back(e);
    }
  }
  int count = 0;
  for (int s = 0; s < h.n(); ++s) {
    if (!in_support[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : h.incident(v)) {
        if (!std::binary_search(induced_edges.begin(), induced_edges.end(), e)) continue;
        for (int u : h.edge(e)) {
          if (comp[static_cast<std::size_t>(u)] < 0) {
            comp[static_cast<std::size_t>(u)] = count;
            stack.push_back(u);
          }
        }
      }
    }
    ++count;
  }

  std::vector<RestrictedPair> out;
  for (int c = 0; c < count; ++c) {
    std::vector<int> vmap;
    for (int v = 0; v < h.n(); ++v) {
      if (comp[static_cast<std::size_t>(v)] == c) vmap.push_back(v);
    }
    std::vector<int> emap;
    for (int e : induced_edges) {
      if (comp[static_cast<std::size_t>(h.edge(e).front())] == c) emap.push_back(e);
    }
    std::vector<int> local(static_cast<std::size_t>(h.n()), -1);
    for (std::size_t i = 0; i < vmap.size(); ++i) local[static_cast<std::size_t>(vmap[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    Weighting w;
    for (int v : vmap) w.vertex_weights.push_back(g.vertex_weight(v));
    for (int e : emap) {
      Edge ed;
      for (int v : h.edge(e)) ed.push_back(local[static_cast<std::size_t>(v)]);
      edges.push_back(std::move(ed));
      w.edge_weights.push_back(g.edge_weight(e));
    }
    WeightedHypergraph part(Hypergraph(h.k(), static_cast<int>(vmap.size()), std::move(edges)), std::move(w));
    Eigenpair p;
    p.lambda = pair.lambda;
    for (int v : vmap) p.x.push_back(pair.x[static_cast<std::size_t>(v)]);
    p.residual = residual(part, p.lambda, p.x);
    out.push_back({SubHypergraph{std::move(part), std::move(vmap), std::move(emap)}, std::move(p)});
  }
  return out;
}

PowerResult power_spectral_radius(const WeightedHypergraph& g, double tol, int max_iters) {
  if (!g.weights().is_nonnegative()) {
    throw DomainError("power_spectral_radius: weights must be nonnegative (w(v) >= 0, w(e) > 0)");
  }
  const Hypergraph& h = g.graph();
  if (!validate(h).connected) throw DomainError("power_spectral_radius: hypergraph must be connected");
  const int k = h.k();
  const auto n = static_cast<std::size_t>(h.n());
  std::vector<double> vw(n), ew(static_cast<std::size_t>(h.m()));
  for (int v = 0; v < h.n(); ++v) vw[static_cast<std::size_t>(v)] = g.vertex_weight(v).real();
  for (int e = 0; e < h.m(); ++e) ew[static_cast<std::size_t>(e)] = g.edge_weight(e).real();

  PowerResult out;
  std::vector<double> x(n, 1.0), y(n);
  bool refined = false;
  for (int it = 1; it <= max_iters; ++it) {
    for (std::size_t v = 0; v < n; ++v) y[v] = (vw[v] + 1.0) * std::pow(x[v], k - 1);
    for (int e = 0; e < h.m(); ++e) {
      const auto& ed = h.edge(e);
      for (int v : ed) {
        double prod = ew[static_cast<std::size_t>(e)];
        for (int u : ed) {
          if (u != v) prod *= x[static_cast<std::size_t>(u)];
        }
        y[static_cast<std::size_t>(v)] += prod;
      }
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0;
    for (std::size_t v = 0; v < n; ++v) {
      double ratio = y[v] / std::pow(x[v], k - 1);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    out.history.emplace_back(lo - 1.0, hi - 1.0);
    out.lower = lo - 1.0;
    out.upper = hi - 1.0;
    out.rho = 0.5 * (lo + hi) - 1.0;
    out.iterations = it;
    if (hi - lo <= tol) {
      out.x = x;
      return out;
    }
    // Once the bracket is tight enough to sit in Newton's basin, one
    // refinement replaces a possibly very long crawl. The bracket computed
    // on the next pass stays a valid enclosure either way.
    if (!refined && it >= 1000 && hi - lo <= 1e-4 * std::max(1.0, hi)) {
      refined = true;
      std::vector<double> trial = x;
      double rho = 0.5 * (lo + hi) - 1.0;
      if (newton_refine(h, vw, ew, trial, rho)) {
        x = std::move(trial);
        continue;
      }
    }
    double top = 0;
    for (std::size_t v = 0; v < n; ++v) {
      x[v] = std::pow(y[v], 1.0 / (k - 1));
      top = std::max(top, x[v]);
    }
    for (auto& xv : x) xv /= top;
  }
  std::ostringstream os;
  os.precision(17);
  os << "power_spectral_radius: no convergence after " << max_iters << " iterations; bracket [" << out.lower
     << ", " << out.upper << "]";
  throw NumericError(os.str());
}

}  // namespace htspec
