#include "htspec/normal.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <variant>

namespace htspec {
namespace {

struct RootedTree {
  std::vector<int> order;          // BFS order from the root
  std::vector<int> parent_edge;    // per vertex, -1 at the root
  std::vector<int> parent_vertex;  // per edge
};

RootedTree root_at(const Hypergraph& h, int root) {
  RootedTree t;
  t.parent_edge.assign(static_cast<std::size_t>(h.n()), -1);
  t.parent_vertex.assign(static_cast<std::size_t>(h.m()), -1);
  if (h.n() == 0) return t;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    t.order.push_back(v);
    for (int e : h.incident(v)) {
      if (e == t.parent_edge[static_cast<std::size_t>(v)]) continue;
      t.parent_vertex[static_cast<std::size_t>(e)] = v;
      for (int u : h.edge(e)) {
        if (u == v) continue;
        t.parent_edge[static_cast<std::size_t>(u)] = e;
        q.push(u);
      }
    }
  }
  return t;
}

std::string complex_str(Complex z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

void guard_poles(const WeightedHypergraph& g, Complex lambda) {
  for (int v = 0; v < g.n(); ++v) {
    if (lambda == g.vertex_weight(v).to_complex()) {
      throw PoleError("lambda = " + complex_str(lambda) + " equals the weight of vertex " + std::to_string(v));
    }
  }
}

// prod_{v in e} w(e) / (lambda - w(v))
Complex edge_target(const WeightedHypergraph& g, int e, Complex lambda) {
  Complex we = g.edge_weight(e).to_complex();
  Complex prod(1.0, 0.0);
  for (int v : g.graph().edge(e)) {
    Complex gap = lambda - g.vertex_weight(v).to_complex();
    if (gap == Complex(0.0, 0.0)) {
      throw PoleError("lambda on edge " + std::to_string(e) + " equals the weight of vertex " + std::to_string(v));
    }
    prod *= we / gap;
  }
  return prod;
}

// Fundamental cycles of the vertex-edge incidence graph, each as the
// alternating list v0, e1, v1, ..., e_l (closing back to v0).
std::vector<std::vector<int>> fundamental_cycles(const Hypergraph& h) {
  const int n = h.n();
  const int nodes = n + h.m();
  std::vector<int> parent(static_cast<std::size_t>(nodes), -2);
  std::vector<int> depth(static_cast<std::size_t>(nodes), 0);
  auto neighbors = [&](int node) -> std::vector<int> {
    if (node < n) {
      std::vector<int> out;
      for (int e : h.incident(node)) out.push_back(n + e);
      return out;
    }
    return h.edge(node - n);
  };
  for (int s = 0; s < nodes; ++s) {
    if (parent[static_cast<std::size_t>(s)] != -2) continue;
    parent[static_cast<std::size_t>(s)] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b : neighbors(a)) {
        if (parent[static_cast<std::size_t>(b)] != -2) continue;
        parent[static_cast<std::size_t>(b)] = a;
        depth[static_cast<std::size_t>(b)] = depth[static_cast<std::size_t>(a)] + 1;
        q.push(b);
      }
    }
  }
  std::vector<std::vector<int>> cycles;
  for (int e = 0; e < h.m(); ++e) {
    int en = n + e;
    for (int v : h.edge(e)) {
      if (parent[static_cast<std::size_t>(v)] == en || parent[static_cast<std::size_t>(en)] == v) continue;
      std::vector<int> up_a{v}, up_b{en};
      int a = v, b = en;
      while (a != b) {
        if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
          a = parent[static_cast<std::size_t>(a)];
          up_a.push_back(a);
        } else {
          b = parent[static_cast<std::size_t>(b)];
          up_b.push_back(b);
        }
      }
      up_b.pop_back();  // shared lowest common ancestor
      std::vector<int> cycle = up_a;
      cycle.insert(cycle.end(), up_b.rbegin(), up_b.rend());
      cycles.push_back(std::move(cycle));
    }
  }
  return cycles;
}

double max_or_zero(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, x);
  return m;
}

}  // namespace

void WeightedIncidenceMatrix::set(const Hypergraph& g, int vertex, int edge, Complex value) {
  if (edge < 0 || edge >= g.m() || vertex < 0 || vertex >= g.n()) {
    throw DomainError("incidence entry (" + std::to_string(vertex) + ", " + std::to_string(edge) + ") out of range");
  }
  const auto& ed = g.edge(edge);
  if (!std::binary_search(ed.begin(), ed.end(), vertex)) {
    throw DomainError("incidence entry (" + std::to_string(vertex) + ", " + std::to_string(edge) +
                      "): vertex is not in the edge");
  }
  entries_[{vertex, edge}] = value;
}

Complex WeightedIncidenceMatrix::at(int vertex, int edge) const {
  auto it = entries_.find({vertex, edge});
  return it == entries_.end() ? Complex(0.0, 0.0) : it->second;
}

NormalReport check_normal(const WeightedHypergraph& g, const WeightedIncidenceMatrix& b,
                          std::span<const Complex> lambdas, double tol) {
  const Hypergraph& h = g.graph();
  if (static_cast<int>(lambdas.size()) != h.m()) throw DomainError("check_normal: one lambda per edge expected");
  NormalReport r;
  for (int v = 0; v < h.n(); ++v) {
    Complex sum(0.0, 0.0);
    for (int e : h.incident(v)) sum += b.at(v, e);
    r.c1_residuals.push_back(std::abs(sum - 1.0));
  }
  for (int e = 0; e < h.m(); ++e) {
    Complex target = edge_target(g, e, lambdas[static_cast<std::size_t>(e)]);
    Complex prod(1.0, 0.0);
    for (int v : h.edge(e)) prod *= b.at(v, e);
    r.c2_residuals.push_back(std::abs(prod - target));
  }
  r.c1_ok = max_or_zero(r.c1_residuals) <= tol;
  r.c2_ok = max_or_zero(r.c2_residuals) <= tol;
  r.c3_ok = true;
  return r;
}

NormalReport check_normal(const WeightedHypergraph& g, const WeightedIncidenceMatrix& b, Complex lambda,
                          double tol) {
  std::vector<Complex> lambdas(static_cast<std::size_t>(g.m()), lambda);
  return check_normal(g, b, lambdas, tol);
}

NormalReport check_consistent(const WeightedHypergraph& g, const WeightedIncidenceMatrix& b, Complex lambda,
                              double tol) {
  guard_poles(g, lambda);
  NormalReport r = check_normal(g, b, lambda, tol);
  const int n = g.n();
  auto potential = [&](int v, int e) { return b.at(v, e) * (lambda - g.vertex_weight(v).to_complex()); };
  for (const auto& cycle : fundamental_cycles(g.graph())) {
    // cycle = v0, e1, v1, e2, ..., e_l; vertex nodes at even positions.
    Complex product(1.0, 0.0);
    bool degenerate = false;
    const std::size_t len = cycle.size();
    for (std::size_t i = 1; i < len; i += 2) {
      int e = cycle[i] - n;
      int prev = cycle[i - 1];
      int next = cycle[(i + 1) % len];
      Complex den = potential(prev, e);
      if (den == Complex(0.0, 0.0)) {
        degenerate = true;
        break;
      }
      product *= potential(next, e) / den;
    }
    r.c3_residuals.push_back(degenerate ? std::numeric_limits<double>::infinity() : std::abs(product - 1.0));
  }
  r.c3_ok = max_or_zero(r.c3_residuals) <= tol;
  return r;
}

namespace {

using LComplex = std::complex<long double>;

struct Pass {
  std::optional<Singular> singular;
  WeightedIncidenceMatrix b;
  LComplex closure;  // root row sum minus 1
  long double mass = 1;
};

// One bottom-up pass rooted at `root`. Entries are formed in long double;
// an entry counts as zero when it is tiny next to the terms it was formed
// from, since then its sign and size are rounding noise.
Pass build_from(const WeightedHypertree& tree, LComplex lam, int root, double tol) {
  const Hypergraph& h = tree.graph();
  RootedTree rt = root_at(h, root);
  std::vector<LComplex> gap(static_cast<std::size_t>(h.n()));
  for (int v = 0; v < h.n(); ++v) {
    Complex w = tree.vertex_weight(v).to_complex();
    gap[static_cast<std::size_t>(v)] = lam - LComplex(w.real(), w.imag());
  }
  std::map<std::pair<int, int>, LComplex> val;
  std::map<std::pair<int, int>, long double> scale;
  Pass pass;
  for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
    int v = *it;
    int up = rt.parent_edge[static_cast<std::size_t>(v)];
    LComplex child_sum(0.0L, 0.0L);
    long double mass = 1.0L;
    for (int g : h.incident(v)) {
      if (g == up) continue;
      // Children of g are already finished.
      Complex wg = tree.edge_weight(g).to_complex();
      LComplex entry(1.0L, 0.0L);
      for (int u : h.edge(g)) entry *= LComplex(wg.real(), wg.imag()) / gap[static_cast<std::size_t>(u)];
      for (int u : h.edge(g)) {
        if (u == v) continue;
        LComplex bu = val.at({u, g});
        if (std::abs(bu) <= static_cast<long double>(tol) * scale.at({u, g})) {
          pass.singular = Singular{u, g,
                                   "B(" + std::to_string(u) + ", " + std::to_string(g) +
                                       ") vanishes; the branch below it is itself normal at this lambda"};
          return pass;
        }
        entry /= bu;
      }
      val[{v, g}] = entry;
      child_sum += entry;
      mass += std::abs(entry);
    }
    if (up >= 0) {
      val[{v, up}] = LComplex(1.0L, 0.0L) - child_sum;
      scale[{v, up}] = mass;
    } else {
      pass.closure = child_sum - LComplex(1.0L, 0.0L);
      pass.mass = mass;
    }
  }
  for (const auto& [key, z] : val) {
    pass.b.set_unchecked(key.first, key.second,
                         Complex(static_cast<double>(z.real()), static_cast<double>(z.imag())));
  }
  return pass;
}

// How far the closure moves when lambda shifts by a few units in its last
// place. Near a vertex weight the double lambda cannot pin the closure down
// any better than this.
long double closure_spread(const WeightedHypertree& tree, Complex lambda, int root, double tol, LComplex at) {
  const long double h = 4 * std::numeric_limits<double>::epsilon() * std::abs(lambda);
  const LComplex lam(lambda.real(), lambda.imag());
  long double spread = 0;
  for (LComplex dir : {LComplex(1, 0), LComplex(-1, 0), LComplex(0, 1), LComplex(0, -1)}) {
    if (dir.imag() != 0 && lambda.imag() == 0) continue;
    Pass p = build_from(tree, lam + h * dir, root, tol);
    if (p.singular) return std::numeric_limits<long double>::infinity();
    spread = std::max(spread, std::abs(p.closure - at));
  }
  return spread;
}

}  // namespace

NormalBuild build_normal_matrix(const WeightedHypertree& tree, Complex lambda, double tol) {
  const Hypergraph& h = tree.graph();
  guard_poles(tree, lambda);
  if (h.n() == 0) return WeightedIncidenceMatrix{};
  // Roots in order of decreasing degree, ties by id. The root row absorbs
  // all rounding, so a hub root is tried first and others only on failure.
  std::vector<int> roots(static_cast<std::size_t>(h.n()));
  std::iota(roots.begin(), roots.end(), 0);
  std::stable_sort(roots.begin(), roots.end(), [&](int a, int c) { return h.degree(a) > h.degree(c); });
  const LComplex lam(lambda.real(), lambda.imag());
  // On total failure the hub root's verdict is reported.
  std::optional<Pass> first;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    int root = roots[i];
    if (i > 0 && h.degree(root) < 2) break;
    Pass p = build_from(tree, lam, root, tol);
    if (!p.singular) {
      long double miss = std::abs(p.closure);
      long double allowed = static_cast<long double>(tol) * p.mass;
      if (miss <= allowed) return std::move(p.b);
      // A miss far beyond any plausible spread is a plain non-root.
      if (miss <= 1e-3L * p.mass && miss <= allowed + closure_spread(tree, lambda, root, tol, p.closure)) {
        return std::move(p.b);
      }
    }
    if (i == 0) first = std::move(p);
  }
  if (first->singular) return *first->singular;
  double miss = static_cast<double>(std::abs(first->closure));
  std::ostringstream os;
  os << "lambda = " << complex_str(lambda) << " is not a root: root row sum misses 1 by " << miss;
  throw NotARootError(os.str(), miss);
}

Eigenpair eigenvector_from_normal(const WeightedHypertree& tree, const WeightedIncidenceMatrix& b, Complex lambda,
                                  double tol) {
  const Hypergraph& h = tree.graph();
  guard_poles(tree, lambda);
  const int k = h.k();
  RootedTree rt = root_at(h, 0);

  // s[(v,e)] = principal k-th root of B(v,e)(lambda - w(v)).
  std::map<std::pair<int, int>, Complex> s;
  for (int e = 0; e < h.m(); ++e) {
    for (int v : h.edge(e)) {
      Complex t = b.at(v, e) * (lambda - tree.vertex_weight(v).to_complex());
      if (t == Complex(0.0, 0.0)) {
        throw SingularError("B(" + std::to_string(v) + ", " + std::to_string(e) + ") (lambda - w(v)) is zero", v, e);
      }
      s[{v, e}] = std::pow(t, 1.0 / k);
    }
  }
  for (int e = 0; e < h.m(); ++e) {
    Complex prod(1.0, 0.0);
    for (int v : h.edge(e)) prod *= s[{v, e}];
    Complex unity = prod / tree.edge_weight(e).to_complex();
    int p = rt.parent_vertex[static_cast<std::size_t>(e)];
    int fix = h.edge(e).front() == p ? h.edge(e)[1] : h.edge(e).front();
    s[{fix, e}] /= unity;
  }

  Eigenpair pair;
  pair.lambda = lambda;
  pair.x.assign(static_cast<std::size_t>(h.n()), Complex(0.0, 0.0));
  if (h.n() > 0) pair.x[0] = 1.0;
  for (int v : rt.order) {
    int up = rt.parent_edge[static_cast<std::size_t>(v)];
    if (up < 0) continue;
    int p = rt.parent_vertex[static_cast<std::size_t>(up)];
    pair.x[static_cast<std::size_t>(v)] = pair.x[static_cast<std::size_t>(p)] * s[{p, up}] / s[{v, up}];
  }
  std::size_t big = 0;
  for (std::size_t i = 1; i < pair.x.size(); ++i) {
    if (std::abs(pair.x[i]) > std::abs(pair.x[big])) big = i;
  }
  if (!pair.x.empty()) {
    Complex scale = pair.x[big];
    for (auto& xi : pair.x) xi /= scale;
    pair.x[big] = 1.0;
  }
  pair.residual = residual(tree, lambda, pair.x);
  if (pair.residual > tol) {
    std::ostringstream os;
    os << "eigenvector_from_normal: residual " << pair.residual << " exceeds " << tol << " at lambda "
       << complex_str(lambda);
    throw NumericError(os.str());
  }
  return pair;
}

WeightedIncidenceMatrix normal_from_eigenpair(const WeightedHypergraph& g, const Eigenpair& pair, double tol) {
  const Hypergraph& h = g.graph();
  if (static_cast<int>(pair.x.size()) != h.n()) throw DomainError("normal_from_eigenpair: vector length mismatch");
  guard_poles(g, pair.lambda);
  for (int v = 0; v < h.n(); ++v) {
    if (pair.x[static_cast<std::size_t>(v)] == Complex(0.0, 0.0)) {
      throw DomainError("normal_from_eigenpair: coordinate " + std::to_string(v) + " is zero");
    }
  }
  double res = residual(g, pair.lambda, pair.x);
  if (res > tol) throw DomainError("normal_from_eigenpair: not an eigenpair (residual " + std::to_string(res) + ")");
  WeightedIncidenceMatrix b;
  for (int e = 0; e < h.m(); ++e) {
    Complex xe(1.0, 0.0);
    for (int v : h.edge(e)) xe *= pair.x[static_cast<std::size_t>(v)];
    Complex num = g.edge_weight(e).to_complex() * xe;
    for (int v : h.edge(e)) {
      Complex xv = pair.x[static_cast<std::size_t>(v)];
      Complex xv_k(1.0, 0.0);
      for (int i = 0; i < h.k(); ++i) xv_k *= xv;
      Complex den = (pair.lambda - g.vertex_weight(v).to_complex()) * xv_k;
      b.set_unchecked(v, e, num / den);
    }
  }
  return b;
}

}  // namespace htspec
