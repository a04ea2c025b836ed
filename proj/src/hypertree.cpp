#include "htspec/hypertree.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace htspec {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto ux = static_cast<std::size_t>(x);
      parent_[ux] = parent_[static_cast<std::size_t>(parent_[ux])];
      x = parent_[ux];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<std::vector<int>> edge_adjacency(const Hypergraph& g) {
  std::vector<std::set<int>> adj(static_cast<std::size_t>(g.m()));
  for (int v = 0; v < g.n(); ++v) {
    for (int e : g.incident(v)) {
      for (int f : g.incident(v)) {
        if (e != f) adj[static_cast<std::size_t>(e)].insert(f);
      }
    }
  }
  std::vector<std::vector<int>> out;
  out.reserve(adj.size());
  for (auto& s : adj) out.emplace_back(s.begin(), s.end());
  return out;
}

std::vector<int> covered_vertices(const Hypergraph& g, const std::vector<int>& edges) {
  std::set<int> vs;
  for (int e : edges) vs.insert(g.edge(e).begin(), g.edge(e).end());
  return {vs.begin(), vs.end()};
}

bool edges_connected(const Hypergraph& g, const std::vector<int>& edges) {
  if (edges.empty()) return false;
  DisjointSets ds(g.n());
  for (int e : edges) {
    const auto& ed = g.edge(e);
    for (std::size_t i = 1; i < ed.size(); ++i) ds.unite(ed[0], ed[i]);
  }
  int root = ds.find(g.edge(edges.front()).front());
  return std::all_of(edges.begin(), edges.end(),
                     [&](int e) { return ds.find(g.edge(e).front()) == root; });
}

// ESU-style enumeration of connected vertex sets in the edge-intersection
// graph; each set is generated once, anchored at its smallest member.
void extend_connected(const std::vector<std::vector<int>>& adj, std::vector<int>& sub,
                      std::vector<int> ext, int anchor, std::vector<std::vector<int>>& out) {
  out.push_back(sub);
  std::vector<char> blocked(adj.size(), 0);
  for (int s : sub) {
    blocked[static_cast<std::size_t>(s)] = 1;
    for (int t : adj[static_cast<std::size_t>(s)]) blocked[static_cast<std::size_t>(t)] = 1;
  }
  while (!ext.empty()) {
    int w = ext.back();
    ext.pop_back();
    std::vector<int> next_ext = ext;
    for (int u : adj[static_cast<std::size_t>(w)]) {
      if (u > anchor && !blocked[static_cast<std::size_t>(u)] &&
          std::find(next_ext.begin(), next_ext.end(), u) == next_ext.end()) {
        next_ext.push_back(u);
      }
    }
    sub.push_back(w);
    extend_connected(adj, sub, std::move(next_ext), anchor, out);
    sub.pop_back();
  }
}

Weighting restrict_weights(const WeightedHypergraph& g, const std::vector<int>& vmap,
                           const std::vector<int>& emap) {
  Weighting w;
  for (int v : vmap) w.vertex_weights.push_back(g.vertex_weight(v));
  for (int e : emap) w.edge_weights.push_back(g.edge_weight(e));
  return w;
}

std::vector<Edge> relabel_edges(const Hypergraph& g, const std::vector<int>& vmap,
                                const std::vector<int>& emap) {
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < vmap.size(); ++i) local[static_cast<std::size_t>(vmap[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (int e : emap) {
    Edge ed;
    for (int v : g.edge(e)) ed.push_back(local[static_cast<std::size_t>(v)]);
    edges.push_back(std::move(ed));
  }
  return edges;
}

}  // namespace

Hypergraph::Hypergraph(int k, int n, std::vector<Edge> edges) : k_(k), n_(n), edges_(std::move(edges)) {
  if (k < 2) throw StructuralError("uniformity k must be at least 2, got " + std::to_string(k));
  if (n < 0) throw StructuralError("vertex count must be non-negative");
  std::set<Edge> seen;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& ed = edges_[e];
    if (static_cast<int>(ed.size()) != k) {
      throw StructuralError("edge " + std::to_string(e) + " has " + std::to_string(ed.size()) +
                            " vertices, expected k = " + std::to_string(k));
    }
    std::sort(ed.begin(), ed.end());
    if (std::adjacent_find(ed.begin(), ed.end()) != ed.end()) {
      throw StructuralError("edge " + std::to_string(e) + " repeats a vertex");
    }
    if (ed.front() < 0 || ed.back() >= n) {
      throw StructuralError("edge " + std::to_string(e) + " has a vertex id outside 0.." + std::to_string(n - 1));
    }
    if (!seen.insert(ed).second) throw StructuralError("edge " + std::to_string(e) + " is a duplicate");
  }
  incidence_.assign(static_cast<std::size_t>(n), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (int v : edges_[e]) incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
  }
}

bool Weighting::is_nonnegative() const {
  auto real_nonneg = [](const Scalar& s) { return s.is_real() && s.real() >= 0; };
  auto real_pos = [](const Scalar& s) { return s.is_real() && s.real() > 0 && !s.is_zero(); };
  return std::all_of(vertex_weights.begin(), vertex_weights.end(), real_nonneg) &&
         std::all_of(edge_weights.begin(), edge_weights.end(), real_pos);
}

std::string TreeCertificate::describe() const {
  std::ostringstream os;
  os << "connected=" << (connected ? "true" : "false") << ", acyclic=" << (acyclic ? "true" : "false")
     << ", components=" << component_count;
  if (!acyclic) os << ", cycle closed by edge " << cycle_edge;
  return os.str();
}

NotATreeError::NotATreeError(TreeCertificate cert)
    : StructuralError("input is not a hypertree (" + cert.describe() + ")"), cert_(cert) {}

WeightedHypergraph::WeightedHypergraph(Hypergraph graph, Weighting weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
  if (static_cast<int>(weights_.vertex_weights.size()) != graph_.n()) {
    throw StructuralError("expected " + std::to_string(graph_.n()) + " vertex weights, got " +
                          std::to_string(weights_.vertex_weights.size()));
  }
  if (static_cast<int>(weights_.edge_weights.size()) != graph_.m()) {
    throw StructuralError("expected " + std::to_string(graph_.m()) + " edge weights, got " +
                          std::to_string(weights_.edge_weights.size()));
  }
}

WeightedHypertree::WeightedHypertree(Hypergraph graph, Weighting weights)
    : WeightedHypertree(WeightedHypergraph(std::move(graph), std::move(weights))) {}

WeightedHypertree::WeightedHypertree(WeightedHypergraph g)
    : WeightedHypergraph(std::move(g)), cert_(validate(this->graph())) {
  if (!cert_.is_tree()) throw NotATreeError(cert_);
}

bool subtree_smaller(const Subtree& a, const Subtree& b) {
  if (a.edge_indices.size() != b.edge_indices.size()) return a.edge_indices.size() < b.edge_indices.size();
  if (a.edge_indices != b.edge_indices) return a.edge_indices < b.edge_indices;
  return a.vertex_set < b.vertex_set;
}

TreeCertificate validate(const Hypergraph& graph) {
  TreeCertificate cert;
  // Bipartite incidence graph: vertices 0..n-1, edges n..n+m-1. A closed walk
  // without repeats in the hypergraph is exactly a cycle there.
  DisjointSets incidence(graph.n() + graph.m());
  cert.acyclic = true;
  for (int e = 0; e < graph.m(); ++e) {
    for (int v : graph.edge(e)) {
      if (!incidence.unite(v, graph.n() + e) && cert.acyclic) {
        cert.acyclic = false;
        cert.cycle_edge = e;
      }
    }
  }
  std::set<int> roots;
  for (int v = 0; v < graph.n(); ++v) roots.insert(incidence.find(v));
  cert.component_count = static_cast<int>(roots.size());
  cert.connected = cert.component_count == 1;
  return cert;
}

std::vector<int> degrees(const Hypergraph& graph) {
  std::vector<int> d(static_cast<std::size_t>(graph.n()));
  for (int v = 0; v < graph.n(); ++v) d[static_cast<std::size_t>(v)] = graph.degree(v);
  return d;
}

std::vector<int> pendant_edges(const Hypergraph& graph) {
  std::vector<int> out;
  for (int e = 0; e < graph.m(); ++e) {
    int ones = 0;
    for (int v : graph.edge(e)) ones += graph.degree(v) == 1 ? 1 : 0;
    if (ones == graph.k() - 1) out.push_back(e);
  }
  return out;
}

Subtree make_subtree(const Hypergraph& graph, std::vector<int> edge_indices) {
  std::sort(edge_indices.begin(), edge_indices.end());
  if (edge_indices.empty()) throw DomainError("subtree needs at least one edge (use a singleton)");
  if (std::adjacent_find(edge_indices.begin(), edge_indices.end()) != edge_indices.end()) {
    throw DomainError("subtree lists an edge twice");
  }
  if (edge_indices.front() < 0 || edge_indices.back() >= graph.m()) {
    throw DomainError("subtree edge index out of range");
  }
  if (!edges_connected(graph, edge_indices)) throw DomainError("edge set is not connected");
  Subtree s;
  s.vertex_set = covered_vertices(graph, edge_indices);
  s.edge_indices = std::move(edge_indices);
  return s;
}

Subtree singleton_subtree(const Hypergraph& graph, int vertex) {
  if (vertex < 0 || vertex >= graph.n()) throw DomainError("vertex id out of range");
  return Subtree{{}, {vertex}};
}

std::vector<Subtree> enumerate_subtrees(const Hypergraph& graph) {
  std::vector<Subtree> out;
  for (int v = 0; v < graph.n(); ++v) out.push_back(Subtree{{}, {v}});
  auto adj = edge_adjacency(graph);
  std::vector<std::vector<int>> sets;
  for (int a = 0; a < graph.m(); ++a) {
    std::vector<int> sub{a};
    std::vector<int> ext;
    for (int u : adj[static_cast<std::size_t>(a)]) {
      if (u > a) ext.push_back(u);
    }
    extend_connected(adj, sub, std::move(ext), a, sets);
  }
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  for (auto& s : sets) {
    Subtree t;
    t.vertex_set = covered_vertices(graph, s);
    t.edge_indices = std::move(s);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Subtree> enumerate_subtrees(const WeightedHypertree& tree) { return enumerate_subtrees(tree.graph()); }

bool is_induced(const Hypergraph& graph, const Subtree& sub) {
  std::vector<char> inside(static_cast<std::size_t>(graph.n()), 0);
  for (int v : sub.vertex_set) inside[static_cast<std::size_t>(v)] = 1;
  for (int e = 0; e < graph.m(); ++e) {
    bool contained = std::all_of(graph.edge(e).begin(), graph.edge(e).end(),
                                 [&](int v) { return inside[static_cast<std::size_t>(v)] != 0; });
    if (contained && !std::binary_search(sub.edge_indices.begin(), sub.edge_indices.end(), e)) return false;
  }
  return true;
}

std::vector<int> peel_sequence(const WeightedHypertree& tree, const Subtree& target) {
  const Hypergraph& g = tree.graph();
  std::vector<int> keep = target.edge_indices;
  int final_edge = -1;
  if (target.is_singleton()) {
    if (target.vertex_set.size() != 1) throw DomainError("singleton subtree must name one vertex");
    int v = target.vertex_set.front();
    if (v < 0 || v >= g.n()) throw DomainError("vertex id out of range");
    if (g.m() == 0) return {};
    final_edge = g.incident(v).front();
    keep = {final_edge};
  } else {
    Subtree checked = make_subtree(g, target.edge_indices);
    if (checked.vertex_set != target.vertex_set) throw DomainError("subtree vertex set does not match its edges");
  }

  std::vector<char> alive(static_cast<std::size_t>(g.m()), 1);
  std::vector<char> in_target(static_cast<std::size_t>(g.m()), 0);
  for (int e : keep) in_target[static_cast<std::size_t>(e)] = 1;
  std::vector<int> deg = degrees(g);
  std::vector<int> seq;
  int remaining = g.m() - static_cast<int>(keep.size());
  while (remaining > 0) {
    int chosen = -1;
    for (int e = 0; e < g.m() && chosen < 0; ++e) {
      if (!alive[static_cast<std::size_t>(e)] || in_target[static_cast<std::size_t>(e)]) continue;
      int ones = 0;
      for (int v : g.edge(e)) ones += deg[static_cast<std::size_t>(v)] == 1 ? 1 : 0;
      if (ones == g.k() - 1) chosen = e;
    }
    if (chosen < 0) throw DomainError("no pendant edge available; target is not a subtree");
    alive[static_cast<std::size_t>(chosen)] = 0;
    for (int v : g.edge(chosen)) --deg[static_cast<std::size_t>(v)];
    seq.push_back(chosen);
    --remaining;
  }
  if (final_edge >= 0) seq.push_back(final_edge);
  return seq;
}

Subtree replay_peel(const Hypergraph& graph, std::span<const int> sequence) {
  std::vector<char> alive(static_cast<std::size_t>(graph.m()), 1);
  std::vector<int> deg = degrees(graph);
  int live = graph.m();
  for (int e : sequence) {
    if (e < 0 || e >= graph.m() || !alive[static_cast<std::size_t>(e)]) {
      throw DomainError("replay_peel: edge " + std::to_string(e) + " is not present");
    }
    int ones = 0;
    for (int v : graph.edge(e)) ones += deg[static_cast<std::size_t>(v)] == 1 ? 1 : 0;
    bool lone = live == 1;
    if (ones != graph.k() - 1 && !lone) {
      throw DomainError("replay_peel: edge " + std::to_string(e) + " is not pendant");
    }
    alive[static_cast<std::size_t>(e)] = 0;
    for (int v : graph.edge(e)) --deg[static_cast<std::size_t>(v)];
    --live;
  }
  Subtree out;
  for (int e = 0; e < graph.m(); ++e) {
    if (alive[static_cast<std::size_t>(e)]) out.edge_indices.push_back(e);
  }
  out.vertex_set = covered_vertices(graph, out.edge_indices);
  return out;
}

SubHypergraph remove_edge(const WeightedHypergraph& g, int edge) {
  const Hypergraph& h = g.graph();
  if (edge < 0 || edge >= h.m()) throw DomainError("remove_edge: edge index out of range");
  std::vector<int> vmap;
  for (int v = 0; v < h.n(); ++v) {
    bool isolated_after = h.degree(v) == 1 && h.incident(v).front() == edge;
    if (!isolated_after) vmap.push_back(v);
  }
  std::vector<int> emap;
  for (int e = 0; e < h.m(); ++e) {
    if (e != edge) emap.push_back(e);
  }
  Hypergraph sub(h.k(), static_cast<int>(vmap.size()), relabel_edges(h, vmap, emap));
  return {WeightedHypergraph(std::move(sub), restrict_weights(g, vmap, emap)), std::move(vmap), std::move(emap)};
}

Component extract_subtree(const WeightedHypertree& tree, const Subtree& sub) {
  const Hypergraph& h = tree.graph();
  std::vector<int> vmap = sub.vertex_set;
  std::vector<int> emap = sub.edge_indices;
  Hypergraph g(h.k(), static_cast<int>(vmap.size()), relabel_edges(h, vmap, emap));
  return {WeightedHypertree(std::move(g), restrict_weights(tree, vmap, emap)), std::move(vmap), std::move(emap)};
}

std::vector<Component> prune_zero_edges(const WeightedHypertree& tree) {
  const Hypergraph& h = tree.graph();
  DisjointSets ds(h.n());
  for (int e = 0; e < h.m(); ++e) {
    if (tree.edge_weight(e).is_zero()) continue;
    const auto& ed = h.edge(e);
    for (std::size_t i = 1; i < ed.size(); ++i) ds.unite(ed[0], ed[i]);
  }
  // Representatives are the smallest vertex of each class.
  std::vector<Component> out;
  for (int r = 0; r < h.n(); ++r) {
    if (ds.find(r) != r) continue;
    std::vector<int> vmap;
    for (int v = 0; v < h.n(); ++v) {
      if (ds.find(v) == r) vmap.push_back(v);
    }
    std::vector<int> emap;
    for (int e = 0; e < h.m(); ++e) {
      if (!tree.edge_weight(e).is_zero() && ds.find(h.edge(e).front()) == r) emap.push_back(e);
    }
    Hypergraph g(h.k(), static_cast<int>(vmap.size()), relabel_edges(h, vmap, emap));
    out.push_back({WeightedHypertree(std::move(g), restrict_weights(tree, vmap, emap)), vmap, emap});
  }
  return out;
}

Weighting corollary_weighting(const Hypergraph& graph, LaplacianSign sign) {
  Weighting w;
  for (int v = 0; v < graph.n(); ++v) w.vertex_weights.emplace_back(graph.degree(v));
  w.edge_weights.assign(static_cast<std::size_t>(graph.m()), Scalar(sign == LaplacianSign::kLaplacian ? -1 : 1));
  return w;
}

Weighting unit_weighting(const Hypergraph& graph) {
  Weighting w;
  w.vertex_weights.assign(static_cast<std::size_t>(graph.n()), Scalar(0));
  w.edge_weights.assign(static_cast<std::size_t>(graph.m()), Scalar(1));
  return w;
}

WeightedHypertree relabel_vertices(const WeightedHypertree& tree, std::span<const int> perm) {
  const Hypergraph& h = tree.graph();
  if (static_cast<int>(perm.size()) != h.n()) throw DomainError("permutation length mismatch");
  std::vector<Edge> edges;
  for (const auto& ed : h.edges()) {
    Edge out;
    for (int v : ed) out.push_back(perm[static_cast<std::size_t>(v)]);
    edges.push_back(std::move(out));
  }
  Weighting w;
  w.vertex_weights.resize(static_cast<std::size_t>(h.n()));
  for (int v = 0; v < h.n(); ++v) {
    w.vertex_weights[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = tree.vertex_weight(v);
  }
  w.edge_weights = tree.weights().edge_weights;
  return WeightedHypertree(Hypergraph(h.k(), h.n(), std::move(edges)), std::move(w));
}

}  // namespace htspec
