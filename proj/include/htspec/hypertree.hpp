#pragma once

#include <span>
#include <string>
#include <vector>

#include "htspec/errors.hpp"
#include "htspec/scalar.hpp"

namespace htspec {

/// Sorted vertex ids of one hyperedge.
using Edge = std::vector<int>;

/// k-uniform hypergraph on vertices 0..n-1.
///
/// Construction enforces: every edge has exactly k distinct vertices, all in
/// range, and no edge appears twice. Vertex ids inside each edge are sorted;
/// edge order is preserved.
class Hypergraph {
 public:
  Hypergraph(int k, int n, std::vector<Edge> edges);

  int k() const { return k_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  /// Indices of the edges containing v, ascending.
  const std::vector<int>& incident(int v) const { return incidence_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

 private:
  int k_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

struct Weighting {
  std::vector<Scalar> vertex_weights;
  std::vector<Scalar> edge_weights;

  /// w(v) real and >= 0 for all v, w(e) real and > 0 for all e.
  bool is_nonnegative() const;
};

enum class LaplacianSign { kLaplacian, kSignless };

struct TreeCertificate {
  bool connected = false;
  bool acyclic = false;
  int component_count = 0;
  /// When acyclic is false: an edge that closes a cycle.
  int cycle_edge = -1;

  bool is_tree() const { return connected && acyclic; }
  std::string describe() const;
};

/// Thrown when a hypertree is required but the input is not connected or
/// has a cycle; carries the certificate for diagnostics.
class NotATreeError : public StructuralError {
 public:
  explicit NotATreeError(TreeCertificate cert);
  const TreeCertificate& certificate() const { return cert_; }

 private:
  TreeCertificate cert_;
};

/// Hypergraph plus weighting, no structural requirement beyond matching
/// lengths. Forests and cyclic k-graphs are representable.
class WeightedHypergraph {
 public:
  WeightedHypergraph(Hypergraph graph, Weighting weights);

  const Hypergraph& graph() const { return graph_; }
  const Weighting& weights() const { return weights_; }
  int k() const { return graph_.k(); }
  int n() const { return graph_.n(); }
  int m() const { return graph_.m(); }
  const Scalar& vertex_weight(int v) const { return weights_.vertex_weights[static_cast<std::size_t>(v)]; }
  const Scalar& edge_weight(int e) const { return weights_.edge_weights[static_cast<std::size_t>(e)]; }

 private:
  Hypergraph graph_;
  Weighting weights_;
};

/// A WeightedHypergraph known to be connected and acyclic.
class WeightedHypertree : public WeightedHypergraph {
 public:
  /// Throws NotATreeError if the graph is not a hypertree.
  WeightedHypertree(Hypergraph graph, Weighting weights);
  explicit WeightedHypertree(WeightedHypergraph g);

  const TreeCertificate& certificate() const { return cert_; }

 private:
  TreeCertificate cert_;
};

/// Connected edge subset of a tree, or a single vertex.
struct Subtree {
  std::vector<int> edge_indices;  // ascending
  std::vector<int> vertex_set;    // ascending

  bool is_singleton() const { return edge_indices.empty(); }
  friend bool operator==(const Subtree&, const Subtree&) = default;
};

/// "Fewest edges first, then lexicographic" - the witness preference order.
bool subtree_smaller(const Subtree& a, const Subtree& b);

/// A tree carved out of a larger one, relabeled to local ids 0..n'-1.
/// vertex_map[local] / edge_map[local] give the ids in the parent.
struct Component {
  WeightedHypertree tree;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

/// Same, for results that need not be trees.
struct SubHypergraph {
  WeightedHypergraph graph;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

TreeCertificate validate(const Hypergraph& graph);

std::vector<int> degrees(const Hypergraph& graph);

/// Edges with exactly k-1 vertices of degree one. A lone edge (k such
/// vertices) is not pendant.
std::vector<int> pendant_edges(const Hypergraph& graph);

/// Builds the Subtree spanned by the given edges. Throws DomainError when the
/// indices are out of range, repeated, or do not form a connected subset.
Subtree make_subtree(const Hypergraph& graph, std::vector<int> edge_indices);
Subtree singleton_subtree(const Hypergraph& graph, int vertex);

/// Every subtree: singleton vertices first (ascending id), then all connected
/// edge subsets in lexicographic order of their sorted index lists.
std::vector<Subtree> enumerate_subtrees(const Hypergraph& graph);
std::vector<Subtree> enumerate_subtrees(const WeightedHypertree& tree);

/// True when the edge set contains every tree edge lying inside its vertex
/// set, i.e. the subtree is an induced sub-hypergraph.
bool is_induced(const Hypergraph& graph, const Subtree& sub);

/// Pendant-edge deletions leading from the whole tree down to target. The
/// earliest-indexed eligible pendant edge is always taken first. For a
/// singleton target the final step deletes the lone edge containing it.
std::vector<int> peel_sequence(const WeightedHypertree& tree, const Subtree& target);

/// Replays deletions (each edge must be pendant in the current graph, or the
/// last remaining edge) and returns what is left: remaining edges and the
/// vertices still covered by them.
Subtree replay_peel(const Hypergraph& graph, std::span<const int> sequence);

/// H \ e: drop edge e and the vertices it leaves isolated.
SubHypergraph remove_edge(const WeightedHypergraph& g, int edge);

/// Induced weighted tree on a subtree, relabeled.
Component extract_subtree(const WeightedHypertree& tree, const Subtree& sub);

/// Deletes every edge of weight exactly 0 and returns the resulting
/// components (isolated vertices become singleton trees), ordered by their
/// smallest original vertex id.
std::vector<Component> prune_zero_edges(const WeightedHypertree& tree);

/// w(v) = degree, w(e) = -1 (Laplacian) or +1 (signless Laplacian).
Weighting corollary_weighting(const Hypergraph& graph, LaplacianSign sign);

/// w(v) = 0, w(e) = 1.
Weighting unit_weighting(const Hypergraph& graph);

/// Renames vertex v to perm[v]; edge order is kept.
WeightedHypertree relabel_vertices(const WeightedHypertree& tree, std::span<const int> perm);

}  // namespace htspec
