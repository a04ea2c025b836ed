#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"

using namespace htspec;
using namespace htspec::testing;

TEST(Hypergraph, RejectsMalformedEdges) {
  EXPECT_THROW(Hypergraph(3, 3, {{0, 1}}), StructuralError);
  EXPECT_THROW(Hypergraph(3, 3, {{0, 1, 1}}), StructuralError);
  EXPECT_THROW(Hypergraph(3, 3, {{0, 1, 3}}), StructuralError);
  EXPECT_THROW(Hypergraph(3, 5, {{0, 1, 2}, {2, 1, 0}}), StructuralError);
}

TEST(Hypergraph, SortsVerticesKeepsEdgeOrder) {
  Hypergraph g(3, 5, {{4, 3, 2}, {2, 0, 1}});
  EXPECT_EQ(g.edge(0), (Edge{2, 3, 4}));
  EXPECT_EQ(g.edge(1), (Edge{0, 1, 2}));
  EXPECT_EQ(g.incident(2), (std::vector<int>{0, 1}));
  EXPECT_EQ(g.degree(2), 2);
}

TEST(Validate, SingleEdgeAndLoosePath) {
  auto c1 = validate(Hypergraph(3, 3, {{0, 1, 2}}));
  EXPECT_TRUE(c1.is_tree());
  auto c2 = validate(Hypergraph(3, 5, {{0, 1, 2}, {2, 3, 4}}));
  EXPECT_TRUE(c2.connected);
  EXPECT_TRUE(c2.acyclic);
  EXPECT_EQ(c2.component_count, 1);
}

TEST(Validate, CycleAndDisconnection) {
  auto tri = validate(Hypergraph(3, 6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}));
  EXPECT_TRUE(tri.connected);
  EXPECT_FALSE(tri.acyclic);
  EXPECT_EQ(tri.cycle_edge, 2);
  // Two edges sharing two vertices form a cycle of length 2.
  EXPECT_FALSE(validate(Hypergraph(3, 4, {{0, 1, 2}, {1, 2, 3}})).acyclic);
  auto forest = validate(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}}));
  EXPECT_FALSE(forest.connected);
  EXPECT_TRUE(forest.acyclic);
  EXPECT_EQ(forest.component_count, 2);
  EXPECT_THROW(WeightedHypertree(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}}), Weighting{}), StructuralError);
}

TEST(Validate, RandomTreesSatisfyVertexCount) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    auto t = random_tree(rng, 3 + i % 3, 1 + i % 7, RandomWeights::kUnit);
    EXPECT_EQ(t.n(), t.m() * (t.k() - 1) + 1);
    EXPECT_TRUE(t.certificate().is_tree());
  }
}

TEST(Weighting, NonnegativePredicate) {
  Hypergraph g(3, 3, {{0, 1, 2}});
  EXPECT_TRUE((Weighting{{0, 1, 2}, {1}}.is_nonnegative()));
  EXPECT_FALSE((Weighting{{0, -1, 2}, {1}}.is_nonnegative()));
  EXPECT_FALSE((Weighting{{0, 0, 0}, {0}}.is_nonnegative()));
  EXPECT_FALSE((Weighting{{Scalar(Complex(0, 1)), 0, 0}, {1}}.is_nonnegative()));
}

TEST(Pendant, Definitions) {
  EXPECT_TRUE(pendant_edges(Hypergraph(3, 3, {{0, 1, 2}})).empty());
  EXPECT_EQ(pendant_edges(loose_path().graph()), (std::vector<int>{0, 1}));
  Hypergraph path3(3, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  EXPECT_EQ(pendant_edges(path3), (std::vector<int>{0, 2}));
}

TEST(Subtrees, Counts) {
  EXPECT_EQ(enumerate_subtrees(single_edge()).size(), 4u);
  EXPECT_EQ(enumerate_subtrees(loose_path()).size(), 8u);
  EXPECT_EQ(enumerate_subtrees(star3()).size(), 14u);
}

TEST(Subtrees, OrderSingletonsFirstThenLexicographic) {
  auto subs = enumerate_subtrees(loose_path());
  for (int v = 0; v < 5; ++v) {
    EXPECT_TRUE(subs[static_cast<std::size_t>(v)].is_singleton());
    EXPECT_EQ(subs[static_cast<std::size_t>(v)].vertex_set, std::vector<int>{v});
  }
  EXPECT_EQ(subs[5].edge_indices, std::vector<int>{0});
  EXPECT_EQ(subs[6].edge_indices, (std::vector<int>{0, 1}));
  EXPECT_EQ(subs[7].edge_indices, std::vector<int>{1});
}

TEST(Subtrees, MatchBruteForceOnRandomTrees) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    auto t = random_tree(rng, 3 + i % 2, 1 + i % 9, RandomWeights::kUnit);
    auto subs = enumerate_subtrees(t);
    int edge_subtrees = 0;
    for (const auto& s : subs) {
      if (!s.is_singleton()) {
        ++edge_subtrees;
        EXPECT_TRUE(validate(extract_subtree(t, s).tree.graph()).is_tree());
        EXPECT_TRUE(is_induced(t.graph(), s));
      }
    }
    EXPECT_EQ(edge_subtrees, brute_force_edge_subtrees(t.graph()));
    EXPECT_EQ(static_cast<int>(subs.size()) - edge_subtrees, t.n());
    for (std::size_t a = 1; a < subs.size(); ++a) EXPECT_FALSE(subs[a] == subs[a - 1]);
  }
}

TEST(Subtrees, MakeSubtreeRejectsDisconnected) {
  Hypergraph path3(3, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  EXPECT_THROW(make_subtree(path3, {0, 2}), DomainError);
  EXPECT_THROW(make_subtree(path3, {0, 0}), DomainError);
  EXPECT_THROW(make_subtree(path3, {5}), DomainError);
  EXPECT_EQ(make_subtree(path3, {1, 0}).vertex_set, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(Subtrees, SmallerOrdering) {
  Hypergraph g = star3().graph();
  EXPECT_TRUE(subtree_smaller(make_subtree(g, {2}), make_subtree(g, {0, 1})));
  EXPECT_TRUE(subtree_smaller(make_subtree(g, {0, 1}), make_subtree(g, {0, 2})));
  EXPECT_FALSE(subtree_smaller(make_subtree(g, {0, 2}), make_subtree(g, {0, 2})));
}

TEST(Peel, LoosePathToOneEdge) {
  auto t = loose_path();
  auto target = make_subtree(t.graph(), {0});
  auto seq = peel_sequence(t, target);
  EXPECT_EQ(seq, std::vector<int>{1});
  EXPECT_EQ(replay_peel(t.graph(), seq), target);
}

TEST(Peel, SingletonTargetEndsByDeletingLastEdge) {
  auto t = loose_path();
  auto target = singleton_subtree(t.graph(), 4);
  auto seq = peel_sequence(t, target);
  EXPECT_EQ(seq, (std::vector<int>{0, 1}));
  // Nothing is left once the lone edge goes; that edge holds the vertex.
  EXPECT_TRUE(replay_peel(t.graph(), seq).edge_indices.empty());
  const auto& last = t.graph().edge(seq.back());
  EXPECT_NE(std::find(last.begin(), last.end(), 4), last.end());
}

TEST(Peel, RoundTripOnRandomTrees) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    auto t = random_tree(rng, 3 + i % 3, 1 + i % 6, RandomWeights::kUnit);
    for (const auto& s : enumerate_subtrees(t)) {
      auto seq = peel_sequence(t, s);
      EXPECT_EQ(static_cast<int>(seq.size()), t.m() - static_cast<int>(s.edge_indices.size()));
      if (s.is_singleton()) {
        EXPECT_TRUE(replay_peel(t.graph(), seq).edge_indices.empty());
        const auto& last = t.graph().edge(seq.back());
        EXPECT_NE(std::find(last.begin(), last.end(), s.vertex_set.front()), last.end());
      } else {
        EXPECT_EQ(replay_peel(t.graph(), seq), s);
      }
    }
  }
}

TEST(Peel, ReplayRejectsNonPendantDeletion) {
  Hypergraph path3(3, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  std::vector<int> seq{1};
  EXPECT_THROW(replay_peel(path3, seq), DomainError);
}

TEST(RemoveEdge, DropsIsolatedVertices) {
  auto rest = remove_edge(loose_path(), 1);
  EXPECT_EQ(rest.vertex_map, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(rest.edge_map, std::vector<int>{0});
  EXPECT_EQ(rest.graph.n(), 3);
}

TEST(Extract, KeepsWeightsAndRelabels) {
  auto t = make_tree(3, 5, {{0, 1, 2}, {2, 3, 4}}, {0, 0, 7, 1, 2}, {1, 3});
  auto c = extract_subtree(t, make_subtree(t.graph(), {1}));
  EXPECT_EQ(c.vertex_map, (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(c.tree.vertex_weight(0), Scalar(7));
  EXPECT_EQ(c.tree.edge_weight(0), Scalar(3));
}

TEST(Prune, ZeroEdgesSplitComponents) {
  auto t = load_tree("zero_edge_path.json");
  auto comps = prune_zero_edges(t);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].vertex_map, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(comps[1].vertex_map, std::vector<int>{3});
  EXPECT_EQ(comps[2].vertex_map, (std::vector<int>{4, 5, 6}));
  EXPECT_EQ(comps[2].edge_map, std::vector<int>{2});
}

TEST(CorollaryWeighting, Degrees) {
  Weighting w = corollary_weighting(star3().graph(), LaplacianSign::kLaplacian);
  EXPECT_EQ(w.vertex_weights[0], Scalar(3));
  EXPECT_EQ(w.vertex_weights[1], Scalar(1));
  EXPECT_EQ(w.edge_weights[0], Scalar(-1));
  EXPECT_EQ(corollary_weighting(star3().graph(), LaplacianSign::kSignless).edge_weights[2], Scalar(1));
}

TEST(Relabel, PermutesVertices) {
  auto t = make_tree(3, 5, {{0, 1, 2}, {2, 3, 4}}, {1, 2, 3, 4, 5}, {1, 1});
  std::vector<int> perm{4, 3, 2, 1, 0};
  auto r = relabel_vertices(t, perm);
  EXPECT_EQ(r.graph().edge(0), (Edge{2, 3, 4}));
  EXPECT_EQ(r.vertex_weight(4), Scalar(1));
}
