#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "htspec/matching.hpp"
#include "support.hpp"

using namespace htspec;
using namespace htspec::testing;

namespace {

Polynomial P(std::vector<Scalar> c) { return Polynomial(std::move(c)); }

}  // namespace

TEST(Matchings, Enumeration) {
  EXPECT_EQ(enumerate_matchings(single_edge().graph()).size(), 2u);
  auto path = enumerate_matchings(loose_path().graph());
  ASSERT_EQ(path.size(), 3u);
  EXPECT_TRUE(path[0].edge_indices.empty());
  EXPECT_EQ(enumerate_matchings(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})).size(), 4u);
}

TEST(Matchings, CountsAgreeWithEnumeration) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    auto t = random_tree(rng, 3, 1 + i % 8, RandomWeights::kUnit);
    auto counts = matching_counts(t.graph());
    std::vector<BigInt> want(counts.size());
    for (const auto& m : enumerate_matchings(t.graph())) want[m.edge_indices.size()] += 1;
    EXPECT_EQ(counts, want);
  }
}

TEST(MatchingPolynomial, HandExamples) {
  EXPECT_EQ(matching_polynomial(single_edge()), P({-1, 0, 0, 1}));
  EXPECT_EQ(matching_polynomial(loose_path()), P({0, 0, -2, 0, 0, 1}));
  auto ones = make_tree(3, 3, {{0, 1, 2}}, {1, 1, 1}, {1});
  EXPECT_EQ(matching_polynomial(ones), P({-2, 3, -3, 1}));
  for (const auto& t : {single_edge(), loose_path(), ones}) {
    EXPECT_EQ(matching_polynomial_dp(t), matching_polynomial(t));
  }
}

TEST(MatchingPolynomial, DpEqualsDefinitionOnRandomWeightedTrees) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 60; ++i) {
    auto t = random_tree(rng, 3 + i % 3, 1 + i % 6, i % 2 ? RandomWeights::kSigned : RandomWeights::kNonnegative);
    Polynomial a = matching_polynomial_dp(t);
    EXPECT_EQ(a.backend(), Backend::kRational);
    EXPECT_EQ(a, matching_polynomial(t));
    EXPECT_TRUE(a.is_monic());
    EXPECT_EQ(a.degree(), t.n());
  }
}

TEST(MatchingPolynomial, ForestIsProductOfComponents) {
  WeightedHypergraph forest(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}}), Weighting{{0, 0, 0, 1, 0, 0}, {1, 2}});
  Polynomial a = matching_polynomial(WeightedHypergraph(Hypergraph(3, 3, {{0, 1, 2}}), Weighting{{0, 0, 0}, {1}}));
  Polynomial b = matching_polynomial(WeightedHypergraph(Hypergraph(3, 3, {{0, 1, 2}}), Weighting{{1, 0, 0}, {2}}));
  EXPECT_EQ(matching_polynomial(forest), a * b);
  EXPECT_EQ(matching_polynomial_dp(forest), a * b);
}

TEST(MatchingPolynomial, DpRejectsCycles) {
  WeightedHypergraph tri(Hypergraph(3, 6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}), Weighting{std::vector<Scalar>(6, 0),
                                                                                         std::vector<Scalar>(3, 1)});
  EXPECT_THROW(matching_polynomial_dp(tri), StructuralError);
  // Enumeration still works: the empty matching and three single edges.
  EXPECT_EQ(matching_polynomial(tri), P({-3, 0, 0, 1}).shifted(3));
}

TEST(MatchingPolynomial, ComplexWeightsUseComplexBackend) {
  auto t = load_tree("complex_weights.json");
  Polynomial a = matching_polynomial_dp(t);
  Polynomial b = matching_polynomial(t);
  EXPECT_EQ(a.backend(), Backend::kComplex);
  for (int i = 0; i <= a.degree(); ++i) {
    EXPECT_NEAR(std::abs(a.coeff(i).to_complex() - b.coeff(i).to_complex()), 0.0, 1e-12);
  }
}

TEST(MatchingPolynomial, HomogeneousInWeights) {
  // Scaling w by c maps mu(x) to c^n mu(x / c).
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10; ++i) {
    auto t = random_tree(rng, 3, 1 + i % 5, RandomWeights::kSigned);
    Scalar c = Scalar::rational(3, 2);
    Weighting w = t.weights();
    for (auto& x : w.vertex_weights) x *= c;
    for (auto& x : w.edge_weights) x *= c;
    Polynomial scaled = matching_polynomial_dp(WeightedHypertree(t.graph(), w));
    Polynomial base = matching_polynomial_dp(t);
    for (int j = 0; j <= t.n(); ++j) {
      EXPECT_EQ(scaled.coeff(j), base.coeff(j) * c.pow(static_cast<unsigned>(t.n() - j)));
    }
  }
}

TEST(MatchingPolynomial, RelabelingInvariant) {
  std::mt19937_64 rng(9);
  auto t = random_tree(rng, 4, 4, RandomWeights::kSigned);
  std::vector<int> perm(static_cast<std::size_t>(t.n()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  EXPECT_EQ(matching_polynomial_dp(relabel_vertices(t, perm)), matching_polynomial_dp(t));
}

TEST(Phi, HandExamples) {
  EXPECT_EQ(phi_polynomial(single_edge().graph()), P({-1, 0, 0, 1}));
  EXPECT_EQ(phi_polynomial(loose_path().graph()), P({-2, 0, 0, 1}));
}

TEST(Phi, UnweightedIdentity) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 30; ++i) {
    auto t = random_tree(rng, 3 + i % 3, 1 + i % 8, RandomWeights::kUnit);
    int nu = static_cast<int>(matching_counts(t.graph()).size()) - 1;
    EXPECT_EQ(matching_polynomial_dp(t), phi_polynomial(t.graph()).shifted(t.n() - t.k() * nu));
  }
}

TEST(MuTilde, HandExamples) {
  EXPECT_NEAR(std::abs(eval_mu_tilde(single_edge(), Complex(1.0))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(eval_mu_tilde(single_edge(), Complex(2.0)) - (1.0 - 1.0 / 8)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(eval_mu_tilde(loose_path(), Complex(std::cbrt(2.0)))), 0.0, 1e-14);
  auto heavy = make_tree(3, 3, {{0, 1, 2}}, {5, 0, 0}, {1});
  EXPECT_THROW(eval_mu_tilde(heavy, Complex(5.0)), PoleError);
}

TEST(MuTilde, EdgeVaryingMatchesConstant) {
  auto t = loose_path();
  std::vector<Complex> ls{Complex(1.5, 0.2), Complex(1.5, 0.2)};
  EXPECT_NEAR(std::abs(eval_mu_tilde(t, ls) - eval_mu_tilde(t, Complex(1.5, 0.2))), 0.0, 1e-15);
  std::vector<Complex> mixed{2.0, 1.0};
  // 1 - 1/8 - 1/1
  EXPECT_NEAR(std::abs(eval_mu_tilde(t, mixed) - (1.0 - 0.125 - 1.0)), 0.0, 1e-15);
}

TEST(MuTilde, ScaledByVertexFactorsGivesMu) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 20; ++i) {
    auto t = random_tree(rng, 3 + i % 2, 1 + i % 5, RandomWeights::kSigned);
    Polynomial mu = matching_polynomial_dp(t);
    for (int j = 0; j < 10; ++j) {
      Complex l{u(rng), u(rng)};
      Complex scale = 1.0;
      for (int v = 0; v < t.n(); ++v) scale *= l - t.vertex_weight(v).to_complex();
      Complex want = mu.evaluate(l);
      EXPECT_LE(std::abs(scale * eval_mu_tilde(t, l) - want), 1e-10 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST(CorollaryPolynomial, SingleEdge) {
  auto sub = make_subtree(single_edge().graph(), {0});
  EXPECT_EQ(corollary_polynomial(single_edge().graph(), sub, LaplacianSign::kSignless), P({-2, 3, -3, 1}));
  EXPECT_EQ(corollary_polynomial(single_edge().graph(), sub, LaplacianSign::kLaplacian), P({0, 3, -3, 1}));
}

TEST(CorollaryPolynomial, AgreesWithWeightedRoute) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 15; ++i) {
    auto t = random_tree(rng, 3 + i % 3, 1 + i % 5, RandomWeights::kUnit);
    for (auto sign : {LaplacianSign::kLaplacian, LaplacianSign::kSignless}) {
      WeightedHypertree w(t.graph(), corollary_weighting(t.graph(), sign));
      for (const auto& s : enumerate_subtrees(t)) {
        if (s.is_singleton()) continue;
        EXPECT_EQ(corollary_polynomial(t.graph(), s, sign), matching_polynomial_dp(extract_subtree(w, s).tree));
      }
    }
  }
}
