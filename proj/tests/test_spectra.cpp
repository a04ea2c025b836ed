#include <gtest/gtest.h>

#include <cstdlib>

#include "htspec/matching.hpp"
#include "htspec/roots.hpp"
#include "htspec/spectra.hpp"
#include "support.hpp"

using namespace htspec;
using namespace htspec::testing;

namespace {

void expect_set(std::vector<Complex> got, std::vector<Complex> want, double tol = 1e-9) {
  std::sort(want.begin(), want.end(), root_less);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_LT(std::abs(got[i] - want[i]), tol) << i;
}

bool contains(const std::vector<Complex>& set, Complex z, double tol = 1e-8) {
  return std::any_of(set.begin(), set.end(), [&](Complex s) { return roots_close(s, z, tol); });
}

}  // namespace

TEST(Eigenvalues, SingleEdge) {
  auto r = eigenvalues(single_edge());
  auto want = kth_roots(1, 3);
  want.push_back(0);
  expect_set(r.eigenvalues(), want);
  EXPECT_EQ(r.count(CertStatus::kCertified), 3);
  for (const auto& e : r.roots) EXPECT_LE(e.residual, 1e-8);
  ASSERT_TRUE(r.spectral_radius);
  EXPECT_NEAR(*r.spectral_radius, 1.0, 1e-12);
}

TEST(Eigenvalues, LoosePath) {
  auto r = eigenvalues(loose_path());
  auto want = kth_roots(1, 3);
  for (auto z : kth_roots(2, 3)) want.push_back(z);
  want.push_back(0);
  expect_set(r.eigenvalues(), want);
  EXPECT_EQ(r.count(CertStatus::kUncertified) + r.count(CertStatus::kSingular), 0);
  // The root 0 of x^5 - 2x^2 coincides with w(v) = 0.
  EXPECT_EQ(r.count(CertStatus::kCollision), 1);
  ASSERT_EQ(r.trivial.size(), 1u);
  EXPECT_TRUE(r.trivial[0].also_subtree_root);
  for (const auto& e : r.roots) {
    if (e.status == CertStatus::kCertified) {
      ASSERT_TRUE(e.pair);
      EXPECT_LE(residual(loose_path(), e.lambda, e.pair->x), 1e-8);
    }
  }
  // Cube roots of unity come from single edges, the smallest witnesses.
  for (const auto& e : r.roots) {
    if (std::abs(std::abs(e.lambda) - 1.0) < 1e-9) {
      EXPECT_EQ(e.witness.edge_indices, std::vector<int>{0});
      EXPECT_EQ(e.witnesses.size(), 2u);
    }
  }
}

TEST(Eigenvalues, HeavyVertexIsTrivial) {
  auto r = eigenvalues(load_tree("single_edge_heavy_vertex.json"));
  ASSERT_EQ(r.trivial.size(), 2u);
  EXPECT_EQ(r.trivial[1].lambda, Complex(5.0));
  EXPECT_EQ(r.trivial[1].vertex, 0);
  EXPECT_EQ(r.trivial[1].residual, 0.0);
}

TEST(Eigenvalues, KTwoUnsupported) {
  EXPECT_THROW(eigenvalues(make_tree(2, 3, {{0, 1}, {1, 2}})), UnsupportedError);
}

TEST(Eigenvalues, ZeroWeightEdgesArePruned) {
  auto t = load_tree("zero_edge_path.json");
  auto r = eigenvalues(t);
  auto want = kth_roots(1, 3);
  for (auto z : kth_roots(8, 3)) want.push_back(z);
  want.push_back(0);
  expect_set(r.eigenvalues(), want);
  EXPECT_EQ(r.count(CertStatus::kCertified), 6);
  EXPECT_FALSE(r.spectral_radius);
}

TEST(Eigenvalues, ComplexWeightsCertify) {
  auto t = load_tree("complex_weights.json");
  auto r = eigenvalues(t);
  EXPECT_EQ(r.count(CertStatus::kUncertified), 0);
  for (const auto& e : r.roots) {
    if (e.status == CertStatus::kCertified) EXPECT_LE(residual(t, e.lambda, e.pair->x), 1e-8);
  }
}

TEST(Eigenvalues, UnweightedConsistencyWithPhi) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 8; ++i) {
    auto t = random_tree(rng, 3 + i % 2, 1 + i % 4, RandomWeights::kUnit);
    auto spec = eigenvalues(t).eigenvalues();
    std::vector<Complex> want{0.0};
    for (const auto& s : enumerate_subtrees(t)) {
      if (s.is_singleton()) continue;
      for (const auto& r : distinct_roots(phi_polynomial(extract_subtree(t, s).tree.graph()))) {
        if (std::abs(r.value) > 1e-9 && !contains(want, r.value, 1e-9)) want.push_back(r.value);
      }
    }
    std::sort(want.begin(), want.end(), root_less);
    expect_set(spec, want, 1e-8);
  }
}

TEST(Eigenvalues, MonotoneUnderSubtrees) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 6; ++i) {
    auto t = random_tree(rng, 3, 2 + i % 3, RandomWeights::kNonnegative);
    auto whole = eigenvalues(t).eigenvalues();
    auto subs = enumerate_subtrees(t);
    auto part = eigenvalues(extract_subtree(t, subs.back()).tree);
    for (const auto& r : part.roots) EXPECT_TRUE(contains(whole, r.lambda)) << r.lambda;
  }
}

TEST(Eigenvalues, DeterministicAcrossThreadCounts) {
  auto t = load_tree("path3_rational.json");
  SpectrumOptions one;
  one.threads = 1;
  SpectrumOptions many;
  many.threads = 8;
  EXPECT_EQ(report_to_json(eigenvalues(t, one)).dump(), report_to_json(eigenvalues(t, many)).dump());
}

TEST(Threads, EnvironmentCap) {
  ::setenv("HTSPEC_THREADS", "2", 1);
  EXPECT_EQ(resolve_thread_count(16), 2);
  EXPECT_EQ(resolve_thread_count(1), 1);
  ::unsetenv("HTSPEC_THREADS");
  EXPECT_EQ(resolve_thread_count(5), 5);
}

TEST(Radius, Examples) {
  EXPECT_NEAR(spectral_radius(single_edge()), 1.0, 1e-9);
  EXPECT_NEAR(spectral_radius(loose_path()), std::cbrt(2.0), 1e-9);
  WeightedHypertree signless(single_edge().graph(), corollary_weighting(single_edge().graph(), LaplacianSign::kSignless));
  EXPECT_NEAR(spectral_radius(signless), 2.0, 1e-9);
  EXPECT_THROW(spectral_radius(load_tree("complex_weights.json")), DomainError);
}

TEST(Radius, EqualsLargestModulus) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 10; ++i) {
    auto t = random_tree(rng, 3 + i % 2, 1 + i % 4, RandomWeights::kNonnegative);
    auto r = eigenvalues(t);
    double top = 0;
    for (auto z : r.eigenvalues()) top = std::max(top, std::abs(z));
    ASSERT_TRUE(r.spectral_radius);
    EXPECT_NEAR(*r.spectral_radius, top, 1e-6);
  }
}

TEST(Corollary, SingleEdge) {
  auto signless = corollary_spectrum(single_edge().graph(), LaplacianSign::kSignless);
  expect_set(signless.eigenvalues(), {1.0, 2.0, Complex(0.5, std::sqrt(3.0) / 2), Complex(0.5, -std::sqrt(3.0) / 2)});
  ASSERT_TRUE(signless.spectral_radius);
  EXPECT_NEAR(*signless.spectral_radius, 2.0, 1e-12);
  auto lap = corollary_spectrum(single_edge().graph(), LaplacianSign::kLaplacian);
  EXPECT_TRUE(contains(lap.eigenvalues(), 0.0, 1e-9));
  EXPECT_FALSE(lap.spectral_radius);
}

TEST(Corollary, StarSignlessRadiusAgreesWithPower) {
  WeightedHypertree t(star3().graph(), corollary_weighting(star3().graph(), LaplacianSign::kSignless));
  auto est = spectral_radius_estimates(t);
  EXPECT_LT(est.gap, 1e-6);
  EXPECT_NEAR(*corollary_spectrum(star3().graph(), LaplacianSign::kSignless).spectral_radius, est.by_roots, 1e-12);
}

TEST(Verify, LoosePathAllCertified) {
  auto t = loose_path();
  auto summary = verify_report(t, eigenvalues(t));
  EXPECT_TRUE(summary.all_certified());
  EXPECT_EQ(summary.certified, 6);
  EXPECT_EQ(summary.collisions, 1);
  EXPECT_EQ(summary.trivial_checked, 1);
}

TEST(Verify, BogusEigenvalueFlagged) {
  auto t = loose_path();
  auto report = eigenvalues(t);
  RootEigenvalue bogus;
  bogus.lambda = 0.5;
  bogus.witness = make_subtree(t.graph(), {0, 1});
  bogus.witnesses = {bogus.witness};
  bogus.status = CertStatus::kCertified;
  report.roots.push_back(bogus);
  auto summary = verify_report(t, report);
  EXPECT_FALSE(summary.all_certified());
  EXPECT_EQ(summary.uncertified, 1);
  EXPECT_EQ(summary.entries.back().status, CertStatus::kUncertified);
}

TEST(Certify, UsesLaterWitnessWhenFirstFails) {
  auto t = loose_path();
  // lambda = 1 is not a root on the whole path but is on each single edge.
  std::vector<Subtree> witnesses{make_subtree(t.graph(), {0, 1}), make_subtree(t.graph(), {1})};
  auto cert = certify_root(t, 1.0, witnesses);
  EXPECT_EQ(cert.status, CertStatus::kCertified);
  ASSERT_TRUE(cert.used_witness);
  EXPECT_EQ(cert.used_witness->edge_indices, std::vector<int>{1});
  EXPECT_LE(cert.residual, 1e-12);
}
