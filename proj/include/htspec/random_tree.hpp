#pragma once

#include <cstdint>
#include <random>

#include "htspec/hypertree.hpp"

namespace htspec {

enum class RandomWeights {
  kUnit,         // w(v) = 0, w(e) = 1
  kNonnegative,  // w(v) in {0, 1/3, ..., 3}, w(e) positive rationals
  kSigned,       // both signs, w(e) never 0
};

struct RandomTreeOptions {
  int k = 3;
  int m = 3;
  RandomWeights weights = RandomWeights::kNonnegative;
  /// Shuffle vertex ids after growing the tree.
  bool relabel = true;
};

/// Grows a k-tree edge by edge: each new edge shares one existing vertex and
/// brings k-1 fresh ones. Weights are small rationals (numerators up to 4,
/// denominators up to 3).
WeightedHypertree random_hypertree(std::mt19937_64& rng, const RandomTreeOptions& opts);

}  // namespace htspec
