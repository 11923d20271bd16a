#pragma once

#include "superknap/greedy.hpp"

#include <optional>
#include <vector>

namespace superknap {

struct DPTraceEntry {
  std::size_t j;  // support index, 0-based
  Rational f_minus;
  Rational f_plus;
  Rational f_star;
};

// Leaf ℓ_j for j ∈ I, or ℓ_0 = {θ} when j is empty.
using LeafId = std::optional<std::size_t>;

struct DPResult {
  Rational value;
  IntVector solution;  // lex-largest optimum
  LeafId leaf;
  std::vector<DPTraceEntry> trace;  // one entry per support index, increasing
};

DPResult optimize(const GreedyProfile& gp, const RatVector& c);

struct LeafDescriptor {
  LeafId j;
  std::vector<IntVector> domains;  // allowed values per coordinate, increasing
};

LeafDescriptor leaf_set(const GreedyProfile& gp, LeafId j);

// Materializes the leaf; throws TooLarge above the guard.
std::vector<IntVector> enumerate_leaf(const LeafDescriptor& leaf, std::size_t guard = 1u << 20);

struct OptimalLeaves {
  bool theta = false;                 // ℓ_0 meets Opt
  std::vector<std::size_t> support;  // j ∈ I with ℓ_j ∩ Opt ≠ ∅
};

OptimalLeaves optimal_leaves(const GreedyProfile& gp, const RatVector& c);

}  // namespace superknap
