#pragma once

#include "superknap/core.hpp"

#include <optional>
#include <vector>

namespace superknap {

// A lex bound θ inside the box [0, upper] with its support structure.
// Greedy solutions of validated instances have n-1 in the support; profiles
// built from arbitrary lex bounds need not.
struct GreedyProfile {
  IntVector upper;
  IntVector theta;
  std::vector<std::size_t> support;             // I, increasing, 0-based
  std::vector<std::optional<std::size_t>> prev;  // max{i ∈ I : i < j}
  std::vector<std::optional<std::size_t>> next;  // min{i ∈ I : i > j}

  std::size_t n() const { return theta.size(); }
  bool in_support(std::size_t i) const { return theta[i] >= 1; }
  // I_j = {i ∈ I : i > j}
  std::vector<std::size_t> support_after(std::size_t j) const;
};

GreedyProfile make_profile(IntVector upper, IntVector theta);

// θ_i = min{u_i, ⌊(b - Σ_{k>i} a_k θ_k)/a_i⌋}, i = n..1. Needs a > 0, b ≥ 0.
IntVector greedy_vector(const IntVector& a, const IntVector& u, const Integer& b);

GreedyProfile greedy_solution(const ValidatedKnapsack& vk);

// g(a,u,b) = a^T θ.
Integer max_capacity(const ValidatedKnapsack& vk);

struct PackingReport {
  Integer capacity_used;
  bool unique = true;
  std::optional<IntVector> alternate;
  std::optional<std::size_t> witness;  // the j used to build alternate
};

PackingReport uniqueness(const ValidatedKnapsack& vk, const GreedyProfile& gp);

// Lex-min point of {x ∈ [0,u] : w^T x ≥ d}, by complementation.
IntVector minimal_packing(const IntVector& w, const IntVector& u, const Integer& d);

// Minimal packing of a validated GE instance.
IntVector minimal_packing(const ValidatedKnapsack& ge);

}  // namespace superknap
