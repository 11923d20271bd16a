#pragma once

#include "superknap/core.hpp"
#include "superknap/linear_system.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace superknap {

struct BasisInstance {
  IntVector a;
  IntVector u;
};

// Divisor chain 1 = a_1 | a_2 | … | a_n; u_i = a_{i+1}/a_i − 1 for i < n and
// u_n = last_bound.
BasisInstance integer_basis_instance(const IntVector& chain, const Integer& last_bound);

// a_t = α^{t−1}, u_t = α − 1, b = ubound, with ⌊log_α(ubound)⌋ + 1 digits.
KnapsackInstance alpha_expansion_instance(const Integer& alpha, const Integer& ubound);

struct RandomOptions {
  std::size_t n = 4;
  std::uint64_t max_u = 3;      // u_i ∈ [1, max_u]
  std::uint64_t max_a1 = 5;     // a_1 ∈ [1, max_a1]
  std::uint64_t max_slack = 5;  // a_{i+1} = Σ_{k≤i} a_k u_k + slack
};

// Uniform integer in [lo, hi] drawn from 64-bit words.
Integer random_integer(std::mt19937_64& rng, const Integer& lo, const Integer& hi);

// Superincreasing by construction, b ∈ [max_i a_i u_i, a^T u − 1].
KnapsackInstance random_superincreasing(const RandomOptions& opts, std::mt19937_64& rng);

IntVector random_superincreasing_weights(const IntVector& u, const RandomOptions& opts, std::mt19937_64& rng);

struct TwoSidedPair {
  KnapsackInstance le;
  KnapsackInstance ge;
};

// Shared box, independent weights, d ∈ [1, w^T θ] so the set is nonempty.
TwoSidedPair random_two_sided(const RandomOptions& opts, std::mt19937_64& rng);

// Q = {(x,y) ∈ [0,u] × [0,ũ] : a^T x + y ≤ b}.
struct MixedInstance {
  IntVector a;
  IntVector u;
  Rational ub_cont;
  Rational b;
};

struct MixedHull {
  MixedInstance inst;
  Integer floor_b;    // ⌊b⌋
  Integer floor_low;  // ⌊b − ũ⌋
  Integer ceil_low;   // ⌈b − ũ⌉
  IntVector theta_b;
  IntVector theta_low;
  std::optional<IntVector> gamma;  // empty when Q1 has no integer x
  std::optional<HPolytope> q1;     // over (x, y)
  HPolytope q2;
  // Variables [x, y, xa, ya, λ]; just q2 when q1 is absent.
  HPolytope system;

  bool contains(const RatVector& x, const Rational& y) const;
};

bool in_mixed_set(const MixedInstance& mi, const IntVector& x, const Rational& y);

MixedHull mixed_hull_extended(const MixedInstance& mi);

}  // namespace superknap
