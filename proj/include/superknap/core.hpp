#pragma once

#include "superknap/types.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace superknap {

// Σ a_i x_i ≤ b (LE) or ≥ b (GE) over the box 0 ≤ x ≤ u.
struct KnapsackInstance {
  IntVector a;
  IntVector u;
  Integer b;
  Sense sense = Sense::LE;

  std::size_t n() const { return a.size(); }
};

struct SuperincreasingCheck {
  bool ok = true;
  // Smallest 0-based i with Σ_{k≤i} a_k u_k > a_{i+1}.
  std::optional<std::size_t> violation;
};

SuperincreasingCheck is_superincreasing(const IntVector& a, const IntVector& u);

enum class LexResult { LT, EQ, GT };

struct LexOrdering {
  LexResult result = LexResult::EQ;
  // Highest differing coordinate; empty when the vectors are equal.
  std::optional<std::size_t> pivot;
};

LexOrdering lex_cmp(const IntVector& x, const IntVector& y);
LexOrdering lex_cmp(const RatVector& x, const RatVector& y);

inline bool lex_leq(const IntVector& x, const IntVector& y) {
  return lex_cmp(x, y).result != LexResult::GT;
}

struct TightenReport {
  KnapsackInstance inst;
  bool changed = false;
  // Coordinates whose bound collapsed to 0 because a_i > b.
  std::vector<std::size_t> forced_zero;
};

// u_i ← min(u_i, ⌊b/a_i⌋). Forced-zero coordinates are reported, not dropped.
TightenReport tighten_bounds(const KnapsackInstance& inst);

struct ValidatedKnapsack {
  KnapsackInstance inst;  // bounds tightened for LE instances
  IntVector original_u;
  bool superincreasing_certified = false;
  bool nontrivial = false;
  bool tightened = false;

  std::size_t n() const { return inst.n(); }
  const IntVector& a() const { return inst.a; }
  const IntVector& u() const { return inst.u; }
  const Integer& b() const { return inst.b; }
};

// LE: lengths, positivity, tightening, superincreasing, nontriviality.
// GE: lengths, positivity, superincreasing, feasibility of a^T u ≥ b.
ValidatedKnapsack validate(const KnapsackInstance& inst);

void require_in_box(const IntVector& x, const IntVector& u);

// x ∈ K via x ⪯ θ. Debug builds also compare against a^T x ≤ b.
bool membership(const ValidatedKnapsack& vk, const IntVector& theta, const IntVector& x);

}  // namespace superknap
