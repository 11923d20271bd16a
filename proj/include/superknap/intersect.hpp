#pragma once

#include "superknap/facets.hpp"
#include "superknap/lp.hpp"

#include <optional>
#include <vector>

namespace superknap {

enum class GapCase { GapAtLeastTwo, GapOne, SinglePoint };

const char* gap_case_name(GapCase c);

// {x ∈ [0,u] : γ ⪯ x ⪯ θ} after fixing trailing coordinates where γ and θ
// agree. Coordinates [0, free_dim) stay free, the rest equal θ.
struct TwoSidedInstance {
  ValidatedKnapsack le;
  ValidatedKnapsack ge;  // shares the LE box
  IntVector box;
  IntVector theta;
  IntVector gamma;
  std::size_t free_dim = 0;
  IntVector reduced_upper;  // box on the free coordinates, top bound set to θ
  IntVector reduced_theta;
  IntVector reduced_gamma;
  std::vector<std::size_t> fixed_suffix;  // in the order they were fixed

  std::size_t n() const { return box.size(); }
};

TwoSidedInstance build_two_sided(const KnapsackInstance& le, const KnapsackInstance& ge);

HPolytope intersection_hull(const TwoSidedInstance& ts);

GapCase case_classify(const TwoSidedInstance& ts);

// Variables (x_1..x_n, y_1..y_n).
struct ExtendedFormulation {
  std::size_t n = 0;
  HPolytope system;
  std::vector<std::optional<Integer>> g;  // on the free coordinates
  std::vector<std::optional<Integer>> h;

  bool contains(const RatVector& x, const RatVector& y) const;
  std::string var_name(std::size_t k) const;
};

ExtendedFormulation extended_formulation(const TwoSidedInstance& ts);

// Some y with (x, y) feasible, by LP; empty when none exists.
std::optional<RatVector> find_lift(const ExtendedFormulation& ef, const RatVector& x);

// Explicit y for x with x_m = θ_m - ε, ε ∈ (0,1), on the top free
// coordinate m. Runs both slice inequalities as runtime checks.
RatVector lift_point(const TwoSidedInstance& ts, const RatVector& x);

struct CrossCheckReport {
  std::size_t combined_vertices = 0;
  std::size_t branch_vertices = 0;
  std::vector<RatVector> failures;

  bool ok() const { return failures.empty(); }
};

// GapAtLeastTwo: checks the combined system against the union
// {conv K≤ : x_m ≥ γ_m+1} ∪ {conv K≥ : x_m ≤ θ_m−1} and its disjunctive hull.
CrossCheckReport gap_two_cross_check(const TwoSidedInstance& ts);

// Zero-weight regime: hull_le of the positive-weight part of `le`, padded
// with box rows, intersected with a supplied GE description. Flagged as a
// relaxation.
HPolytope zero_coefficient_relaxation(const KnapsackInstance& le, const HPolytope& ge_hull);

}  // namespace superknap
