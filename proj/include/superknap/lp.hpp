#pragma once

#include "superknap/linear_system.hpp"

#include <optional>
#include <vector>

namespace superknap {

// Exact dense simplex with Bland's rule over x ≥ 0.
struct LpRow {
  RatVector coeffs;
  Sense sense = Sense::LE;
  Rational rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RatVector x;
};

LpResult lp_maximize(const std::vector<LpRow>& rows, const RatVector& c);
LpResult lp_feasible(const std::vector<LpRow>& rows, std::size_t nvars);

std::vector<LpRow> lp_rows(const HPolytope& poly);

// Rows of `poly` with the listed variables fixed; the remaining variables
// keep their order.
std::vector<LpRow> fix_variables(const std::vector<LpRow>& rows, const std::vector<std::size_t>& fixed,
                                 const RatVector& values);

// Finds values for the variables after the first x.size() so that the full
// vector satisfies `poly`. All variables of `poly` must be nonnegative.
std::optional<RatVector> complete_point(const HPolytope& poly, const RatVector& x);

}  // namespace superknap
