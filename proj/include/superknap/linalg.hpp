#pragma once

#include "superknap/types.hpp"

#include <optional>
#include <vector>

namespace superknap {

// Rank over ℚ.
std::size_t rank(std::vector<RatVector> rows);

// Dimension of the affine hull: rank of the differences from the first point.
// Empty and singleton sets both report 0.
std::size_t affine_rank(const std::vector<RatVector>& points);
std::size_t affine_rank(const std::vector<IntVector>& points);

// Unique solution of the square system A x = b, or nothing if singular.
std::optional<RatVector> solve_square(std::vector<RatVector> a, RatVector b);

}  // namespace superknap
