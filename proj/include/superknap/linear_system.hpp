#pragma once

#include "superknap/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace superknap {

enum class TagKind { Packing, BoundUpper, BoundLower, GePacking, Fixed, Other };

struct RowTag {
  TagKind kind = TagKind::Other;
  std::size_t index = 0;  // 0-based coordinate or packing index

  bool operator==(const RowTag&) const = default;
};

std::string tag_name(const RowTag& tag);  // "PACKING(1)", 1-based
RowTag parse_tag(const std::string& text);

// coeffs · x (≤ | ≥ | =) rhs with integer data.
struct LinearInequality {
  IntVector coeffs;
  Integer rhs;
  Sense sense = Sense::LE;
  RowTag tag;

  Rational lhs(const RatVector& x) const;
  // lhs - rhs; ξ_j for packing rows.
  Rational slack(const RatVector& x) const;
  bool satisfied(const RatVector& x) const;
  bool tight(const RatVector& x) const { return slack(x) == 0; }

  bool operator==(const LinearInequality&) const = default;
};

// Scales a rational row to coprime integers.
LinearInequality make_row(const RatVector& coeffs, const Rational& rhs, Sense sense, RowTag tag = {});

struct HPolytope {
  std::size_t dim = 0;
  std::vector<LinearInequality> ineqs;
  bool relaxation = false;  // valid relaxation, not an exact hull

  bool contains(const RatVector& x) const;
  bool contains(const IntVector& x) const;
};

// Rows of 0 ≤ x ≤ u.
std::vector<LinearInequality> box_rows(const IntVector& u);
std::vector<LinearInequality> box_rows(const IntVector& lower, const IntVector& upper);

// Appends rows not already present.
void append_unique(HPolytope& poly, const std::vector<LinearInequality>& rows);

// Lifts rows over `from` variables into a larger space at the given offset.
LinearInequality embed(const LinearInequality& row, std::size_t dim, std::size_t offset);

using VarNamer = std::function<std::string(std::size_t)>;
std::string default_var_name(std::size_t i);  // "x1"

// "x1 + 3x2 + 9x3 <= 72"
std::string render(const LinearInequality& row, const VarNamer& name = default_var_name);

// conv(P1 ∪ P2) as an extended system over [z, z1, λ] where z = z1 + z2,
// P1-rows hold for (z1, λ) and P2-rows for (z - z1, 1 - λ). Both polytopes
// must be bounded and share the dimension.
HPolytope disjunctive_hull(const HPolytope& p1, const HPolytope& p2);

}  // namespace superknap
