#pragma once

#include "superknap/greedy.hpp"
#include "superknap/linear_system.hpp"

#include <vector>

namespace superknap {

// φ_j(i) for i ∈ I_j.
Integer phi(const GreedyProfile& gp, std::size_t j, std::size_t i);

// Length-n vector holding φ_j(i) at i ∈ I_j and 0 elsewhere.
IntVector phi_row(const GreedyProfile& gp, std::size_t j);

// x_j + Σ_{i∈I_j} φ_j(i) x_i ≤ θ_j + Σ φ_j(i) θ_i; x_j ≤ u_j when θ_j = u_j.
LinearInequality packing_inequality(const GreedyProfile& gp, std::size_t j);

// conv{x ∈ [0,u] : x ⪯ θ}: packing rows for θ_j < u_j, then the box.
HPolytope hull_lex_le(const GreedyProfile& gp);

// conv{x ∈ [0,u] : x ⪰ γ}, through y = u - x.
HPolytope hull_lex_ge(const IntVector& u, const IntVector& gamma);

// Same polytope from the closed-form Φ coefficients.
HPolytope hull_lex_ge_direct(const IntVector& u, const IntVector& gamma);

// Φ_j(i) = γ_j Π_{k∈T_j, k<i} (γ_k + 1).
Integer big_phi(const IntVector& u, const IntVector& gamma, std::size_t j, std::size_t i);

HPolytope hull_le(const ValidatedKnapsack& vk, const GreedyProfile& gp);
HPolytope hull_ge(const IntVector& w, const IntVector& u, const Integer& d);
HPolytope hull_ge(const ValidatedKnapsack& ge);

struct FacetCertificate {
  std::size_t j = 0;
  std::vector<IntVector> points;
};

// Builds the n tight points and checks membership, tightness and affine rank.
FacetCertificate facet_certificate(const GreedyProfile& gp, std::size_t j);
FacetCertificate facet_certificate(const ValidatedKnapsack& vk, const GreedyProfile& gp, std::size_t j);

// conv{x ∈ K : x ≥ l}.
HPolytope hull_lower_bounded(const ValidatedKnapsack& vk, const GreedyProfile& gp, const IntVector& l);

}  // namespace superknap
