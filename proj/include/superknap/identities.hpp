#pragma once

#include "superknap/greedy.hpp"

#include <string>
#include <vector>

namespace superknap {

// Numeric checks of the recursive structure of φ and Φ. Each check counts
// the instantiations it evaluated and records every mismatch.
struct IdentityReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void merge(const IdentityReport& other);
};

// φ_j(next(i)) - φ_j(i) = φ_j(i)(u_i - θ_i) and
// φ_j(i) = u_j - θ_j + Σ_{k∈I_j, k<i} φ_j(k)(u_k - θ_k).
IdentityReport check_phi_observation(const GreedyProfile& gp);

// φ_j(i) = φ_j(s)[1 + Σ_{k∈I_j, s≤k<i} φ_k(i)] for s < i in I_j.
IdentityReport check_phi_product(const GreedyProfile& gp);

// Σ_{i∈I_j\n, i≥s} φ_j(i)(x_i - z_i - θ_i e)
//   = φ_j(s) Σ_{i∈I_j\n, i≥s} [x_i - z_i - θ_i e + Σ_{k∈I_i\n} φ_i(k)(x_k - z_k - θ_k e)].
IdentityReport check_phi_telescoping(const GreedyProfile& gp, const RatVector& x, const RatVector& z,
                                     const Rational& e);

// Σ_{i∈T_j\n, i≥s} Φ_j(i)(γ_i e - z_i)
//   = Φ_j(s) Σ_{i∈T_j\n, i≥s} [e Φ_i(n) - z_i - Σ_{k∈T_i\n} Φ_i(k) z_k].
IdentityReport check_big_phi_telescoping(const IntVector& u, const IntVector& gamma, const RatVector& z,
                                         const Rational& e);

// Φ_j(n) = γ_j + Σ_{i∈T_j\n} Φ_j(i) γ_i = Φ_j(k)(γ_k + 1) + Σ_{i∈T_k\n} Φ_j(i) γ_i.
IdentityReport check_h_equals_big_phi(const IntVector& u, const IntVector& gamma);

}  // namespace superknap
