#include "superknap/greedy.hpp"

#include "superknap/error.hpp"

#include <string>

namespace superknap {

std::vector<std::size_t> GreedyProfile::support_after(std::size_t j) const {
  std::vector<std::size_t> out;
  for (auto i : support) {
    if (i > j) out.push_back(i);
  }
  return out;
}

GreedyProfile make_profile(IntVector upper, IntVector theta) {
  if (upper.size() != theta.size()) throw Error(ErrorCode::LengthMismatch, "theta and u differ in length");
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i] < 0 || theta[i] > upper[i]) {
      throw Error(ErrorCode::OutOfBox, "theta_" + std::to_string(i + 1) + " outside [0,u]", {i});
    }
  }
  GreedyProfile gp;
  gp.upper = std::move(upper);
  gp.theta = std::move(theta);
  const std::size_t n = gp.theta.size();
  gp.prev.assign(n, std::nullopt);
  gp.next.assign(n, std::nullopt);
  for (std::size_t i = 0; i < n; ++i) {
    if (gp.theta[i] >= 1) gp.support.push_back(i);
  }
  std::optional<std::size_t> last;
  for (std::size_t j = 0; j < n; ++j) {
    gp.prev[j] = last;
    if (gp.theta[j] >= 1) last = j;
  }
  std::optional<std::size_t> upcoming;
  for (std::size_t j = n; j-- > 0;) {
    gp.next[j] = upcoming;
    if (gp.theta[j] >= 1) upcoming = j;
  }
  return gp;
}

IntVector greedy_vector(const IntVector& a, const IntVector& u, const Integer& b) {
  if (a.size() != u.size()) throw Error(ErrorCode::LengthMismatch, "a and u differ in length");
  if (b < 0) throw Error(ErrorCode::Infeasible, "negative capacity");
  IntVector theta(a.size());
  Integer residual = b;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] <= 0) throw Error(ErrorCode::ZeroWeight, "weight a_" + std::to_string(i + 1) + " is not positive", {i});
    Integer cap = floor_div(residual, a[i]);
    theta[i] = cap < u[i] ? cap : u[i];
    residual -= a[i] * theta[i];
  }
  return theta;
}

GreedyProfile greedy_solution(const ValidatedKnapsack& vk) {
  if (vk.inst.sense != Sense::LE) throw Error(ErrorCode::InvalidArgument, "greedy_solution needs an LE instance");
  return make_profile(vk.inst.u, greedy_vector(vk.inst.a, vk.inst.u, vk.inst.b));
}

Integer max_capacity(const ValidatedKnapsack& vk) {
  return dot(vk.inst.a, greedy_vector(vk.inst.a, vk.inst.u, vk.inst.b));
}

PackingReport uniqueness(const ValidatedKnapsack& vk, const GreedyProfile& gp) {
  const auto& a = vk.inst.a;
  const auto& u = vk.inst.u;
  PackingReport rep;
  rep.capacity_used = dot(a, gp.theta);
  Integer prefix = 0;
  bool lower_support = false;
  for (std::size_t j = 0; j < gp.n(); ++j) {
    if (a[j] == prefix && gp.theta[j] > 0 && !lower_support) {
      IntVector alt = gp.theta;
      for (std::size_t i = 0; i < j; ++i) alt[i] = u[i];
      alt[j] -= 1;
      rep.unique = false;
      rep.alternate = std::move(alt);
      rep.witness = j;
      return rep;
    }
    prefix += a[j] * u[j];
    if (gp.theta[j] > 0) lower_support = true;
  }
  return rep;
}

IntVector minimal_packing(const IntVector& w, const IntVector& u, const Integer& d) {
  if (w.size() != u.size()) throw Error(ErrorCode::LengthMismatch, "w and u differ in length");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] <= 0) throw Error(ErrorCode::ZeroWeight, "weight w_" + std::to_string(i + 1) + " is not positive", {i});
  }
  Integer total = dot(w, u);
  if (total < d) throw Error(ErrorCode::Infeasible, "w^T u = " + total.get_str() + " is below d = " + d.get_str());
  Integer slack = d < 0 ? total : total - d;
  IntVector complement = greedy_vector(w, u, slack);
  IntVector gamma(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) gamma[i] = u[i] - complement[i];
  return gamma;
}

IntVector minimal_packing(const ValidatedKnapsack& ge) {
  if (ge.inst.sense != Sense::GE) throw Error(ErrorCode::InvalidArgument, "minimal_packing needs a GE instance");
  return minimal_packing(ge.inst.a, ge.inst.u, ge.inst.b);
}

}  // namespace superknap
