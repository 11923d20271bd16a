#include "superknap/dpopt.hpp"

#include "superknap/error.hpp"

#include <algorithm>
#include <string>

namespace superknap {

namespace {

Rational positive_part(const Rational& q) { return q > 0 ? q : Rational(0); }

std::vector<DPTraceEntry> run_dp(const GreedyProfile& gp, const RatVector& c) {
  if (c.size() != gp.n()) throw Error(ErrorCode::LengthMismatch, "objective has wrong dimension");
  std::vector<DPTraceEntry> trace;
  trace.reserve(gp.support.size());
  // prefix_free = Σ_{i<j} [c_i]^+ u_i, maintained incrementally.
  Rational prefix_free = 0;
  std::size_t scanned = 0;
  Rational prev_star = 0;
  for (std::size_t j : gp.support) {
    for (; scanned < j; ++scanned) prefix_free += positive_part(c[scanned]) * Rational(gp.upper[scanned]);
    DPTraceEntry e;
    e.j = j;
    e.f_minus = positive_part(c[j]) * Rational(gp.theta[j] - 1) + prefix_free;
    e.f_plus = c[j] * Rational(gp.theta[j]) + prev_star;
    e.f_star = std::max(e.f_minus, e.f_plus);
    prev_star = e.f_star;
    trace.push_back(std::move(e));
  }
  return trace;
}

}  // namespace

DPResult optimize(const GreedyProfile& gp, const RatVector& c) {
  DPResult res;
  res.trace = run_dp(gp, c);
  res.value = res.trace.empty() ? Rational(0) : res.trace.back().f_star;
  res.solution = gp.theta;
  res.leaf = std::nullopt;
  // Walk down the support; f⁺ wins ties since x_j = θ_j is lex-larger.
  for (std::size_t t = res.trace.size(); t-- > 0;) {
    const auto& e = res.trace[t];
    if (e.f_plus >= e.f_minus) continue;
    const std::size_t j = e.j;
    res.leaf = j;
    res.solution[j] = c[j] >= 0 ? gp.theta[j] - 1 : Integer(0);
    for (std::size_t i = 0; i < j; ++i) res.solution[i] = c[i] >= 0 ? gp.upper[i] : Integer(0);
    break;
  }
  return res;
}

LeafDescriptor leaf_set(const GreedyProfile& gp, LeafId j) {
  LeafDescriptor d;
  d.j = j;
  d.domains.resize(gp.n());
  if (!j) {
    for (std::size_t i = 0; i < gp.n(); ++i) d.domains[i] = {gp.theta[i]};
    return d;
  }
  if (*j >= gp.n() || !gp.in_support(*j)) {
    throw Error(ErrorCode::NotSupportIndex, "index " + std::to_string(*j + 1) + " is not in the support", {*j});
  }
  auto pair = [](const Integer& hi) { return hi == 0 ? IntVector{0} : IntVector{0, hi}; };
  for (std::size_t i = 0; i < gp.n(); ++i) {
    if (i < *j) d.domains[i] = pair(gp.upper[i]);
    else if (i == *j) d.domains[i] = pair(gp.theta[i] - 1);
    else d.domains[i] = {gp.theta[i]};
  }
  return d;
}

std::vector<IntVector> enumerate_leaf(const LeafDescriptor& leaf, std::size_t guard) {
  std::size_t count = 1;
  for (const auto& dom : leaf.domains) {
    count *= dom.size();
    if (count > guard) throw Error(ErrorCode::TooLarge, "leaf has more than " + std::to_string(guard) + " points");
  }
  std::vector<IntVector> out;
  out.reserve(count);
  std::vector<std::size_t> pos(leaf.domains.size(), 0);
  for (std::size_t k = 0; k < count; ++k) {
    IntVector x(leaf.domains.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = leaf.domains[i][pos[i]];
    out.push_back(std::move(x));
    for (std::size_t i = 0; i < pos.size(); ++i) {
      if (++pos[i] < leaf.domains[i].size()) break;
      pos[i] = 0;
    }
  }
  return out;
}

OptimalLeaves optimal_leaves(const GreedyProfile& gp, const RatVector& c) {
  auto trace = run_dp(gp, c);
  Rational value = trace.empty() ? Rational(0) : trace.back().f_star;
  OptimalLeaves out;
  // Σ_{i ∈ I_j} c_i θ_i, accumulated from the top of the support.
  Rational above = 0;
  for (std::size_t t = trace.size(); t-- > 0;) {
    if (trace[t].f_minus + above == value) out.support.push_back(trace[t].j);
    above += c[trace[t].j] * Rational(gp.theta[trace[t].j]);
  }
  out.theta = (above == value);
  std::reverse(out.support.begin(), out.support.end());
  return out;
}

}  // namespace superknap
