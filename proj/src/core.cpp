#include "superknap/core.hpp"

#include "superknap/error.hpp"

#include <string>

namespace superknap {

namespace {

void check_lengths(const IntVector& a, const IntVector& u) {
  if (a.empty()) throw Error(ErrorCode::LengthMismatch, "instance has no variables");
  if (a.size() != u.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "a has " + std::to_string(a.size()) + " entries, u has " + std::to_string(u.size()));
  }
}

void check_positive(const IntVector& v, const char* name) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1) bad.push_back(i);
  }
  if (!bad.empty()) {
    throw Error(ErrorCode::NonpositiveEntry,
                std::string(name) + "_" + std::to_string(bad.front() + 1) + " must be at least 1", bad);
  }
}

template <class V>
LexOrdering lex_cmp_impl(const V& x, const V& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::LengthMismatch, "lex_cmp on vectors of different length");
  for (std::size_t k = x.size(); k-- > 0;) {
    if (x[k] != y[k]) return {x[k] < y[k] ? LexResult::LT : LexResult::GT, k};
  }
  return {LexResult::EQ, std::nullopt};
}

}  // namespace

SuperincreasingCheck is_superincreasing(const IntVector& a, const IntVector& u) {
  check_lengths(a, u);
  check_positive(a, "a");
  check_positive(u, "u");
  Integer prefix = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    prefix += a[i] * u[i];
    if (prefix > a[i + 1]) return {false, i};
  }
  return {true, std::nullopt};
}

LexOrdering lex_cmp(const IntVector& x, const IntVector& y) { return lex_cmp_impl(x, y); }
LexOrdering lex_cmp(const RatVector& x, const RatVector& y) { return lex_cmp_impl(x, y); }

TightenReport tighten_bounds(const KnapsackInstance& inst) {
  if (inst.sense != Sense::LE) throw Error(ErrorCode::InvalidArgument, "tighten_bounds needs an LE instance");
  check_lengths(inst.a, inst.u);
  check_positive(inst.a, "a");
  TightenReport rep{inst, false, {}};
  for (std::size_t i = 0; i < inst.n(); ++i) {
    Integer cap = floor_div(inst.b, inst.a[i]);
    if (cap < rep.inst.u[i]) {
      rep.inst.u[i] = cap < 0 ? Integer(0) : cap;
      rep.changed = true;
    }
    if (cap <= 0) rep.forced_zero.push_back(i);
  }
  return rep;
}

ValidatedKnapsack validate(const KnapsackInstance& inst) {
  check_lengths(inst.a, inst.u);
  check_positive(inst.a, "a");
  check_positive(inst.u, "u");
  if (inst.b < 1) throw Error(ErrorCode::NonpositiveEntry, "b must be at least 1");
  if (inst.sense == Sense::EQ) throw Error(ErrorCode::InvalidArgument, "knapsack sense must be le or ge");

  ValidatedKnapsack vk;
  vk.original_u = inst.u;
  vk.inst = inst;
  if (inst.sense == Sense::LE) {
    TightenReport rep = tighten_bounds(inst);
    if (!rep.forced_zero.empty()) {
      std::string list;
      for (auto i : rep.forced_zero) list += (list.empty() ? "" : ",") + std::to_string(i + 1);
      throw Error(ErrorCode::InfeasibleBound, "variables forced to 0 since a_i > b: " + list, rep.forced_zero);
    }
    vk.inst = rep.inst;
    vk.tightened = rep.changed;
  }
  SuperincreasingCheck sc = is_superincreasing(vk.inst.a, vk.inst.u);
  if (!sc.ok) {
    std::size_t i = *sc.violation;
    throw Error(ErrorCode::NotSuperincreasing,
                "sum of a_k u_k over k <= " + std::to_string(i + 1) + " exceeds a_" + std::to_string(i + 2),
                {i});
  }
  vk.superincreasing_certified = true;
  Integer total = dot(vk.inst.a, vk.inst.u);
  if (inst.sense == Sense::LE) {
    vk.nontrivial = total > inst.b;
  } else {
    if (total < inst.b) throw Error(ErrorCode::Infeasible, "a^T u = " + total.get_str() + " is below d");
    vk.nontrivial = true;
  }
  return vk;
}

void require_in_box(const IntVector& x, const IntVector& u) {
  if (x.size() != u.size()) throw Error(ErrorCode::LengthMismatch, "point has wrong dimension");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] > u[i]) {
      throw Error(ErrorCode::OutOfBox, "x_" + std::to_string(i + 1) + " outside [0,u]", {i});
    }
  }
}

bool membership(const ValidatedKnapsack& vk, const IntVector& theta, const IntVector& x) {
  if (vk.inst.sense != Sense::LE) throw Error(ErrorCode::InvalidArgument, "membership needs an LE instance");
  require_in_box(x, vk.inst.u);
  bool inside = lex_cmp(x, theta).result != LexResult::GT;
#ifndef NDEBUG
  if (inside != (dot(vk.inst.a, x) <= vk.inst.b)) {
    throw Error(ErrorCode::Internal, "lex membership disagrees with a^T x <= b at " + to_string(x));
  }
#endif
  return inside;
}

}  // namespace superknap
