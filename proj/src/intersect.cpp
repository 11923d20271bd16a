#include "superknap/intersect.hpp"

#include "superknap/error.hpp"
#include "superknap/oracle.hpp"

#include <string>

namespace superknap {

const char* gap_case_name(GapCase c) {
  switch (c) {
    case GapCase::GapAtLeastTwo: return "GapAtLeastTwo";
    case GapCase::GapOne: return "GapOne";
    case GapCase::SinglePoint: return "SinglePoint";
  }
  return "?";
}

namespace {

std::vector<std::size_t> zero_positions(const IntVector& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) out.push_back(i);
  }
  return out;
}

GreedyProfile reduced_profile(const TwoSidedInstance& ts) {
  return make_profile(ts.reduced_upper, ts.reduced_theta);
}

std::size_t top_free(const TwoSidedInstance& ts) {
  if (ts.free_dim == 0) throw Error(ErrorCode::WrongCase, "every coordinate is fixed");
  return ts.free_dim - 1;
}

// Rows over the free coordinates, embedded in the full space, plus the
// equalities for the fixed suffix.
HPolytope expand(const TwoSidedInstance& ts, const std::vector<LinearInequality>& reduced_rows) {
  HPolytope poly;
  poly.dim = ts.n();
  std::vector<LinearInequality> rows;
  for (const auto& r : reduced_rows) rows.push_back(embed(r, ts.n(), 0));
  append_unique(poly, rows);
  for (std::size_t k = ts.free_dim; k < ts.n(); ++k) {
    IntVector e(ts.n(), 0);
    e[k] = 1;
    poly.ineqs.push_back({e, ts.theta[k], Sense::EQ, {TagKind::Fixed, k}});
  }
  return poly;
}

std::vector<LinearInequality> packing_rows(const HPolytope& p) {
  std::vector<LinearInequality> out;
  for (const auto& r : p.ineqs) {
    if (r.tag.kind == TagKind::Packing || r.tag.kind == TagKind::GePacking) out.push_back(r);
  }
  return out;
}

// Box rows holding the tighter of the bounds found in either polytope.
std::vector<LinearInequality> merged_box(const HPolytope& a, const HPolytope& b, const IntVector& u) {
  IntVector lower(u.size(), 0);
  IntVector upper = u;
  for (const HPolytope* p : {&a, &b}) {
    for (const auto& r : p->ineqs) {
      const std::size_t i = r.tag.index;
      if (r.tag.kind == TagKind::BoundLower && r.rhs > lower[i]) lower[i] = r.rhs;
      if (r.tag.kind == TagKind::BoundUpper && r.rhs < upper[i]) upper[i] = r.rhs;
    }
  }
  return box_rows(lower, upper);
}

HPolytope reduced_combined(const TwoSidedInstance& ts) {
  const std::size_t m = ts.free_dim;
  HPolytope le = hull_lex_le(reduced_profile(ts));
  HPolytope ge = hull_lex_ge(ts.reduced_upper, ts.reduced_gamma);
  HPolytope poly;
  poly.dim = m;
  append_unique(poly, packing_rows(le));
  append_unique(poly, packing_rows(ge));
  append_unique(poly, merged_box(le, ge, ts.reduced_upper));
  return poly;
}

}  // namespace

TwoSidedInstance build_two_sided(const KnapsackInstance& le, const KnapsackInstance& ge) {
  if (le.sense != Sense::LE || ge.sense != Sense::GE) {
    throw Error(ErrorCode::InvalidArgument, "two-sided input needs an le and a ge instance");
  }
  if (le.a.size() != le.u.size() || ge.a.size() != ge.u.size() || le.u.size() != ge.u.size()) {
    throw Error(ErrorCode::LengthMismatch, "instances differ in dimension");
  }
  if (le.u != ge.u) throw Error(ErrorCode::DifferentBoxes, "the two knapsacks use different bounds u");
  auto zl = zero_positions(le.a);
  auto zg = zero_positions(ge.a);
  if (!zl.empty() || !zg.empty()) {
    auto all = zl;
    all.insert(all.end(), zg.begin(), zg.end());
    throw Error(ErrorCode::ZeroCoefficientRegime,
                "zero weights break the distributive hull; only a relaxation is available", all);
  }

  TwoSidedInstance ts;
  ts.le = validate(le);
  try {
    validate(ge);
    KnapsackInstance shared = ge;
    shared.u = ts.le.inst.u;
    ts.ge = validate(shared);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Infeasible) throw Error(ErrorCode::EmptyIntersection, e.what());
    throw;
  }
  ts.box = ts.le.inst.u;
  ts.theta = greedy_solution(ts.le).theta;
  ts.gamma = minimal_packing(ts.ge);
  if (lex_cmp(ts.gamma, ts.theta).result == LexResult::GT) {
    throw Error(ErrorCode::EmptyIntersection, "gamma " + to_string(ts.gamma) + " is lex-larger than theta " +
                                                  to_string(ts.theta));
  }

  // x ⪯ θ caps the top free coordinate at θ; equal bounds fix it.
  std::size_t m = ts.n();
  IntVector upper = ts.box;
  while (m > 0) {
    const std::size_t t = m - 1;
    if (upper[t] > ts.theta[t]) upper[t] = ts.theta[t];
    if (ts.gamma[t] != ts.theta[t]) break;
    ts.fixed_suffix.push_back(t);
    --m;
  }
  ts.free_dim = m;
  ts.reduced_upper.assign(upper.begin(), upper.begin() + static_cast<std::ptrdiff_t>(m));
  ts.reduced_theta.assign(ts.theta.begin(), ts.theta.begin() + static_cast<std::ptrdiff_t>(m));
  ts.reduced_gamma.assign(ts.gamma.begin(), ts.gamma.begin() + static_cast<std::ptrdiff_t>(m));
  return ts;
}

HPolytope intersection_hull(const TwoSidedInstance& ts) {
  if (ts.free_dim == 0) return expand(ts, {});
  return expand(ts, reduced_combined(ts).ineqs);
}

GapCase case_classify(const TwoSidedInstance& ts) {
  if (ts.free_dim == 0) return GapCase::SinglePoint;
  const std::size_t t = ts.free_dim - 1;
  return ts.reduced_gamma[t] + 1 == ts.reduced_theta[t] ? GapCase::GapOne : GapCase::GapAtLeastTwo;
}

bool ExtendedFormulation::contains(const RatVector& x, const RatVector& y) const {
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::LengthMismatch, "(x,y) has wrong dimension");
  RatVector z = x;
  z.insert(z.end(), y.begin(), y.end());
  return system.contains(z);
}

std::string ExtendedFormulation::var_name(std::size_t k) const {
  return k < n ? "x" + std::to_string(k + 1) : "y" + std::to_string(k - n + 1);
}

ExtendedFormulation extended_formulation(const TwoSidedInstance& ts) {
  if (case_classify(ts) != GapCase::GapOne) {
    throw Error(ErrorCode::WrongCase, std::string("extended formulation needs GapOne, got ") +
                                          gap_case_name(case_classify(ts)));
  }
  const std::size_t n = ts.n();
  const std::size_t m = ts.free_dim;
  const std::size_t t = m - 1;
  const GreedyProfile gp = reduced_profile(ts);
  const IntVector& u = ts.reduced_upper;
  const IntVector& gam = ts.reduced_gamma;
  const Rational T(gp.theta[t]);
  const std::optional<std::size_t> ir = gp.prev[t];

  ExtendedFormulation ef;
  ef.n = n;
  ef.system.dim = 2 * n;
  ef.g.assign(m, std::nullopt);
  ef.h.assign(m, std::nullopt);
  auto X = [](std::size_t i) { return i; };
  auto Y = [n](std::size_t i) { return n + i; };
  auto push = [&](RatVector c, const Rational& rhs, Sense s) {
    ef.system.ineqs.push_back(make_row(c, rhs, s, {TagKind::Other, 0}));
  };
  auto zero = [&]() { return RatVector(2 * n, 0); };

  for (std::size_t i = 0; i < m; ++i) {
    RatVector c = zero();
    c[X(i)] = 1;
    push(c, 0, Sense::GE);
    c = zero();
    c[Y(i)] = 1;
    push(c, 0, Sense::GE);
    c = zero();
    c[X(i)] = 1;
    c[Y(i)] = -1;
    push(c, 0, Sense::GE);
  }
  {
    RatVector c = zero();
    c[X(t)] = 1;
    push(c, T - 1, Sense::GE);
    push(c, T, Sense::LE);
    // y_t = (T - 1)(T - x_t)
    c = zero();
    c[Y(t)] = 1;
    c[X(t)] = T - 1;
    push(c, (T - 1) * T, Sense::EQ);
  }
  for (std::size_t i = 0; i < t; ++i) {
    if (ir && i <= *ir) continue;
    RatVector c = zero();
    c[X(i)] = 1;
    c[Y(i)] = -1;
    push(c, 0, Sense::EQ);
  }
  // λ = (x_t - y_t)/T
  auto add_lambda = [&](RatVector& c, const Rational& scale) {
    c[X(t)] += scale / T;
    c[Y(t)] -= scale / T;
  };
  for (std::size_t i = 0; i < t; ++i) {
    RatVector c = zero();
    c[Y(i)] = 1;
    add_lambda(c, Rational(u[i]));
    push(c, Rational(u[i]), Sense::LE);
    if (ir && i <= *ir) {
      c = zero();
      c[Y(i)] = 1;
      c[X(i)] = -1;
      add_lambda(c, Rational(u[i]));
      push(c, 0, Sense::GE);
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (gp.theta[j] >= u[j]) continue;
    IntVector row = phi_row(gp, j);
    Integer g = gp.theta[j];
    RatVector c = zero();
    c[X(j)] += 1;
    c[Y(j)] -= 1;
    for (std::size_t i : gp.support_after(j)) {
      if (i == t) continue;
      g += row[i] * gp.theta[i];
      c[X(i)] += Rational(row[i]);
      c[Y(i)] -= Rational(row[i]);
    }
    ef.g[j] = g;
    add_lambda(c, -Rational(g));
    push(c, 0, Sense::LE);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (gam[j] < 1) continue;
    Integer h = gam[j];
    RatVector c = zero();
    c[Y(j)] += 1;
    for (std::size_t i = j + 1; i < t; ++i) {
      if (gam[i] > u[i] - 1) continue;
      Integer f = big_phi(u, gam, j, i);
      h += f * gam[i];
      c[Y(i)] += Rational(f);
    }
    ef.h[j] = h;
    add_lambda(c, Rational(h));
    push(c, Rational(h), Sense::GE);
  }
  for (std::size_t k = m; k < n; ++k) {
    RatVector c = zero();
    c[X(k)] = 1;
    ef.system.ineqs.push_back(make_row(c, Rational(ts.theta[k]), Sense::EQ, {TagKind::Fixed, k}));
    c = zero();
    c[Y(k)] = 1;
    push(c, 0, Sense::EQ);
  }
  return ef;
}

std::optional<RatVector> find_lift(const ExtendedFormulation& ef, const RatVector& x) {
  if (x.size() != ef.n) throw Error(ErrorCode::LengthMismatch, "x has wrong dimension");
  auto full = complete_point(ef.system, x);
  if (!full) return std::nullopt;
  return RatVector(full->begin() + static_cast<std::ptrdiff_t>(ef.n), full->end());
}

RatVector lift_point(const TwoSidedInstance& ts, const RatVector& x) {
  if (case_classify(ts) != GapCase::GapOne) throw Error(ErrorCode::WrongCase, "lift_point needs GapOne");
  const std::size_t n = ts.n();
  if (x.size() != n) throw Error(ErrorCode::LengthMismatch, "x has wrong dimension");
  const std::size_t t = top_free(ts);
  const GreedyProfile gp = reduced_profile(ts);
  const IntVector& u = ts.reduced_upper;
  const IntVector& gam = ts.reduced_gamma;
  const Rational eps = Rational(gp.theta[t]) - x[t];
  if (eps <= 0 || eps >= 1) {
    throw Error(ErrorCode::InvalidArgument, "epsilon = " + eps.get_str() + " is outside (0,1)");
  }
  if (!intersection_hull(ts).contains(x)) throw Error(ErrorCode::NotInHull, "x lies outside the combined hull");

  const std::optional<std::size_t> ir = gp.prev[t];
  RatVector y(n, 0);
  for (std::size_t i = 0; i < t; ++i) {
    if (ir && i <= *ir) {
      Rational cap = eps * Rational(u[i]);
      y[i] = x[i] < cap ? x[i] : cap;
    } else {
      y[i] = x[i];
    }
  }
  y[t] = eps * Rational(gp.theta[t] - 1);

  const Rational keep = 1 - eps;
  for (std::size_t j = 0; j < t; ++j) {
    IntVector row = phi_row(gp, j);
    Rational lhs = x[j] - y[j] - Rational(gp.theta[j]) * keep;
    for (std::size_t i : gp.support_after(j)) {
      if (i != t) lhs += Rational(row[i]) * (x[i] - y[i] - Rational(gp.theta[i]) * keep);
    }
    if (lhs > 0) {
      throw Error(ErrorCode::LiftCheckFailed, "packing slice inequality fails at j=" + std::to_string(j + 1), {j});
    }
    Rational cover = y[j];
    for (std::size_t i = j + 1; i < t; ++i) {
      if (gam[i] <= u[i] - 1) cover += Rational(big_phi(u, gam, j, i)) * y[i];
    }
    if (cover < eps * Rational(big_phi(u, gam, j, t))) {
      throw Error(ErrorCode::LiftCheckFailed, "covering slice inequality fails at j=" + std::to_string(j + 1), {j});
    }
  }
  if (!extended_formulation(ts).contains(x, y)) {
    throw Error(ErrorCode::LiftCheckFailed, "(x,y) violates the extended formulation");
  }
  return y;
}

CrossCheckReport gap_two_cross_check(const TwoSidedInstance& ts) {
  if (case_classify(ts) != GapCase::GapAtLeastTwo) throw Error(ErrorCode::WrongCase, "cross-check needs GapAtLeastTwo");
  const std::size_t m = ts.free_dim;
  const std::size_t t = m - 1;
  HPolytope combined = reduced_combined(ts);
  HPolytope p1 = hull_lex_le(reduced_profile(ts));
  HPolytope p2 = hull_lex_ge(ts.reduced_upper, ts.reduced_gamma);
  IntVector e(m, 0);
  e[t] = 1;
  p1.ineqs.push_back({e, ts.reduced_gamma[t] + 1, Sense::GE, {TagKind::Other, t}});
  p2.ineqs.push_back({e, ts.reduced_theta[t] - 1, Sense::LE, {TagKind::Other, t}});
  HPolytope lifted = disjunctive_hull(p1, p2);

  CrossCheckReport rep;
  for (const auto& v : vertices(combined).vertices) {
    ++rep.combined_vertices;
    bool in_union = p1.contains(v.point) || p2.contains(v.point);
    if (!in_union || !complete_point(lifted, v.point)) rep.failures.push_back(v.point);
  }
  const RatVector lo = to_rational(ts.reduced_gamma), hi = to_rational(ts.reduced_theta);
  for (const HPolytope* branch : {&p1, &p2}) {
    for (const auto& v : vertices(*branch).vertices) {
      ++rep.branch_vertices;
      bool ok = is_integral(v.point) && combined.contains(v.point) &&
                lex_cmp(lo, v.point).result != LexResult::GT && lex_cmp(v.point, hi).result != LexResult::GT;
      if (!ok) rep.failures.push_back(v.point);
    }
  }
  return rep;
}

HPolytope zero_coefficient_relaxation(const KnapsackInstance& le, const HPolytope& ge_hull) {
  if (le.sense != Sense::LE) throw Error(ErrorCode::InvalidArgument, "relaxation needs an le instance");
  const std::size_t n = le.n();
  if (le.u.size() != n || ge_hull.dim != n) throw Error(ErrorCode::LengthMismatch, "dimensions differ");
  std::vector<std::size_t> positive;
  KnapsackInstance sub;
  sub.sense = Sense::LE;
  sub.b = le.b;
  for (std::size_t i = 0; i < n; ++i) {
    if (le.a[i] < 0) throw Error(ErrorCode::NonpositiveEntry, "negative weight", {i});
    if (le.a[i] == 0) continue;
    positive.push_back(i);
    sub.a.push_back(le.a[i]);
    sub.u.push_back(le.u[i]);
  }
  if (positive.empty()) throw Error(ErrorCode::InvalidArgument, "no positive weights");
  ValidatedKnapsack vk = validate(sub);
  HPolytope inner = hull_le(vk, greedy_solution(vk));

  HPolytope poly;
  poly.dim = n;
  poly.relaxation = true;
  auto lift = [&](const LinearInequality& r) {
    LinearInequality out = r;
    out.coeffs.assign(n, 0);
    for (std::size_t k = 0; k < positive.size(); ++k) out.coeffs[positive[k]] = r.coeffs[k];
    out.tag.index = positive[r.tag.index];
    return out;
  };
  std::vector<LinearInequality> rows;
  for (const auto& r : inner.ineqs) {
    if (r.tag.kind == TagKind::Packing) rows.push_back(lift(r));
  }
  for (const auto& r : ge_hull.ineqs) {
    if (r.tag.kind == TagKind::GePacking || r.tag.kind == TagKind::Other) rows.push_back(r);
  }
  for (const auto& r : inner.ineqs) {
    if (r.tag.kind != TagKind::Packing) rows.push_back(lift(r));
  }
  for (const auto& r : box_rows(le.u)) {
    if (le.a[r.tag.index] == 0) rows.push_back(r);
  }
  for (const auto& r : ge_hull.ineqs) rows.push_back(r);
  append_unique(poly, rows);
  return poly;
}

}  // namespace superknap
