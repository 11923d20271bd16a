#include "superknap/apps.hpp"

#include "superknap/error.hpp"
#include "superknap/facets.hpp"
#include "superknap/greedy.hpp"
#include "superknap/lp.hpp"

#include <algorithm>

namespace superknap {

BasisInstance integer_basis_instance(const IntVector& chain, const Integer& last_bound) {
  if (chain.size() < 2) throw Error(ErrorCode::InvalidArgument, "divisor chain needs at least two entries");
  if (chain.front() != 1) throw Error(ErrorCode::NotStartingAtOne, "divisor chain must start at 1", {0});
  if (last_bound < 1) throw Error(ErrorCode::NonpositiveEntry, "last bound must be at least 1");
  BasisInstance out;
  out.a = chain;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i + 1] <= chain[i] || chain[i + 1] % chain[i] != 0) {
      throw Error(ErrorCode::NotDivisorChain,
                  "a_" + std::to_string(i + 1) + " does not properly divide a_" + std::to_string(i + 2), {i});
    }
    out.u.push_back(chain[i + 1] / chain[i] - 1);
  }
  out.u.push_back(last_bound);
  return out;
}

KnapsackInstance alpha_expansion_instance(const Integer& alpha, const Integer& ubound) {
  if (alpha < 2) throw Error(ErrorCode::InvalidArgument, "alpha must be at least 2");
  if (ubound < 1) throw Error(ErrorCode::InvalidArgument, "ubound must be at least 1");
  KnapsackInstance inst;
  inst.sense = Sense::LE;
  inst.b = ubound;
  for (Integer p = 1; p <= ubound; p *= alpha) {
    inst.a.push_back(p);
    inst.u.push_back(alpha - 1);
  }
  return inst;
}

Integer random_integer(std::mt19937_64& rng, const Integer& lo, const Integer& hi) {
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty random range");
  const Integer span = hi - lo;
  const std::size_t bits = mpz_sizeinbase(span.get_mpz_t(), 2);
  for (;;) {
    Integer r = 0;
    for (std::size_t have = 0; have < bits; have += 64) {
      Integer word(std::to_string(rng()), 10);
      r = (r << 64) | word;
    }
    Integer mask = (Integer(1) << bits) - 1;
    r &= mask;
    if (r <= span) return lo + r;
  }
}

IntVector random_superincreasing_weights(const IntVector& u, const RandomOptions& opts, std::mt19937_64& rng) {
  IntVector a(u.size());
  Integer prefix = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i == 0) {
      a[i] = random_integer(rng, 1, Integer(std::to_string(opts.max_a1), 10));
    } else {
      a[i] = prefix + random_integer(rng, 0, Integer(std::to_string(opts.max_slack), 10));
    }
    prefix += a[i] * u[i];
  }
  return a;
}

KnapsackInstance random_superincreasing(const RandomOptions& opts, std::mt19937_64& rng) {
  if (opts.n < 2) throw Error(ErrorCode::InvalidArgument, "random instances need n >= 2");
  if (opts.max_u < 1 || opts.max_a1 < 1) throw Error(ErrorCode::InvalidArgument, "bounds must be positive");
  KnapsackInstance inst;
  inst.sense = Sense::LE;
  inst.u.resize(opts.n);
  for (auto& v : inst.u) v = random_integer(rng, 1, Integer(std::to_string(opts.max_u), 10));
  inst.a = random_superincreasing_weights(inst.u, opts, rng);
  Integer lo = 0;
  for (std::size_t i = 0; i < opts.n; ++i) lo = std::max(lo, Integer(inst.a[i] * inst.u[i]));
  inst.b = random_integer(rng, lo, dot(inst.a, inst.u) - 1);
  return inst;
}

TwoSidedPair random_two_sided(const RandomOptions& opts, std::mt19937_64& rng) {
  TwoSidedPair pair;
  pair.le = random_superincreasing(opts, rng);
  pair.ge.sense = Sense::GE;
  pair.ge.u = pair.le.u;
  pair.ge.a = random_superincreasing_weights(pair.le.u, opts, rng);
  IntVector theta = greedy_vector(pair.le.a, pair.le.u, pair.le.b);
  pair.ge.b = random_integer(rng, 1, dot(pair.ge.a, theta));
  return pair;
}

bool in_mixed_set(const MixedInstance& mi, const IntVector& x, const Rational& y) {
  if (x.size() != mi.u.size()) throw Error(ErrorCode::LengthMismatch, "x has wrong dimension");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] > mi.u[i]) return false;
  }
  return y >= 0 && y <= mi.ub_cont && Rational(dot(mi.a, x)) + y <= mi.b;
}

bool MixedHull::contains(const RatVector& x, const Rational& y) const {
  RatVector z = x;
  z.push_back(y);
  if (z.size() != inst.u.size() + 1) throw Error(ErrorCode::LengthMismatch, "(x,y) has wrong dimension");
  return complete_point(system, z).has_value();
}

MixedHull mixed_hull_extended(const MixedInstance& mi) {
  const std::size_t n = mi.a.size();
  SuperincreasingCheck sc = is_superincreasing(mi.a, mi.u);
  if (!sc.ok) throw Error(ErrorCode::NotSuperincreasing, "(a,u) is not superincreasing", {*sc.violation});
  if (mi.ub_cont <= 0 || mi.b <= 0) throw Error(ErrorCode::NonpositiveEntry, "b and the continuous bound must be positive");
  if (mi.ub_cont > mi.b) throw Error(ErrorCode::InvalidArgument, "continuous bound exceeds b");

  MixedHull mh;
  mh.inst = mi;
  const Rational low = mi.b - mi.ub_cont;
  mh.floor_b = floor_of(mi.b);
  mh.floor_low = floor_of(low);
  mh.ceil_low = ceil_of(low);
  mh.theta_b = greedy_vector(mi.a, mi.u, mh.floor_b);
  mh.theta_low = greedy_vector(mi.a, mi.u, mh.floor_low);
  const Integer total = dot(mi.a, mi.u);
  if (mh.ceil_low > total) {
    throw Error(ErrorCode::EmptyIntersection, "ceil(b - ub_cont) exceeds a^T u");
  }
  IntVector gamma = mh.ceil_low <= 0 ? IntVector(n, 0) : minimal_packing(mi.a, mi.u, mh.ceil_low);

  const std::size_t dim = n + 1;
  IntVector ey(dim, 0);
  ey[n] = 1;
  auto y_rows = [&](HPolytope& p) {
    p.ineqs.push_back({ey, 0, Sense::GE, {TagKind::BoundLower, n}});
    p.ineqs.push_back(make_row(to_rational(ey), mi.ub_cont, Sense::LE, {TagKind::BoundUpper, n}));
  };

  mh.q2.dim = dim;
  for (const auto& r : hull_lex_le(make_profile(mi.u, mh.theta_low)).ineqs) mh.q2.ineqs.push_back(embed(r, dim, 0));
  y_rows(mh.q2);

  if (lex_cmp(gamma, mh.theta_b).result != LexResult::GT) {
    mh.gamma = gamma;
    HPolytope q1;
    q1.dim = dim;
    std::vector<LinearInequality> rows;
    for (const auto& r : hull_lex_le(make_profile(mi.u, mh.theta_b)).ineqs) rows.push_back(embed(r, dim, 0));
    for (const auto& r : hull_lex_ge(mi.u, gamma).ineqs) rows.push_back(embed(r, dim, 0));
    append_unique(q1, rows);
    y_rows(q1);
    RatVector cap = to_rational(mi.a);
    cap.emplace_back(1);
    q1.ineqs.push_back(make_row(cap, mi.b, Sense::LE, {TagKind::Other, n}));
    mh.q1 = std::move(q1);
    mh.system = disjunctive_hull(*mh.q1, mh.q2);
  } else {
    mh.system = mh.q2;
  }
  return mh;
}

}  // namespace superknap
