#include "superknap/lp.hpp"

#include "superknap/error.hpp"

#include <optional>

namespace superknap {

namespace {

struct Tableau {
  std::vector<RatVector> t;  // m rows, cols + 1 (last = rhs)
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rational p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k == r || t[k][c] == 0) continue;
      Rational f = t[k][c];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (t[r][j] != 0) t[k][j] -= f * t[r][j];
      }
    }
    basis[r] = c;
  }

  // Maximizes obj over the current basis; columns with allowed[j] false
  // never enter. Returns false when unbounded.
  bool run(const RatVector& obj, const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols && !enter; ++j) {
        if (!allowed[j]) continue;
        Rational d = obj[j];
        for (std::size_t i = 0; i < t.size(); ++i) {
          if (t[i][j] != 0) d -= obj[basis[i]] * t[i][j];
        }
        if (d > 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][*enter] <= 0) continue;
        Rational ratio = t[i][cols] / t[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

LpResult lp_maximize(const std::vector<LpRow>& rows, const RatVector& c) {
  const std::size_t n = c.size();
  const std::size_t m = rows.size();
  std::size_t slacks = 0, artificials = 0;
  for (const auto& r : rows) {
    if (r.coeffs.size() != n) throw Error(ErrorCode::LengthMismatch, "LP row has wrong dimension");
    bool flip = r.rhs < 0;
    Sense s = r.sense;
    if (flip && s != Sense::EQ) s = (s == Sense::LE) ? Sense::GE : Sense::LE;
    if (s != Sense::EQ) ++slacks;
    if (s != Sense::LE) ++artificials;
  }
  Tableau tab;
  tab.cols = n + slacks + artificials;
  tab.t.assign(m, RatVector(tab.cols + 1, 0));
  tab.basis.assign(m, 0);
  std::size_t next_slack = n, next_art = n + slacks;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& r = rows[i];
    Rational sign = r.rhs < 0 ? -1 : 1;
    Sense s = r.sense;
    if (sign < 0 && s != Sense::EQ) s = (s == Sense::LE) ? Sense::GE : Sense::LE;
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = sign * r.coeffs[j];
    tab.t[i][tab.cols] = sign * r.rhs;
    if (s == Sense::LE) {
      tab.t[i][next_slack] = 1;
      tab.basis[i] = next_slack++;
    } else {
      if (s == Sense::GE) tab.t[i][next_slack++] = -1;
      tab.t[i][next_art] = 1;
      tab.basis[i] = next_art++;
    }
  }
  const std::size_t first_art = n + slacks;

  std::vector<bool> allowed(tab.cols, true);
  if (artificials > 0) {
    RatVector phase1(tab.cols, 0);
    for (std::size_t j = first_art; j < tab.cols; ++j) phase1[j] = -1;
    tab.run(phase1, allowed);
    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis[i] >= first_art) infeas += tab.t[i][tab.cols];
    }
    if (infeas != 0) return {LpStatus::Infeasible, 0, {}};
    // Drive zero-level artificials out of the basis, dropping redundant rows.
    for (std::size_t i = 0; i < tab.t.size();) {
      if (tab.basis[i] < first_art) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_art && !col; ++j) {
        if (tab.t[i][j] != 0) col = j;
      }
      if (col) {
        tab.pivot(i, *col);
        ++i;
      } else {
        tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
        tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (std::size_t j = first_art; j < tab.cols; ++j) allowed[j] = false;
  }
  RatVector obj(tab.cols, 0);
  for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
  if (!tab.run(obj, allowed)) return {LpStatus::Unbounded, 0, {}};
  LpResult res;
  res.status = LpStatus::Optimal;
  res.x.assign(n, 0);
  for (std::size_t i = 0; i < tab.t.size(); ++i) {
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][tab.cols];
  }
  res.value = dot(c, res.x);
  return res;
}

LpResult lp_feasible(const std::vector<LpRow>& rows, std::size_t nvars) {
  return lp_maximize(rows, RatVector(nvars, 0));
}

std::vector<LpRow> lp_rows(const HPolytope& poly) {
  std::vector<LpRow> rows;
  rows.reserve(poly.ineqs.size());
  for (const auto& r : poly.ineqs) rows.push_back({to_rational(r.coeffs), r.sense, Rational(r.rhs)});
  return rows;
}

std::vector<LpRow> fix_variables(const std::vector<LpRow>& rows, const std::vector<std::size_t>& fixed,
                                 const RatVector& values) {
  if (fixed.size() != values.size()) throw Error(ErrorCode::LengthMismatch, "fixed values mismatch");
  std::vector<LpRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<bool> is_fixed(r.coeffs.size(), false);
    LpRow q;
    q.sense = r.sense;
    q.rhs = r.rhs;
    for (std::size_t k = 0; k < fixed.size(); ++k) {
      is_fixed[fixed[k]] = true;
      q.rhs -= r.coeffs[fixed[k]] * values[k];
    }
    for (std::size_t j = 0; j < r.coeffs.size(); ++j) {
      if (!is_fixed[j]) q.coeffs.push_back(r.coeffs[j]);
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::optional<RatVector> complete_point(const HPolytope& poly, const RatVector& x) {
  if (x.size() > poly.dim) throw Error(ErrorCode::LengthMismatch, "prefix longer than the system");
  std::vector<std::size_t> fixed(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) fixed[i] = i;
  auto rows = fix_variables(lp_rows(poly), fixed, x);
  const std::size_t rest = poly.dim - x.size();
  if (rest == 0) {
    for (const auto& r : rows) {
      bool ok = r.sense == Sense::LE ? 0 <= r.rhs : r.sense == Sense::GE ? 0 >= r.rhs : r.rhs == 0;
      if (!ok) return std::nullopt;
    }
    return x;
  }
  LpResult res = lp_feasible(rows, rest);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  RatVector full = x;
  full.insert(full.end(), res.x.begin(), res.x.end());
  if (!poly.contains(full)) throw Error(ErrorCode::Internal, "LP completion violates the system");
  return full;
}

}  // namespace superknap
