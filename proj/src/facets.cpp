#include "superknap/facets.hpp"

#include "superknap/error.hpp"
#include "superknap/linalg.hpp"

#include <algorithm>
#include <string>

namespace superknap {

namespace {

std::string one_based(std::size_t i) { return std::to_string(i + 1); }

void require_index(const GreedyProfile& gp, std::size_t j) {
  if (j >= gp.n()) throw Error(ErrorCode::InvalidArgument, "index " + one_based(j) + " out of range", {j});
}

IntVector complement(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::LengthMismatch, "vector lengths differ");
  IntVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
  return out;
}

}  // namespace

IntVector phi_row(const GreedyProfile& gp, std::size_t j) {
  require_index(gp, j);
  IntVector row(gp.n(), 0);
  std::optional<std::size_t> i = gp.next[j];
  Integer value = gp.upper[j] - gp.theta[j];
  while (i) {
    row[*i] = value;
    value *= gp.upper[*i] + 1 - gp.theta[*i];
    i = gp.next[*i];
  }
  return row;
}

Integer phi(const GreedyProfile& gp, std::size_t j, std::size_t i) {
  require_index(gp, j);
  if (i >= gp.n() || i <= j || !gp.in_support(i)) {
    throw Error(ErrorCode::IndexNotInSupportTail,
                "phi_" + one_based(j) + "(" + one_based(i) + ") needs i in I_j", {j, i});
  }
  Integer value = gp.upper[j] - gp.theta[j];
  for (std::size_t k : gp.support) {
    if (k > j && k < i) value *= gp.upper[k] + 1 - gp.theta[k];
  }
  return value;
}

LinearInequality packing_inequality(const GreedyProfile& gp, std::size_t j) {
  require_index(gp, j);
  LinearInequality row;
  row.sense = Sense::LE;
  if (gp.theta[j] == gp.upper[j]) {
    row.coeffs.assign(gp.n(), 0);
    row.coeffs[j] = 1;
    row.rhs = gp.upper[j];
    row.tag = {TagKind::BoundUpper, j};
    return row;
  }
  row.coeffs = phi_row(gp, j);
  row.coeffs[j] = 1;
  row.rhs = dot(row.coeffs, gp.theta);
  row.tag = {TagKind::Packing, j};
  return row;
}

HPolytope hull_lex_le(const GreedyProfile& gp) {
  HPolytope poly;
  poly.dim = gp.n();
  IntVector upper = gp.upper;
  for (std::size_t j = 0; j < gp.n(); ++j) {
    if (gp.theta[j] == gp.upper[j]) continue;
    // With nothing in the tail the packing row is just x_j ≤ θ_j.
    if (gp.next[j]) poly.ineqs.push_back(packing_inequality(gp, j));
    else upper[j] = gp.theta[j];
  }
  auto box = box_rows(upper);
  poly.ineqs.insert(poly.ineqs.end(), box.begin(), box.end());
  return poly;
}

HPolytope hull_lex_ge(const IntVector& u, const IntVector& gamma) {
  GreedyProfile mirrored = make_profile(u, complement(u, gamma));
  HPolytope le = hull_lex_le(mirrored);
  HPolytope poly;
  poly.dim = u.size();
  IntVector lower(u.size(), 0);
  for (const auto& row : le.ineqs) {
    if (row.tag.kind == TagKind::Packing) {
      // c·(u - x) ≤ r  ⇔  c·x ≥ c·u - r
      poly.ineqs.push_back(
          {row.coeffs, dot(row.coeffs, u) - row.rhs, Sense::GE, {TagKind::GePacking, row.tag.index}});
    } else if (row.tag.kind == TagKind::BoundUpper) {
      lower[row.tag.index] = u[row.tag.index] - row.rhs;
    }
  }
  auto box = box_rows(lower, u);
  poly.ineqs.insert(poly.ineqs.end(), box.begin(), box.end());
  return poly;
}

Integer big_phi(const IntVector& u, const IntVector& gamma, std::size_t j, std::size_t i) {
  if (u.size() != gamma.size()) throw Error(ErrorCode::LengthMismatch, "gamma and u differ in length");
  if (j >= u.size() || i >= u.size() || i <= j) {
    throw Error(ErrorCode::IndexNotInSupportTail, "Phi_" + one_based(j) + "(" + one_based(i) + ") needs i > j", {j, i});
  }
  Integer value = gamma[j];
  for (std::size_t k = j + 1; k < i; ++k) {
    if (gamma[k] <= u[k] - 1) value *= gamma[k] + 1;
  }
  return value;
}

HPolytope hull_lex_ge_direct(const IntVector& u, const IntVector& gamma) {
  const std::size_t n = u.size();
  HPolytope poly;
  poly.dim = n;
  IntVector lower(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (gamma[j] < 1) continue;
    bool empty_tail = true;
    for (std::size_t i = j + 1; i < n; ++i) empty_tail = empty_tail && gamma[i] > u[i] - 1;
    if (empty_tail) {
      lower[j] = gamma[j];
      continue;
    }
    LinearInequality row;
    row.coeffs.assign(n, 0);
    row.coeffs[j] = 1;
    row.rhs = gamma[j];
    for (std::size_t i = j + 1; i < n; ++i) {
      if (gamma[i] > u[i] - 1) continue;
      Integer f = big_phi(u, gamma, j, i);
      row.coeffs[i] = f;
      row.rhs += f * gamma[i];
    }
    row.sense = Sense::GE;
    row.tag = {TagKind::GePacking, j};
    poly.ineqs.push_back(std::move(row));
  }
  auto box = box_rows(lower, u);
  poly.ineqs.insert(poly.ineqs.end(), box.begin(), box.end());
  return poly;
}

HPolytope hull_le(const ValidatedKnapsack& vk, const GreedyProfile& gp) {
  if (vk.inst.sense != Sense::LE) throw Error(ErrorCode::InvalidArgument, "hull_le needs an LE instance");
  if (gp.upper != vk.inst.u) throw Error(ErrorCode::InvalidArgument, "profile does not match the instance box");
  return hull_lex_le(gp);
}

HPolytope hull_ge(const IntVector& w, const IntVector& u, const Integer& d) {
  return hull_lex_ge(u, minimal_packing(w, u, d));
}

HPolytope hull_ge(const ValidatedKnapsack& ge) { return hull_lex_ge(ge.inst.u, minimal_packing(ge)); }

FacetCertificate facet_certificate(const GreedyProfile& gp, std::size_t j) {
  require_index(gp, j);
  const std::size_t n = gp.n();
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::CertificateFailed, "row " + one_based(j) + ": " + why, {j});
  };
  if (gp.theta[j] >= gp.upper[j]) throw fail("theta_j = u_j, no packing facet");
  if (!gp.next[j]) throw fail("no support index above j");
  const std::size_t nj = *gp.next[j];

  FacetCertificate cert;
  cert.j = j;
  // Type 1: (0,…,0, θ_j, θ_{j+1}, …, θ_n)
  {
    IntVector x(n, 0);
    for (std::size_t i = j; i < n; ++i) x[i] = gp.theta[i];
    cert.points.push_back(std::move(x));
  }
  // Type 2: e_l + u_j e_j, θ_{next(j)} - 1 at next(j), θ above.
  for (std::size_t l = 0; l < j; ++l) {
    IntVector x(n, 0);
    x[l] = 1;
    x[j] = gp.upper[j];
    x[nj] = gp.theta[nj] - 1;
    for (std::size_t i = nj + 1; i < n; ++i) x[i] = gp.theta[i];
    cert.points.push_back(std::move(x));
  }
  // Types 3a and 3b for each i ∈ I_j.
  for (std::size_t i : gp.support_after(j)) {
    IntVector base(n, 0);
    base[j] = gp.upper[j];
    for (std::size_t k : gp.support_after(j)) {
      if (k < i) base[k] = gp.upper[k];
    }
    base[i] = gp.theta[i] - 1;
    for (std::size_t k = i + 1; k < n; ++k) base[k] = gp.theta[k];
    cert.points.push_back(base);
    std::size_t from = std::max(j, gp.prev[i].value_or(j));
    for (std::size_t l = from + 1; l < i; ++l) {
      if (gp.in_support(l)) continue;
      IntVector x = base;
      x[l] += 1;
      cert.points.push_back(std::move(x));
    }
  }

  if (cert.points.size() != n) {
    throw fail("built " + std::to_string(cert.points.size()) + " points, expected " + std::to_string(n));
  }
  const LinearInequality row = packing_inequality(gp, j);
  for (const auto& x : cert.points) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] < 0 || x[i] > gp.upper[i]) throw fail("point " + to_string(x) + " leaves the box");
    }
    if (!lex_leq(x, gp.theta)) throw fail("point " + to_string(x) + " is lex-larger than theta");
    if (!row.tight(to_rational(x))) throw fail("point " + to_string(x) + " is not tight");
  }
  std::size_t r = affine_rank(cert.points);
  if (r != n - 1) throw fail("affine rank " + std::to_string(r) + ", expected " + std::to_string(n - 1));
  return cert;
}

FacetCertificate facet_certificate(const ValidatedKnapsack& vk, const GreedyProfile& gp, std::size_t j) {
  FacetCertificate cert = facet_certificate(gp, j);
  for (const auto& x : cert.points) {
    if (dot(vk.inst.a, x) > vk.inst.b) {
      throw Error(ErrorCode::CertificateFailed, "point " + to_string(x) + " violates a^T x <= b", {j});
    }
  }
  return cert;
}

HPolytope hull_lower_bounded(const ValidatedKnapsack& vk, const GreedyProfile& gp, const IntVector& l) {
  const auto& a = vk.inst.a;
  const auto& u = vk.inst.u;
  if (l.size() != u.size()) throw Error(ErrorCode::LengthMismatch, "lower bound has wrong dimension");
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] < 0 || l[i] > u[i]) throw Error(ErrorCode::OutOfBox, "l_" + one_based(i) + " outside [0,u]", {i});
  }
  Integer residual = vk.inst.b - dot(a, l);
  if (residual < 0) throw Error(ErrorCode::InfeasibleShift, "a^T l exceeds b");

  if (std::all_of(l.begin(), l.end(), [](const Integer& li) { return li == 0; })) return hull_le(vk, gp);

  HPolytope poly;
  poly.dim = u.size();
  // y = x - l ranges over a superincreasing knapsack on [0, u - l].
  IntVector span = complement(u, l);
  GreedyProfile shifted = make_profile(span, greedy_vector(a, span, residual));
  HPolytope inner = hull_lex_le(shifted);
  for (auto row : inner.ineqs) {
    row.rhs += dot(row.coeffs, l);
    poly.ineqs.push_back(std::move(row));
  }
  return poly;
}

}  // namespace superknap
