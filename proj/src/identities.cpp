#include "superknap/identities.hpp"

#include "superknap/error.hpp"
#include "superknap/facets.hpp"

#include <type_traits>

namespace superknap {

namespace {

std::string at(const char* what, std::size_t j, std::size_t i) {
  return std::string(what) + " fails at j=" + std::to_string(j + 1) + ", i=" + std::to_string(i + 1);
}

template <class T>
void expect_equal(IdentityReport& rep, const T& lhs, const std::type_identity_t<T>& rhs, const std::string& where) {
  ++rep.checked;
  if (lhs != rhs) rep.failures.push_back(where + " (" + lhs.get_str() + " vs " + rhs.get_str() + ")");
}

std::vector<std::size_t> tail_set(const IntVector& u, const IntVector& gamma, std::size_t j) {
  std::vector<std::size_t> out;
  for (std::size_t i = j + 1; i < u.size(); ++i) {
    if (gamma[i] <= u[i] - 1) out.push_back(i);
  }
  return out;
}

}  // namespace

void IdentityReport::merge(const IdentityReport& other) {
  checked += other.checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

IdentityReport check_phi_observation(const GreedyProfile& gp) {
  IdentityReport rep;
  for (std::size_t j = 0; j + 1 < gp.n(); ++j) {
    IntVector row = phi_row(gp, j);
    Integer running = gp.upper[j] - gp.theta[j];
    for (std::size_t i : gp.support_after(j)) {
      expect_equal(rep, row[i], phi(gp, j, i), at("closed form vs recurrence", j, i));
      expect_equal(rep, row[i], running, at("prefix-sum form", j, i));
      if (gp.next[i]) {
        Integer lhs = row[*gp.next[i]] - row[i];
        Integer rhs = row[i] * (gp.upper[i] - gp.theta[i]);
        expect_equal(rep, lhs, rhs, at("successor step", j, i));
      }
      running += row[i] * (gp.upper[i] - gp.theta[i]);
    }
  }
  return rep;
}

IdentityReport check_phi_product(const GreedyProfile& gp) {
  IdentityReport rep;
  const std::size_t n = gp.n();
  std::vector<IntVector> rows(n);
  for (std::size_t k = 0; k < n; ++k) rows[k] = phi_row(gp, k);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    auto tail = gp.support_after(j);
    for (std::size_t a = 0; a < tail.size(); ++a) {
      for (std::size_t b = a + 1; b < tail.size(); ++b) {
        const std::size_t s = tail[a], i = tail[b];
        Integer factor = 1;
        for (std::size_t c = a; c < b; ++c) factor += rows[tail[c]][i];
        expect_equal(rep, rows[j][i], rows[j][s] * factor, at("product identity", j, i));
      }
    }
  }
  return rep;
}

IdentityReport check_phi_telescoping(const GreedyProfile& gp, const RatVector& x, const RatVector& z,
                                     const Rational& e) {
  const std::size_t n = gp.n();
  if (x.size() != n || z.size() != n) throw Error(ErrorCode::LengthMismatch, "identity inputs have wrong dimension");
  IdentityReport rep;
  const std::size_t last = n - 1;
  std::vector<IntVector> rows(n);
  for (std::size_t k = 0; k < n; ++k) rows[k] = phi_row(gp, k);
  auto term = [&](std::size_t i) -> Rational { return x[i] - z[i] - Rational(gp.theta[i]) * e; };
  for (std::size_t j = 0; j < last; ++j) {
    std::vector<std::size_t> tail;
    for (auto i : gp.support_after(j)) {
      if (i != last) tail.push_back(i);
    }
    for (std::size_t a = 0; a < tail.size(); ++a) {
      Rational lhs = 0, inner = 0;
      for (std::size_t b = a; b < tail.size(); ++b) {
        const std::size_t i = tail[b];
        lhs += Rational(rows[j][i]) * term(i);
        Rational bracket = term(i);
        for (auto k : gp.support_after(i)) {
          if (k != last) bracket += Rational(rows[i][k]) * term(k);
        }
        inner += bracket;
      }
      expect_equal(rep, lhs, Rational(rows[j][tail[a]]) * inner, at("telescoping identity", j, tail[a]));
    }
  }
  return rep;
}

IdentityReport check_big_phi_telescoping(const IntVector& u, const IntVector& gamma, const RatVector& z,
                                         const Rational& e) {
  const std::size_t n = u.size();
  if (gamma.size() != n || z.size() != n) throw Error(ErrorCode::LengthMismatch, "identity inputs have wrong dimension");
  IdentityReport rep;
  const std::size_t last = n - 1;
  for (std::size_t j = 0; j < last; ++j) {
    std::vector<std::size_t> tail;
    for (auto i : tail_set(u, gamma, j)) {
      if (i != last) tail.push_back(i);
    }
    for (std::size_t a = 0; a < tail.size(); ++a) {
      Rational lhs = 0, inner = 0;
      for (std::size_t b = a; b < tail.size(); ++b) {
        const std::size_t i = tail[b];
        lhs += Rational(big_phi(u, gamma, j, i)) * (Rational(gamma[i]) * e - z[i]);
        Rational bracket = e * Rational(big_phi(u, gamma, i, last)) - z[i];
        for (auto k : tail_set(u, gamma, i)) {
          if (k != last) bracket -= Rational(big_phi(u, gamma, i, k)) * z[k];
        }
        inner += bracket;
      }
      expect_equal(rep, lhs, Rational(big_phi(u, gamma, j, tail[a])) * inner,
                   at("Phi telescoping identity", j, tail[a]));
    }
  }
  return rep;
}

IdentityReport check_h_equals_big_phi(const IntVector& u, const IntVector& gamma) {
  const std::size_t n = u.size();
  IdentityReport rep;
  const std::size_t last = n - 1;
  for (std::size_t j = 0; j < last; ++j) {
    if (gamma[j] < 1) continue;
    Integer target = big_phi(u, gamma, j, last);
    Integer h = gamma[j];
    auto tail = tail_set(u, gamma, j);
    for (auto i : tail) {
      if (i != last) h += big_phi(u, gamma, j, i) * gamma[i];
    }
    expect_equal(rep, h, target, at("h_j = Phi_j(n)", j, last));
    for (auto k : tail) {
      if (k == last) continue;
      Integer alt = big_phi(u, gamma, j, k) * (gamma[k] + 1);
      for (auto i : tail_set(u, gamma, k)) {
        if (i != last) alt += big_phi(u, gamma, j, i) * gamma[i];
      }
      expect_equal(rep, alt, target, at("shifted h_j form", j, k));
    }
  }
  return rep;
}

}  // namespace superknap
