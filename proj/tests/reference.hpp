#pragma once

// Plain int64 brute force used as an independent check on the library.

#include "superknap/types.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ref {

using Vec = std::vector<std::int64_t>;

inline Vec from(const superknap::IntVector& v) {
  Vec out;
  for (const auto& z : v) out.push_back(z.get_si());
  return out;
}

inline superknap::IntVector to_int(const Vec& v) {
  superknap::IntVector out;
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

inline superknap::IntVector iv(std::initializer_list<long> xs) {
  superknap::IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline std::int64_t dot(const Vec& a, const Vec& x) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

// Every point of [0,u].
inline std::vector<Vec> box(const Vec& u) {
  std::vector<Vec> out;
  Vec x(u.size(), 0);
  while (true) {
    out.push_back(x);
    std::size_t i = 0;
    while (i < u.size() && x[i] == u[i]) x[i++] = 0;
    if (i == u.size()) break;
    ++x[i];
  }
  return out;
}

inline std::vector<Vec> filter(const std::vector<Vec>& pts, const std::function<bool(const Vec&)>& keep) {
  std::vector<Vec> out;
  for (const auto& p : pts) {
    if (keep(p)) out.push_back(p);
  }
  return out;
}

inline std::vector<Vec> knapsack_le(const Vec& a, const Vec& u, std::int64_t b) {
  return filter(box(u), [&](const Vec& x) { return dot(a, x) <= b; });
}

inline std::vector<Vec> knapsack_ge(const Vec& a, const Vec& u, std::int64_t d) {
  return filter(box(u), [&](const Vec& x) { return dot(a, x) >= d; });
}

// x before y in the order that compares the highest index first.
inline bool lex_less(const Vec& x, const Vec& y) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] < y[i];
  }
  return false;
}

inline Vec lex_max(const std::vector<Vec>& pts) { return *std::max_element(pts.begin(), pts.end(), lex_less); }
inline Vec lex_min(const std::vector<Vec>& pts) { return *std::min_element(pts.begin(), pts.end(), lex_less); }

inline std::int64_t max_weight(const Vec& a, const std::vector<Vec>& pts) {
  std::int64_t best = INT64_MIN;
  for (const auto& p : pts) best = std::max(best, dot(a, p));
  return best;
}

}  // namespace ref
