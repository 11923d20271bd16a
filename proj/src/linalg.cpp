#include "superknap/linalg.hpp"

#include "superknap/error.hpp"

namespace superknap {

std::size_t rank(std::vector<RatVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  // Incremental elimination so that full column rank stops the scan early.
  std::vector<RatVector> basis;
  std::vector<std::size_t> pivots;
  for (auto& r : rows) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Rational f = r[pivots[k]];
      if (f == 0) continue;
      for (std::size_t t = 0; t < cols; ++t) {
        if (basis[k][t] != 0) r[t] -= f * basis[k][t];
      }
    }
    std::size_t pc = 0;
    while (pc < cols && r[pc] == 0) ++pc;
    if (pc == cols) continue;
    const Rational lead = r[pc];
    for (auto& v : r) v /= lead;
    basis.push_back(std::move(r));
    pivots.push_back(pc);
    if (basis.size() == cols) break;
  }
  return basis.size();
}

std::size_t affine_rank(const std::vector<RatVector>& points) {
  if (points.size() <= 1) return 0;
  std::vector<RatVector> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t k = 1; k < points.size(); ++k) {
    RatVector d(points[k].size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = points[k][i] - points[0][i];
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

std::size_t affine_rank(const std::vector<IntVector>& points) {
  std::vector<RatVector> q;
  q.reserve(points.size());
  for (const auto& p : points) q.push_back(to_rational(p));
  return affine_rank(q);
}

std::optional<RatVector> solve_square(std::vector<RatVector> a, RatVector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorCode::LengthMismatch, "solve_square: shape mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == c || a[k][c] == 0) continue;
      Rational f = a[k][c] / a[c][c];
      for (std::size_t t = c; t < n; ++t) a[k][t] -= f * a[c][t];
      b[k] -= f * b[c];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace superknap
