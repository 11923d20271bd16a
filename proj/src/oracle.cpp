#include "superknap/oracle.hpp"

#include "superknap/error.hpp"
#include "superknap/linalg.hpp"
#include "superknap/lp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace superknap {

Integer box_size(const IntVector& u) {
  Integer p = 1;
  for (const auto& v : u) {
    if (v < 0) throw Error(ErrorCode::OutOfBox, "negative bound");
    p *= v + 1;
  }
  return p;
}

void check_guard(const IntVector& u, std::size_t guard) {
  Integer size = box_size(u);
  if (size > Integer(static_cast<unsigned long>(guard))) {
    throw Error(ErrorCode::TooLarge, "box has " + size.get_str() + " points, guard is " + std::to_string(guard));
  }
}

namespace {

// Depth-first odometer from the last coordinate down; `prune(k, x)` returns
// true when the partial assignment of coordinates k..n-1 cannot complete.
template <class Prune, class Keep>
void odometer(const IntVector& u, Prune prune, Keep keep, std::vector<IntVector>& out) {
  const std::size_t n = u.size();
  IntVector x(n, 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == 0) {
      if (keep(x)) out.push_back(x);
      return;
    }
    const std::size_t i = k - 1;
    for (Integer v = 0; v <= u[i]; ++v) {
      x[i] = v;
      int verdict = prune(i, x);
      if (verdict > 0) break;       // larger values only get worse
      if (verdict < 0) continue;    // larger values may still help
      self(self, i);
    }
    x[i] = 0;
  };
  rec(rec, n);
  // DFS emits the last coordinate slowest; reverse-lex sort gives the same
  // first-coordinate-fastest order deterministically.
  std::sort(out.begin(), out.end(), [](const IntVector& p, const IntVector& q) {
    return lex_cmp(p, q).result == LexResult::LT;
  });
}

void check_weights(const KnapsackInstance& inst) {
  if (inst.a.size() != inst.u.size()) throw Error(ErrorCode::LengthMismatch, "a and u differ in length");
  for (std::size_t i = 0; i < inst.n(); ++i) {
    if (inst.a[i] < 0) throw Error(ErrorCode::InvalidArgument, "enumeration needs nonnegative weights", {i});
  }
}

// suffix_max[i] = Σ_{k<i} a_k u_k, the most the unassigned prefix can add.
IntVector prefix_capacity(const KnapsackInstance& inst) {
  IntVector cap(inst.n() + 1, 0);
  for (std::size_t i = 0; i < inst.n(); ++i) cap[i + 1] = cap[i] + inst.a[i] * inst.u[i];
  return cap;
}

}  // namespace

PointCloud enumerate_box(const IntVector& u, const std::function<bool(const IntVector&)>& keep,
                         std::size_t guard) {
  check_guard(u, guard);
  PointCloud cloud;
  cloud.dim = u.size();
  cloud.source = "box" + to_string(u);
  odometer(u, [](std::size_t, const IntVector&) { return 0; }, keep, cloud.points);
  return cloud;
}

PointCloud enumerate(const KnapsackInstance& inst, std::size_t guard) {
  check_weights(inst);
  check_guard(inst.u, guard);
  const IntVector cap = prefix_capacity(inst);
  PointCloud cloud;
  cloud.dim = inst.n();
  cloud.source = std::string(inst.sense == Sense::LE ? "le" : "ge") + " knapsack b=" + inst.b.get_str();
  auto partial = [&](std::size_t i, const IntVector& x) {
    Integer s = 0;
    for (std::size_t k = i; k < x.size(); ++k) s += inst.a[k] * x[k];
    return s;
  };
  if (inst.sense == Sense::LE) {
    odometer(
        inst.u, [&](std::size_t i, const IntVector& x) { return partial(i, x) > inst.b ? 1 : 0; },
        [&](const IntVector& x) { return dot(inst.a, x) <= inst.b; }, cloud.points);
  } else {
    odometer(
        inst.u, [&](std::size_t i, const IntVector& x) { return partial(i, x) + cap[i] < inst.b ? -1 : 0; },
        [&](const IntVector& x) { return dot(inst.a, x) >= inst.b; }, cloud.points);
  }
  return cloud;
}

PointCloud enumerate_two_sided(const KnapsackInstance& le, const KnapsackInstance& ge, std::size_t guard) {
  check_weights(le);
  check_weights(ge);
  if (le.sense != Sense::LE || ge.sense != Sense::GE) throw Error(ErrorCode::InvalidArgument, "need an LE and a GE instance");
  if (le.u != ge.u) throw Error(ErrorCode::DifferentBoxes, "the two knapsacks use different boxes");
  check_guard(le.u, guard);
  const IntVector cap = prefix_capacity(ge);
  PointCloud cloud;
  cloud.dim = le.n();
  cloud.source = "two-sided b=" + le.b.get_str() + " d=" + ge.b.get_str();
  odometer(
      le.u,
      [&](std::size_t i, const IntVector& x) {
        Integer s = 0, t = 0;
        for (std::size_t k = i; k < x.size(); ++k) {
          s += le.a[k] * x[k];
          t += ge.a[k] * x[k];
        }
        if (s > le.b) return 1;
        return t + cap[i] < ge.b ? -1 : 0;
      },
      [&](const IntVector& x) { return dot(le.a, x) <= le.b && dot(ge.a, x) >= ge.b; }, cloud.points);
  return cloud;
}

MaxResult brute_max(const PointCloud& cloud, const RatVector& c) {
  if (cloud.points.empty()) throw Error(ErrorCode::EmptyCloud, "cannot maximize over an empty cloud");
  if (c.size() != cloud.dim) throw Error(ErrorCode::LengthMismatch, "objective has wrong dimension");
  MaxResult res;
  bool first = true;
  for (const auto& p : cloud.points) {
    Rational v = dot(p, c);
    if (first || v > res.value) {
      res.value = v;
      res.argmax.clear();
      first = false;
    }
    if (v == res.value) res.argmax.push_back(p);
  }
  return res;
}

namespace {

struct Echelon {
  // Fully reduced rows [coeffs | rhs] with their pivot columns.
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;

  // 1: added, 0: dependent and consistent, -1: dependent and inconsistent.
  int add(RatVector r) {
    const std::size_t d = r.size() - 1;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rational f = r[pivots[k]];
      if (f == 0) continue;
      for (std::size_t t = 0; t <= d; ++t) {
        if (rows[k][t] != 0) r[t] -= f * rows[k][t];
      }
    }
    std::size_t pc = 0;
    while (pc < d && r[pc] == 0) ++pc;
    if (pc == d) return r[d] == 0 ? 0 : -1;
    const Rational lead = r[pc];
    for (auto& v : r) v /= lead;
    for (auto& row : rows) {
      const Rational f = row[pc];
      if (f == 0) continue;
      for (std::size_t t = 0; t <= d; ++t) {
        if (r[t] != 0) row[t] -= f * r[t];
      }
    }
    rows.push_back(std::move(r));
    pivots.push_back(pc);
    return 1;
  }
};

void require_bounded(const HPolytope& poly) {
  for (std::size_t i = 0; i < poly.dim; ++i) {
    bool upper = false, lower = false;
    for (const auto& r : poly.ineqs) {
      std::size_t nz = 0;
      for (std::size_t j = 0; j < poly.dim; ++j) nz += r.coeffs[j] != 0 ? 1 : 0;
      if (nz != 1 || r.coeffs[i] == 0) continue;
      const bool pos = r.coeffs[i] > 0;
      if (r.sense == Sense::EQ) upper = lower = true;
      else if ((r.sense == Sense::LE) == pos) upper = true;
      else lower = true;
    }
    if (!upper || !lower) {
      throw Error(ErrorCode::UnboundedDetected, "coordinate " + std::to_string(i + 1) + " lacks an explicit bound row", {i});
    }
  }
}

}  // namespace

VertexSet vertices(const HPolytope& poly, const VertexOptions& opts) {
  const std::size_t d = poly.dim;
  if (d > opts.max_dim) throw Error(ErrorCode::DimensionTooLarge, "dimension " + std::to_string(d) + " exceeds " + std::to_string(opts.max_dim));
  if (poly.ineqs.size() > opts.max_rows) {
    throw Error(ErrorCode::DimensionTooLarge, std::to_string(poly.ineqs.size()) + " rows exceed " + std::to_string(opts.max_rows));
  }
  for (const auto& r : poly.ineqs) {
    if (r.coeffs.size() != d) throw Error(ErrorCode::LengthMismatch, "row has wrong dimension");
  }
  require_bounded(poly);

  std::vector<RatVector> aug;
  aug.reserve(poly.ineqs.size());
  for (const auto& r : poly.ineqs) {
    RatVector v = to_rational(r.coeffs);
    v.emplace_back(r.rhs);
    aug.push_back(std::move(v));
  }

  Echelon base;
  std::vector<std::size_t> free_rows;
  for (std::size_t k = 0; k < poly.ineqs.size(); ++k) {
    if (poly.ineqs[k].sense != Sense::EQ) {
      free_rows.push_back(k);
      continue;
    }
    if (base.add(aug[k]) < 0) return {};
  }

  std::set<RatVector> found;
  const std::size_t m = free_rows.size();
  auto rec = [&](auto&& self, const Echelon& cur, std::size_t start) -> void {
    const std::size_t need = d - cur.rows.size();
    if (need == 0) {
      RatVector x(d);
      for (std::size_t k = 0; k < cur.rows.size(); ++k) x[cur.pivots[k]] = cur.rows[k][d];
      if (poly.contains(x)) found.insert(std::move(x));
      return;
    }
    for (std::size_t t = start; t + need <= m; ++t) {
      Echelon next = cur;
      if (next.add(aug[free_rows[t]]) != 1) continue;
      self(self, next, t + 1);
    }
  };
  rec(rec, base, 0);

  VertexSet out;
  out.vertices.reserve(found.size());
  for (const auto& x : found) {
    Vertex v;
    v.point = x;
    for (std::size_t k = 0; k < poly.ineqs.size(); ++k) {
      if (poly.ineqs[k].tight(x)) v.tight_rows.push_back(k);
    }
    out.vertices.push_back(std::move(v));
  }
  return out;
}

bool HullReport::facets_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowCheck& r) { return r.facet; });
}

HullReport assert_integer_hull(const HPolytope& poly, const PointCloud& cloud, const VertexOptions& opts) {
  HullReport rep;
  rep.cloud_size = cloud.points.size();
  std::vector<RatVector> qpoints;
  qpoints.reserve(cloud.points.size());
  for (const auto& p : cloud.points) qpoints.push_back(to_rational(p));
  rep.cloud_rank = affine_rank(qpoints);

  for (std::size_t k = 0; k < qpoints.size(); ++k) {
    if (!poly.contains(qpoints[k])) rep.violating_points.push_back(cloud.points[k]);
  }

  std::set<IntVector> members(cloud.points.begin(), cloud.points.end());
  VertexSet vs = vertices(poly, opts);
  rep.vertex_count = vs.vertices.size();
  for (const auto& v : vs.vertices) {
    if (!is_integral(v.point) || !members.count(to_integer(v.point))) rep.bad_vertices.push_back(v.point);
  }

  for (std::size_t k = 0; k < poly.ineqs.size(); ++k) {
    const auto& row = poly.ineqs[k];
    if (row.sense == Sense::EQ) continue;
    if (row.tag.kind == TagKind::BoundLower || row.tag.kind == TagKind::BoundUpper ||
        row.tag.kind == TagKind::Fixed) {
      continue;
    }
    RowCheck rc;
    rc.row = k;
    std::vector<RatVector> tight;
    for (const auto& q : qpoints) {
      if (row.tight(q)) tight.push_back(q);
    }
    rc.tight_points = tight.size();
    rc.tight_rank = affine_rank(tight);
    rc.facet = !tight.empty() && rep.cloud_rank >= 1 && rc.tight_rank + 1 == rep.cloud_rank;
    rep.rows.push_back(rc);
  }
  return rep;
}

std::vector<IntVector> extreme_points(const PointCloud& cloud) {
  std::set<IntVector> members(cloud.points.begin(), cloud.points.end());
  std::vector<IntVector> out;
  const std::size_t d = cloud.dim;
  for (std::size_t idx = 0; idx < cloud.points.size(); ++idx) {
    const IntVector& p = cloud.points[idx];
    // Midpoint of p ± e_i or p ± (e_i - e_j) inside the cloud rules p out.
    bool midpoint = false;
    for (std::size_t i = 0; i < d && !midpoint; ++i) {
      for (std::size_t j = i; j < d && !midpoint; ++j) {
        for (int sj : {0, 1, -1}) {
          if (j == i && sj != 0) continue;
          IntVector lo = p, hi = p;
          lo[i] -= 1;
          hi[i] += 1;
          if (j != i) {
            lo[j] += sj;
            hi[j] -= sj;
          }
          if (members.count(lo) && members.count(hi)) {
            midpoint = true;
            break;
          }
        }
      }
    }
    if (midpoint) continue;
    // p ∈ conv(cloud \ {p}) ⇔ λ ≥ 0, Σλ = 1, Σλ_q q = p is feasible.
    std::vector<LpRow> rows(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      rows[i].sense = Sense::EQ;
      rows[i].rhs = i < d ? Rational(p[i]) : Rational(1);
    }
    for (std::size_t k = 0; k < cloud.points.size(); ++k) {
      if (k == idx) continue;
      for (std::size_t i = 0; i < d; ++i) rows[i].coeffs.emplace_back(cloud.points[k][i]);
      rows[d].coeffs.emplace_back(1);
    }
    const std::size_t nv = cloud.points.size() - 1;
    if (nv == 0 || lp_feasible(rows, nv).status != LpStatus::Optimal) out.push_back(p);
  }
  return out;
}

}  // namespace superknap
