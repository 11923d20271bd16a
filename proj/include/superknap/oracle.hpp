#pragma once

#include "superknap/core.hpp"
#include "superknap/linear_system.hpp"

#include <functional>
#include <string>
#include <vector>

namespace superknap {

inline constexpr std::size_t kDefaultGuard = 10'000'000;

struct PointCloud {
  std::size_t dim = 0;
  std::vector<IntVector> points;  // odometer order, first coordinate fastest
  std::string source;
};

// Box size Π(u_i + 1); throws TooLarge above the guard.
Integer box_size(const IntVector& u);
void check_guard(const IntVector& u, std::size_t guard);

PointCloud enumerate_box(const IntVector& u, const std::function<bool(const IntVector&)>& keep,
                         std::size_t guard = kDefaultGuard);

// Integer points of a knapsack, pruning on partial sums of a^T x.
PointCloud enumerate(const KnapsackInstance& inst, std::size_t guard = kDefaultGuard);

// Points of both knapsacks; boxes must coincide.
PointCloud enumerate_two_sided(const KnapsackInstance& le, const KnapsackInstance& ge,
                               std::size_t guard = kDefaultGuard);

struct MaxResult {
  Rational value;
  std::vector<IntVector> argmax;
};

MaxResult brute_max(const PointCloud& cloud, const RatVector& c);

struct Vertex {
  RatVector point;
  std::vector<std::size_t> tight_rows;
};

struct VertexSet {
  std::vector<Vertex> vertices;  // sorted by point
};

struct VertexOptions {
  std::size_t max_dim = 7;
  std::size_t max_rows = 40;
};

// Exact vertices by enumerating linearly independent tight row sets.
VertexSet vertices(const HPolytope& poly, const VertexOptions& opts = {});

struct RowCheck {
  std::size_t row = 0;
  bool facet = false;
  std::size_t tight_points = 0;
  std::size_t tight_rank = 0;
};

struct HullReport {
  std::size_t cloud_size = 0;
  std::size_t cloud_rank = 0;
  std::size_t vertex_count = 0;
  std::vector<IntVector> violating_points;
  std::vector<RatVector> bad_vertices;  // fractional or outside the cloud
  std::vector<RowCheck> rows;           // one per non-bound row

  bool points_ok() const { return violating_points.empty(); }
  bool vertices_ok() const { return bad_vertices.empty(); }
  bool facets_ok() const;
  bool passed() const { return points_ok() && vertices_ok() && facets_ok(); }
};

// (i) every cloud point satisfies poly, (ii) every vertex is integral and in
// the cloud, (iii) each non-bound row has tight points spanning a face of
// dimension one less than the cloud.
HullReport assert_integer_hull(const HPolytope& poly, const PointCloud& cloud, const VertexOptions& opts = {});

// Points of the cloud that are not convex combinations of the others.
std::vector<IntVector> extreme_points(const PointCloud& cloud);

}  // namespace superknap
