#include "reference.hpp"

#include "superknap/apps.hpp"
#include "superknap/core.hpp"
#include "superknap/error.hpp"
#include "superknap/facets.hpp"
#include "superknap/greedy.hpp"
#include "superknap/oracle.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace superknap;
using ref::iv;

namespace {

HPolytope square(long side) {
  HPolytope p;
  p.dim = 2;
  p.ineqs = box_rows(iv({side, side}));
  return p;
}

PointCloud cloud_of(const std::vector<ref::Vec>& pts, std::size_t dim) {
  PointCloud c;
  c.dim = dim;
  for (const auto& p : pts) c.points.push_back(ref::to_int(p));
  return c;
}

}  // namespace

TEST(Enumerate, MatchesReference) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 60; ++k) {
    RandomOptions opts;
    opts.n = 2 + static_cast<std::size_t>(k % 5);
    KnapsackInstance inst = random_superincreasing(opts, rng);
    ref::Vec a = ref::from(inst.a), u = ref::from(inst.u);
    auto want = ref::knapsack_le(a, u, inst.b.get_si());
    PointCloud got = enumerate(inst);
    ASSERT_EQ(got.points.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) ASSERT_EQ(ref::from(got.points[i]), want[i]);

    inst.sense = Sense::GE;
    auto want_ge = ref::knapsack_ge(a, u, inst.b.get_si());
    PointCloud got_ge = enumerate(inst);
    ASSERT_EQ(got_ge.points.size(), want_ge.size());
    for (std::size_t i = 0; i < want_ge.size(); ++i) ASSERT_EQ(ref::from(got_ge.points[i]), want_ge[i]);
  }
}

TEST(Enumerate, GuardAndBoxSize) {
  EXPECT_EQ(box_size(iv({3, 5, 2, 1, 2})), 432);
  try {
    enumerate_box(iv({9, 9, 9}), [](const IntVector&) { return true; }, 999);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  EXPECT_EQ(enumerate_box(iv({9, 9, 9}), [](const IntVector&) { return true; }, 1000).points.size(), 1000u);
}

TEST(Enumerate, TwoSidedNeedsSameBox) {
  KnapsackInstance le{iv({1, 2}), iv({1, 1}), Integer(2), Sense::LE};
  KnapsackInstance ge{iv({1, 2}), iv({1, 2}), Integer(1), Sense::GE};
  EXPECT_THROW(enumerate_two_sided(le, ge), Error);
  ge.u = le.u;
  EXPECT_EQ(enumerate_two_sided(le, ge).points.size(), 2u);  // (1,0), (0,1)
}

TEST(BruteMax, ExampleAndEmpty) {
  KnapsackInstance inst{iv({2, 8, 46, 150, 310}), iv({3, 5, 2, 1, 2}), Integer(841), Sense::LE};
  MaxResult m = brute_max(enumerate(inst), RatVector(5, 1));
  EXPECT_EQ(m.value, 12);
  EXPECT_EQ(m.argmax, (std::vector<IntVector>{iv({3, 5, 2, 1, 1}), iv({3, 5, 2, 0, 2})}));
  PointCloud empty;
  empty.dim = 2;
  EXPECT_THROW(brute_max(empty, {1, 1}), Error);
}

TEST(Vertices, SquareAndTriangle) {
  VertexSet vs = vertices(square(2));
  ASSERT_EQ(vs.vertices.size(), 4u);
  EXPECT_EQ(vs.vertices[0].point, (RatVector{0, 0}));
  EXPECT_EQ(vs.vertices[3].point, (RatVector{2, 2}));

  HPolytope tri = square(2);
  tri.ineqs.push_back({iv({2, 2}), 3, Sense::LE, {}});
  std::set<RatVector> got;
  for (const auto& v : vertices(tri).vertices) got.insert(v.point);
  EXPECT_EQ(got, (std::set<RatVector>{{0, 0}, {Rational(3, 2), 0}, {0, Rational(3, 2)}}));
}

TEST(Vertices, EqualityRowsAndErrors) {
  HPolytope p = square(3);
  p.ineqs.push_back({iv({1, 1}), 3, Sense::EQ, {}});
  EXPECT_EQ(vertices(p).vertices.size(), 2u);

  HPolytope open;
  open.dim = 2;
  open.ineqs.push_back({iv({1, 0}), 0, Sense::GE, {TagKind::BoundLower, 0}});
  open.ineqs.push_back({iv({0, 1}), 0, Sense::GE, {TagKind::BoundLower, 1}});
  open.ineqs.push_back({iv({1, 1}), 4, Sense::LE, {}});
  try {
    vertices(open);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnboundedDetected);
  }

  VertexOptions small;
  small.max_dim = 1;
  try {
    vertices(square(1), small);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionTooLarge);
  }
}

TEST(ExtremePoints, SmallClouds) {
  auto sq = ref::box({2, 2});
  std::set<IntVector> got;
  for (const auto& p : extreme_points(cloud_of(sq, 2))) got.insert(p);
  EXPECT_EQ(got, (std::set<IntVector>{iv({0, 0}), iv({2, 0}), iv({0, 2}), iv({2, 2})}));

  // Three collinear points plus an apex.
  std::vector<ref::Vec> pts = {{0, 0}, {1, 1}, {2, 2}, {0, 2}};
  got.clear();
  for (const auto& p : extreme_points(cloud_of(pts, 2))) got.insert(p);
  EXPECT_EQ(got, (std::set<IntVector>{iv({0, 0}), iv({2, 2}), iv({0, 2})}));
}

TEST(AssertHull, AcceptsTrueHull) {
  KnapsackInstance inst{iv({2, 8, 46, 150, 310}), iv({3, 5, 2, 1, 2}), Integer(841), Sense::LE};
  ValidatedKnapsack vk = validate(inst);
  HullReport r = assert_integer_hull(hull_le(vk, greedy_solution(vk)), enumerate(inst));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cloud_size, 397u);
  EXPECT_EQ(r.cloud_rank, 5u);
  EXPECT_EQ(r.rows.size(), 3u);
}

// Each failure mode is reported: a missing row leaves fractional vertices,
// a cut removes points, and a redundant row is not a facet.
TEST(AssertHull, DetectsBrokenSystems) {
  KnapsackInstance inst{iv({2, 8, 46, 150, 310}), iv({3, 5, 2, 1, 2}), Integer(841), Sense::LE};
  ValidatedKnapsack vk = validate(inst);
  PointCloud cloud = enumerate(inst);
  HPolytope full = hull_le(vk, greedy_solution(vk));

  HPolytope missing = full;
  missing.ineqs.erase(missing.ineqs.begin());
  HullReport a = assert_integer_hull(missing, cloud);
  EXPECT_TRUE(a.points_ok());
  EXPECT_FALSE(a.vertices_ok());

  HPolytope cut = full;
  cut.ineqs.push_back({iv({1, 1, 1, 1, 1}), 11, Sense::LE, {}});
  HullReport b = assert_integer_hull(cut, cloud);
  EXPECT_FALSE(b.points_ok());

  HPolytope redundant = full;
  redundant.ineqs.push_back({iv({0, 0, 1, 1, 1}), 5, Sense::LE, {}});
  HullReport c = assert_integer_hull(redundant, cloud);
  EXPECT_TRUE(c.points_ok());
  EXPECT_TRUE(c.vertices_ok());
  EXPECT_FALSE(c.facets_ok());
}

// H-side vertices and V-side extreme points agree on knapsack hulls.
TEST(ExtremePoints, AgreeWithVerticesOfHull) {
  std::mt19937_64 rng(44);
  for (int k = 0; k < 25; ++k) {
    RandomOptions opts;
    opts.n = 2 + static_cast<std::size_t>(k % 4);
    ValidatedKnapsack vk = validate(random_superincreasing(opts, rng));
    std::set<RatVector> h, v;
    for (const auto& x : vertices(hull_le(vk, greedy_solution(vk))).vertices) h.insert(x.point);
    for (const auto& x : extreme_points(enumerate(vk.inst))) v.insert(to_rational(x));
    ASSERT_EQ(h, v);
  }
}
