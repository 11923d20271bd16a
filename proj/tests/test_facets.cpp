#include "reference.hpp"

#include "superknap/apps.hpp"
#include "superknap/core.hpp"
#include "superknap/error.hpp"
#include "superknap/facets.hpp"
#include "superknap/greedy.hpp"
#include "superknap/linalg.hpp"
#include "superknap/oracle.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace superknap;
using ref::iv;

namespace {

const IntVector kA = iv({2, 8, 46, 150, 310});
const IntVector kU = iv({3, 5, 2, 1, 2});

ValidatedKnapsack example(long b) { return validate({kA, kU, Integer(b), Sense::LE}); }

PointCloud cloud_of(const std::vector<ref::Vec>& pts, std::size_t dim) {
  PointCloud c;
  c.dim = dim;
  for (const auto& p : pts) c.points.push_back(ref::to_int(p));
  return c;
}

// The system is the integer hull of pts: all points satisfy it and every
// vertex is one of the points.
void expect_hull(const HPolytope& poly, const std::vector<ref::Vec>& pts) {
  std::set<ref::Vec> in(pts.begin(), pts.end());
  for (const auto& p : pts) ASSERT_TRUE(poly.contains(ref::to_int(p))) << to_string(ref::to_int(p));
  for (const auto& v : vertices(poly).vertices) {
    ASSERT_TRUE(is_integral(v.point)) << to_string(v.point);
    ASSERT_TRUE(in.count(ref::from(to_integer(v.point)))) << to_string(v.point);
  }
}

std::set<std::string> row_set(const HPolytope& p) {
  std::set<std::string> out;
  for (const auto& r : p.ineqs) out.insert(render(r) + " " + tag_name(r.tag));
  return out;
}

IntVector random_point(std::mt19937_64& rng, const IntVector& u) {
  IntVector x(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) x[i] = random_integer(rng, 0, u[i]);
  return x;
}

}  // namespace

TEST(Phi, ExampleCoefficients) {
  GreedyProfile gp = greedy_solution(example(841));
  EXPECT_EQ(phi(gp, 0, 1), 3);
  EXPECT_EQ(phi(gp, 0, 2), 9);
  EXPECT_EQ(phi(gp, 0, 3), 18);
  EXPECT_EQ(phi(gp, 0, 4), 18);
  EXPECT_EQ(phi(gp, 1, 2), 2);
  EXPECT_EQ(phi(gp, 1, 3), 4);
  EXPECT_EQ(phi(gp, 1, 4), 4);
  EXPECT_EQ(phi(gp, 2, 3), 1);
  EXPECT_EQ(phi(gp, 2, 4), 1);
  EXPECT_EQ(phi(gp, 3, 4), 0);
  EXPECT_EQ(phi_row(gp, 0), iv({0, 3, 9, 18, 18}));
  EXPECT_THROW(phi(gp, 2, 1), Error);
  EXPECT_THROW(phi(gp, 2, 2), Error);
}

TEST(Packing, ExampleRows) {
  GreedyProfile gp = greedy_solution(example(841));
  EXPECT_EQ(render(packing_inequality(gp, 0)), "x1 + 3x2 + 9x3 + 18x4 + 18x5 <= 72");
  EXPECT_EQ(render(packing_inequality(gp, 1)), "x2 + 2x3 + 4x4 + 4x5 <= 17");
  EXPECT_EQ(render(packing_inequality(gp, 2)), "x3 + x4 + x5 <= 4");
  LinearInequality top = packing_inequality(gp, 4);
  EXPECT_EQ(top.tag.kind, TagKind::BoundUpper);
  EXPECT_EQ(render(top), "x5 <= 2");
}

TEST(Packing, Example863Rows) {
  ValidatedKnapsack vk = example(863);
  HPolytope poly = hull_le(vk, greedy_solution(vk));
  std::vector<std::string> rows;
  for (const auto& r : poly.ineqs) {
    if (r.tag.kind == TagKind::Packing) rows.push_back(render(r));
  }
  // θ = (0,0,2,1,2) with support {3,4,5}: φ_1 = 3 and φ_2 = 5 on the support.
  EXPECT_EQ(rows, (std::vector<std::string>{"x1 + 3x3 + 3x4 + 3x5 <= 15", "x2 + 5x3 + 5x4 + 5x5 <= 25"}));
}

TEST(Hull, ExampleIsIntegerHull) {
  for (long b : {841L, 863L}) {
    ValidatedKnapsack vk = example(b);
    expect_hull(hull_le(vk, greedy_solution(vk)), ref::knapsack_le(ref::from(kA), ref::from(kU), b));
  }
}

TEST(Hull, RejectsMismatchedProfile) {
  ValidatedKnapsack vk = example(841);
  EXPECT_THROW(hull_le(vk, make_profile(iv({3, 5, 2, 1, 1}), iv({0, 3, 1, 1, 1}))), Error);
}

// conv{x ∈ [0,u] : x ⪯ θ} for arbitrary θ, including ones whose top
// coordinates are below the box.
TEST(Hull, ArbitraryLexBounds) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 80; ++k) {
    std::size_t n = 2 + static_cast<std::size_t>(k % 4);
    IntVector u(n);
    for (auto& ui : u) ui = random_integer(rng, 1, 3);
    IntVector theta = random_point(rng, u);
    ref::Vec t = ref::from(theta);
    auto pts = ref::filter(ref::box(ref::from(u)), [&](const ref::Vec& x) { return !ref::lex_less(t, x); });
    HPolytope le = hull_lex_le(make_profile(u, theta));
    expect_hull(le, pts);
    HullReport rep = assert_integer_hull(le, cloud_of(pts, n));
    ASSERT_TRUE(rep.passed()) << "theta " << to_string(theta);

    auto ge_pts = ref::filter(ref::box(ref::from(u)), [&](const ref::Vec& x) { return !ref::lex_less(x, t); });
    HPolytope ge = hull_lex_ge(u, theta);
    expect_hull(ge, ge_pts);
    ASSERT_TRUE(assert_integer_hull(ge, cloud_of(ge_pts, n)).passed()) << "gamma " << to_string(theta);
    ASSERT_EQ(row_set(ge), row_set(hull_lex_ge_direct(u, theta)));
  }
}

TEST(Hull, CoveringKnapsack) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 60; ++k) {
    RandomOptions opts;
    opts.n = 2 + static_cast<std::size_t>(k % 4);
    KnapsackInstance inst = random_superincreasing(opts, rng);
    inst.sense = Sense::GE;
    inst.b = random_integer(rng, 1, dot(inst.a, inst.u));
    ValidatedKnapsack vk = validate(inst);
    expect_hull(hull_ge(vk), ref::knapsack_ge(ref::from(inst.a), ref::from(inst.u), inst.b.get_si()));
    ASSERT_EQ(row_set(hull_ge(vk)), row_set(hull_ge(inst.a, inst.u, inst.b)));
  }
}

TEST(Hull, FrozenCoveringRows) {
  HPolytope ge = hull_ge(iv({1, 4, 25, 75, 160}), kU, Integer(250));
  std::vector<std::string> rows;
  for (const auto& r : ge.ineqs) {
    if (r.tag.kind == TagKind::GePacking) rows.push_back(render(r));
  }
  EXPECT_EQ(rows, (std::vector<std::string>{"x1 + 3x2 + 12x3 + 12x5 >= 24", "x2 + 3x3 + 3x5 >= 6", "x4 + x5 >= 2"}));
  EXPECT_EQ(big_phi(kU, iv({3, 3, 0, 1, 1}), 0, 2), 12);
  EXPECT_EQ(big_phi(kU, iv({3, 3, 0, 1, 1}), 1, 4), 3);
}

TEST(Certificate, ExampleRows) {
  ValidatedKnapsack vk = example(841);
  GreedyProfile gp = greedy_solution(vk);
  for (std::size_t j = 0; j < 3; ++j) {
    FacetCertificate fc = facet_certificate(vk, gp, j);
    ASSERT_EQ(fc.points.size(), 5u);
    LinearInequality row = packing_inequality(gp, j);
    for (const auto& p : fc.points) {
      EXPECT_TRUE(row.tight(to_rational(p)));
      EXPECT_LE(dot(kA, p), 841);
    }
    EXPECT_EQ(affine_rank(fc.points), 4u);
  }
}

TEST(Certificate, RandomInstances) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 100; ++k) {
    RandomOptions opts;
    opts.n = 2 + static_cast<std::size_t>(k % 6);
    opts.max_u = 4;
    ValidatedKnapsack vk = validate(random_superincreasing(opts, rng));
    GreedyProfile gp = greedy_solution(vk);
    ref::Vec a = ref::from(vk.a());
    for (std::size_t j = 0; j < vk.n(); ++j) {
      if (gp.theta[j] == gp.upper[j]) continue;
      FacetCertificate fc = facet_certificate(vk, gp, j);
      LinearInequality row = packing_inequality(gp, j);
      ASSERT_EQ(fc.points.size(), vk.n());
      for (const auto& p : fc.points) {
        ASSERT_TRUE(row.tight(to_rational(p)));
        ASSERT_LE(ref::dot(a, ref::from(p)), vk.b().get_si());
      }
      ASSERT_EQ(affine_rank(fc.points), vk.n() - 1);
    }
  }
}

TEST(LowerBounded, MatchesEnumeration) {
  std::mt19937_64 rng(31);
  std::size_t shifted = 0;
  for (int k = 0; k < 80; ++k) {
    RandomOptions opts;
    opts.n = 2 + static_cast<std::size_t>(k % 4);
    ValidatedKnapsack vk = validate(random_superincreasing(opts, rng));
    GreedyProfile gp = greedy_solution(vk);
    IntVector l = random_point(rng, vk.u());
    for (auto& li : l) li = li / 2;
    ref::Vec a = ref::from(vk.a()), lv = ref::from(l);
    if (ref::dot(a, lv) > vk.b().get_si()) {
      EXPECT_THROW(hull_lower_bounded(vk, gp, l), Error);
      continue;
    }
    bool below_theta = true;
    for (std::size_t i = 0; i < l.size(); ++i) below_theta = below_theta && l[i] <= gp.theta[i];
    shifted += !below_theta;
    auto pts = ref::filter(ref::knapsack_le(a, ref::from(vk.u()), vk.b().get_si()), [&](const ref::Vec& x) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < lv[i]) return false;
      }
      return true;
    });
    expect_hull(hull_lower_bounded(vk, gp, l), pts);
  }
  EXPECT_GT(shifted, 0u);
}
