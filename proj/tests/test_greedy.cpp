#include "reference.hpp"

#include "superknap/apps.hpp"
#include "superknap/core.hpp"
#include "superknap/error.hpp"
#include "superknap/greedy.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace superknap;
using ref::iv;

namespace {

const IntVector kA = iv({2, 8, 46, 150, 310});
const IntVector kU = iv({3, 5, 2, 1, 2});

ValidatedKnapsack example(long b) { return validate({kA, kU, Integer(b), Sense::LE}); }

}  // namespace

TEST(Greedy, ExampleCapacities) {
  GreedyProfile g = greedy_solution(example(841));
  EXPECT_EQ(g.theta, iv({0, 3, 1, 1, 2}));
  EXPECT_EQ(g.support, (std::vector<std::size_t>{1, 2, 3, 4}));
  EXPECT_EQ(max_capacity(example(841)), 840);

  GreedyProfile h = greedy_solution(example(863));
  EXPECT_EQ(h.theta, iv({0, 0, 2, 1, 2}));
  EXPECT_EQ(max_capacity(example(863)), 862);
}

TEST(Greedy, ProfileLinks) {
  GreedyProfile g = make_profile(iv({3, 5, 2, 1, 2}), iv({0, 3, 0, 1, 2}));
  EXPECT_EQ(g.support, (std::vector<std::size_t>{1, 3, 4}));
  EXPECT_FALSE(g.prev[1]);
  EXPECT_EQ(*g.prev[2], 1u);
  EXPECT_EQ(*g.next[0], 1u);
  EXPECT_EQ(*g.next[2], 3u);
  EXPECT_FALSE(g.next[4]);
  EXPECT_EQ(g.support_after(1), (std::vector<std::size_t>{3, 4}));
}

TEST(Greedy, ZeroWeightRejected) {
  EXPECT_THROW(greedy_vector(iv({1, 0}), iv({1, 1}), Integer(1)), Error);
}

TEST(Greedy, UniquenessWitness) {
  ValidatedKnapsack vk = example(863);
  PackingReport r = uniqueness(vk, greedy_solution(vk));
  EXPECT_FALSE(r.unique);
  ASSERT_TRUE(r.alternate);
  EXPECT_EQ(*r.alternate, iv({3, 5, 1, 1, 2}));
  EXPECT_EQ(*r.witness, 2u);
  EXPECT_TRUE(uniqueness(example(841), greedy_solution(example(841))).unique);
}

// θ is the lex-largest point of K, a^T θ is the maximum weight, and the
// uniqueness report matches the number of maximizers.
TEST(Greedy, MatchesBruteForce) {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 150; ++k) {
    RandomOptions opts;
    opts.n = 2 + static_cast<std::size_t>(k % 5);
    opts.max_slack = k % 3 == 0 ? 0 : 4;  // slack 0 makes ties likely
    ValidatedKnapsack vk = validate(random_superincreasing(opts, rng));
    GreedyProfile gp = greedy_solution(vk);
    ref::Vec a = ref::from(vk.a());
    auto pts = ref::knapsack_le(a, ref::from(vk.u()), vk.b().get_si());
    ASSERT_EQ(ref::from(gp.theta), ref::lex_max(pts));
    std::int64_t best = ref::max_weight(a, pts);
    ASSERT_EQ(max_capacity(vk), Integer(static_cast<long>(best)));
    std::size_t maximizers = 0;
    for (const auto& p : pts) maximizers += ref::dot(a, p) == best;
    PackingReport r = uniqueness(vk, gp);
    ASSERT_EQ(r.unique, maximizers == 1);
    if (r.alternate) {
      ASSERT_NE(*r.alternate, gp.theta);
      ASSERT_EQ(ref::dot(a, ref::from(*r.alternate)), best);
      ASSERT_LE(ref::dot(a, ref::from(*r.alternate)), vk.b().get_si());
    }
  }
}

TEST(MinimalPacking, FrozenValues) {
  EXPECT_EQ(minimal_packing(kA, kU, Integer(500)), iv({0, 5, 0, 1, 1}));
  EXPECT_EQ(minimal_packing(kA, kU, Integer(1)), iv({1, 0, 0, 0, 0}));
  EXPECT_EQ(minimal_packing(iv({1, 4, 25, 75, 160}), kU, Integer(250)), iv({3, 3, 0, 1, 1}));
  EXPECT_EQ(minimal_packing(iv({1, 4, 25, 75, 160}), kU, Integer(100)), iv({0, 0, 1, 1, 0}));
}

TEST(MinimalPacking, IsLexMinOfCoveringSet) {
  std::mt19937_64 rng(77);
  for (int k = 0; k < 150; ++k) {
    RandomOptions opts;
    opts.n = 2 + static_cast<std::size_t>(k % 5);
    KnapsackInstance inst = random_superincreasing(opts, rng);
    Integer total = dot(inst.a, inst.u);
    Integer d = random_integer(rng, 1, total);
    IntVector gamma = minimal_packing(inst.a, inst.u, d);
    auto pts = ref::knapsack_ge(ref::from(inst.a), ref::from(inst.u), d.get_si());
    ASSERT_EQ(ref::from(gamma), ref::lex_min(pts)) << "d=" << d.get_str();

    KnapsackInstance ge{inst.a, inst.u, d, Sense::GE};
    ASSERT_EQ(minimal_packing(validate(ge)), gamma);
  }
}
