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

const KnapsackInstance kExample{iv({2, 8, 46, 150, 310}), iv({3, 5, 2, 1, 2}), Integer(841), Sense::LE};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Internal;
}

}  // namespace

TEST(Types, FloorAndCeil) {
  EXPECT_EQ(floor_div(Integer(7), Integer(2)), 3);
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), -4);
  EXPECT_EQ(floor_of(Rational(-1, 3)), -1);
  EXPECT_EQ(ceil_of(Rational(-1, 3)), 0);
  EXPECT_EQ(ceil_of(Rational(5)), 5);
  EXPECT_EQ(code_of([] { floor_div(Integer(1), Integer(0)); }), ErrorCode::ZeroWeight);
}

TEST(Types, ParseRational) {
  EXPECT_EQ(parse_rational("841.5"), Rational(1683, 2));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("12"), Rational(12));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(code_of([] { parse_rational("1/0"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_integer("4x"); }), ErrorCode::ParseError);
  EXPECT_EQ(to_string(iv({0, 3, 1, 1, 2})), "(0,3,1,1,2)");
}

TEST(Superincreasing, ExampleAndViolation) {
  EXPECT_TRUE(is_superincreasing(kExample.a, kExample.u).ok);
  SuperincreasingCheck bad = is_superincreasing(iv({2, 8, 40, 150, 310}), iv({1, 5, 4, 1, 2}));
  ASSERT_FALSE(bad.ok);
  // 2·1 + 8·5 = 42 > 40 = a_3
  EXPECT_EQ(*bad.violation, 1u);
}

TEST(Superincreasing, MatchesPrefixSums) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    ref::Vec a, u;
    for (int i = 0; i < 5; ++i) {
      a.push_back(1 + static_cast<std::int64_t>(rng() % 40));
      u.push_back(1 + static_cast<std::int64_t>(rng() % 3));
    }
    bool expect_ok = true;
    std::int64_t prefix = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      prefix += a[i] * u[i];
      if (prefix > a[i + 1]) expect_ok = false;
    }
    EXPECT_EQ(is_superincreasing(ref::to_int(a), ref::to_int(u)).ok, expect_ok);
  }
}

TEST(Lex, PivotIsHighestDifference) {
  LexOrdering o = lex_cmp(iv({5, 0, 1}), iv({0, 1, 1}));
  EXPECT_EQ(o.result, LexResult::LT);
  EXPECT_EQ(*o.pivot, 1u);
  EXPECT_EQ(lex_cmp(iv({1, 2}), iv({1, 2})).result, LexResult::EQ);
  EXPECT_FALSE(lex_cmp(iv({1, 2}), iv({1, 2})).pivot);
  EXPECT_EQ(lex_cmp(RatVector{Rational(1, 2), 1}, RatVector{0, 1}).result, LexResult::GT);
}

TEST(Lex, AgreesWithReference) {
  for (const auto& x : ref::box({2, 2, 2})) {
    for (const auto& y : ref::box({2, 2, 2})) {
      EXPECT_EQ(lex_cmp(ref::to_int(x), ref::to_int(y)).result == LexResult::LT, ref::lex_less(x, y));
    }
  }
}

TEST(Validate, ErrorOrder) {
  KnapsackInstance k = kExample;
  k.u.pop_back();
  EXPECT_EQ(code_of([&] { validate(k); }), ErrorCode::LengthMismatch);

  k = kExample;
  k.a[2] = 0;
  k.a[0] = 1000;  // also breaks superincreasing; positivity is checked first
  EXPECT_EQ(code_of([&] { validate(k); }), ErrorCode::NonpositiveEntry);

  k = kExample;
  k.b = 0;
  EXPECT_EQ(code_of([&] { validate(k); }), ErrorCode::NonpositiveEntry);

  k = kExample;
  k.b = 300;
  try {
    validate(k);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleBound);
    EXPECT_EQ(e.indices(), std::vector<std::size_t>{4});
  }

  k = kExample;
  k.a[2] = 40;
  EXPECT_EQ(code_of([&] { validate(k); }), ErrorCode::NotSuperincreasing);
}

TEST(Validate, TighteningCanRestoreSuperincreasing) {
  // u_1 = 10 violates 2·10 > 8, but b = 9 caps x_1 at 4 and 2·4 ≤ 8.
  KnapsackInstance k{iv({2, 8}), iv({10, 1}), Integer(9), Sense::LE};
  ValidatedKnapsack vk = validate(k);
  EXPECT_TRUE(vk.tightened);
  EXPECT_EQ(vk.u(), iv({4, 1}));
  EXPECT_EQ(vk.original_u, iv({10, 1}));
  EXPECT_TRUE(vk.nontrivial);
}

TEST(Validate, TrivialAndGe) {
  KnapsackInstance k = kExample;
  k.b = 1000;
  EXPECT_FALSE(validate(k).nontrivial);

  KnapsackInstance ge = kExample;
  ge.sense = Sense::GE;
  ge.b = 500;
  ValidatedKnapsack vg = validate(ge);
  EXPECT_FALSE(vg.tightened);
  ge.b = 10000;
  EXPECT_EQ(code_of([&] { validate(ge); }), ErrorCode::Infeasible);
  EXPECT_EQ(code_of([&] { tighten_bounds(ge); }), ErrorCode::InvalidArgument);
}

TEST(Membership, ExampleBoxCounts) {
  ValidatedKnapsack vk = validate(kExample);
  IntVector theta = greedy_solution(vk).theta;
  std::size_t box = 0, inside = 0;
  for (const auto& x : ref::box(ref::from(kExample.u))) {
    ++box;
    bool in = membership(vk, theta, ref::to_int(x));
    EXPECT_EQ(in, ref::dot(ref::from(kExample.a), x) <= 841);
    inside += in;
  }
  EXPECT_EQ(box, 432u);
  EXPECT_EQ(inside, 397u);
  EXPECT_EQ(code_of([&] { membership(vk, theta, iv({4, 0, 0, 0, 0})); }), ErrorCode::OutOfBox);
}

TEST(Membership, LexEqualsKnapsackOnRandomInstances) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 40; ++k) {
    RandomOptions opts;
    opts.n = 2 + static_cast<std::size_t>(k % 4);
    ValidatedKnapsack vk = validate(random_superincreasing(opts, rng));
    IntVector theta = greedy_solution(vk).theta;
    ref::Vec a = ref::from(vk.a());
    std::int64_t b = vk.b().get_si();
    for (const auto& x : ref::box(ref::from(vk.u()))) {
      ASSERT_EQ(membership(vk, theta, ref::to_int(x)), ref::dot(a, x) <= b);
    }
  }
}

TEST(Errors, ExitCodes) {
  EXPECT_EQ(exit_code(ErrorCode::NotSuperincreasing), 2);
  EXPECT_EQ(exit_code(ErrorCode::EmptyIntersection), 3);
  EXPECT_EQ(exit_code(ErrorCode::TooLarge), 4);
  EXPECT_EQ(exit_code(ErrorCode::CertificateFailed), 5);
  EXPECT_EQ(exit_code(ErrorCode::Internal), 1);
  Error e(ErrorCode::OutOfBox, "x", {3});
  EXPECT_EQ(std::string(e.what()), "OutOfBox: x");
}
