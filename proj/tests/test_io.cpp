#include "reference.hpp"

#include "superknap/error.hpp"
#include "superknap/facets.hpp"
#include "superknap/greedy.hpp"
#include "superknap/io.hpp"

#include <gtest/gtest.h>

#include <string>

using namespace superknap;
using ref::iv;

namespace {

std::string fixture(const std::string& name) { return std::string(SUPERKNAP_FIXTURE_DIR) + "/" + name; }

ErrorCode parse_code(const std::string& text) {
  try {
    instance_from_json(Json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted " << text;
  return ErrorCode::Internal;
}

}  // namespace

TEST(Io, InstanceFixturesRoundTrip) {
  for (const char* name : {"example_b841.json", "example_b863.json", "nonsuperinc_825.json", "zero7_le.json",
                           "zero7_ge.json"}) {
    KnapsackInstance a = instance_from_json(read_json_file(fixture(name)));
    KnapsackInstance b = instance_from_json(Json::parse(instance_to_json(a).dump()));
    EXPECT_EQ(a.a, b.a) << name;
    EXPECT_EQ(a.u, b.u) << name;
    EXPECT_EQ(a.b, b.b) << name;
    EXPECT_EQ(a.sense, b.sense) << name;
  }
  KnapsackInstance ex = instance_from_json(read_json_file(fixture("example_b841.json")));
  EXPECT_EQ(ex.a, iv({2, 8, 46, 150, 310}));
  EXPECT_EQ(ex.b, 841);
  EXPECT_EQ(ex.sense, Sense::LE);
}

TEST(Io, NumericAndBigValues) {
  KnapsackInstance inst = instance_from_json(Json::parse(R"({"n":2,"a":[1,"3"],"u":[2,1],"b":4,"sense":"le"})"));
  EXPECT_EQ(inst.a, iv({1, 3}));
  Integer big("123456789012345678901234567890");
  EXPECT_EQ(integer_from_json(to_json(big)), big);
  EXPECT_EQ(rational_from_json(Json("-7/3")), Rational(-7, 3));
  EXPECT_EQ(rational_from_json(to_json(Rational(5, 2))), Rational(5, 2));
}

TEST(Io, RejectsMalformedInstances) {
  EXPECT_EQ(parse_code(R"({"n":3,"a":[1,3],"u":[2,1],"b":4,"sense":"le"})"), ErrorCode::LengthMismatch);
  EXPECT_EQ(parse_code(R"({"n":2,"a":[1,3],"u":[2,1],"b":4,"sense":"eq"})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"({"n":2,"a":[1,"x"],"u":[2,1],"b":4,"sense":"le"})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"({"n":2,"a":[1,3],"u":[2,1],"sense":"le"})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"([1,2])"), ErrorCode::ParseError);
  EXPECT_THROW(read_json_file(fixture("does_not_exist.json")), Error);
}

TEST(Io, PolytopeRoundTrip) {
  ValidatedKnapsack vk = validate(instance_from_json(read_json_file(fixture("example_b841.json"))));
  HPolytope poly = hull_le(vk, greedy_solution(vk));
  poly.relaxation = true;
  HPolytope back = polytope_from_json(Json::parse(polytope_to_json(poly).dump()));
  ASSERT_EQ(back.dim, poly.dim);
  ASSERT_EQ(back.ineqs.size(), poly.ineqs.size());
  EXPECT_TRUE(back.relaxation);
  for (std::size_t k = 0; k < poly.ineqs.size(); ++k) {
    EXPECT_EQ(back.ineqs[k].coeffs, poly.ineqs[k].coeffs);
    EXPECT_EQ(back.ineqs[k].rhs, poly.ineqs[k].rhs);
    EXPECT_EQ(back.ineqs[k].sense, poly.ineqs[k].sense);
    EXPECT_EQ(back.ineqs[k].tag, poly.ineqs[k].tag);
  }
}

TEST(Io, FacetFixture) {
  HPolytope ge = polytope_from_json(read_json_file(fixture("zero7_ge_facets.json")));
  ASSERT_EQ(ge.dim, 7u);
  ASSERT_EQ(ge.ineqs.size(), 3u);
  EXPECT_EQ(render(ge.ineqs[0]), "x5 + 2x6 + 4x7 >= 12");
  EXPECT_EQ(ge.ineqs[2].tag, (RowTag{TagKind::GePacking, 6}));
}

TEST(Io, MixedFixture) {
  MixedInstance mi = mixed_from_json(read_json_file(fixture("mixed_b841_5.json")));
  EXPECT_EQ(mi.b, Rational(1683, 2));
  EXPECT_EQ(mi.ub_cont, 20);
  MixedInstance back = mixed_from_json(Json::parse(mixed_to_json(mi).dump()));
  EXPECT_EQ(back.a, mi.a);
  EXPECT_EQ(back.u, mi.u);
  EXPECT_EQ(back.b, mi.b);
}

TEST(Io, ProfileAndRendering) {
  ValidatedKnapsack vk = validate(instance_from_json(read_json_file(fixture("example_b841.json"))));
  GreedyProfile gp = greedy_solution(vk);
  Json j = profile_to_json(gp);
  EXPECT_EQ(j["theta"].dump(), R"(["0","3","1","1","2"])");
  EXPECT_EQ(j["support"].dump(), "[2,3,4,5]");
  std::string text = render_polytope(hull_le(vk, gp));
  EXPECT_EQ(text.substr(0, text.find('\n')), "x1 + 3x2 + 9x3 + 18x4 + 18x5 <= 72");
}
