#include <gtest/gtest.h>

#include "kmh/errors.hpp"
#include "kmh/random_elements.hpp"
#include "kmh/serialize.hpp"
#include "test_data.hpp"

using namespace kmh;
using namespace kmh::testing;

TEST(Serialize, LaurentFormat) {
  auto x = Laurent::q_pow(-1, 3) + Laurent::q_pow(2, -1);
  EXPECT_EQ(to_json(x), json::parse("[[-1,3],[2,-1]]"));
  EXPECT_EQ(laurent_from_json(json::parse("[[2,-1],[-1,3],[2,0]]")), x);
  EXPECT_EQ(laurent_from_json(json::parse("5")), Laurent(5));
}

TEST(Serialize, RoundTripsRandomElements) {
  for (const auto& [name, d] : all_data()) {
    ElementSampler sampler(d, 61);
    for (int t = 0; t < 100; ++t) {
      auto f = sampler.poly();
      auto h = sampler.hecke();
      auto a = sampler.affine();
      EXPECT_EQ(group_algebra_from_json(d, to_json(f)), f) << name;
      EXPECT_EQ(hecke_from_json(d, to_json(h)), h) << name;
      EXPECT_EQ(affine_from_json(d, to_json(a)), a) << name;
      EXPECT_EQ(affine_from_json(d, json::parse(to_json(a).dump())), a) << name;
    }
  }
}

TEST(Serialize, NonReducedWordsAreMultipliedOut) {
  auto d = a1();
  auto h = hecke_from_json(d, json::parse(R"([{"word":[0,0],"coeff":[[0,1]]}])"));
  EXPECT_EQ(h, HeckeElement::generator(d, 0) * HeckeElement::generator(d, 0));
  auto a = affine_from_json(d, json::parse(R"([{"word":[0,0],"poly":[{"lambda":[1],"coeff":1}]}])"));
  auto T = AffineHeckeElement::generator(d, 0);
  EXPECT_EQ(a, theta(d, Weight{1}) * T * T);
}

TEST(Serialize, ModuleVectorsAndCharacters) {
  auto d = a2();
  ModuleVector v{{Word{}, mpq_class(1, 3)}, {Word{0, 1}, mpq_class(-2)}};
  EXPECT_EQ(module_vector_from_json(d, to_json(v)), v);
  auto chi = character_from_json(d, json::parse(R"({"values": ["3/2", 2], "q0": "5"})"));
  EXPECT_EQ(chi.values()[0], mpq_class(3, 2));
  EXPECT_EQ(chi.q0(), mpq_class(5));
}

TEST(Serialize, DatumReport) {
  auto j = to_json(*affine_a1());
  EXPECT_EQ(j.at("cartan"), json::parse("[[2,-2],[-2,2]]"));
  EXPECT_EQ(j.at("rank"), 3);
  EXPECT_EQ(j.at("null_marks"), json::parse("[1,1]"));
  EXPECT_TRUE(j.contains("delta"));
  EXPECT_FALSE(to_json(*a2()).contains("delta"));
}

TEST(Serialize, Errors) {
  EXPECT_THROW(parse_json_text("{\"cartan\": [[2, -1]\n", "x.json"), ParseError);
  try {
    parse_json_text("[1,\n2,,]", "bad.json");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.json:2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(read_json_file("/nonexistent/path.json"), ParseError);
  EXPECT_THROW(group_algebra_from_json(a2(), json::parse(R"([{"lambda":[1],"coeff":1}])")),
               ParseError);
  EXPECT_THROW(laurent_from_json(json::parse(R"([[0]])")), ParseError);
  EXPECT_THROW(hecke_from_json(a2(), json::parse(R"([{"word":[5],"coeff":1}])")),
               InvalidArgument);
}
