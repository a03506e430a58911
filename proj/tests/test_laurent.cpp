#include <gtest/gtest.h>

#include <random>

#include "kmh/laurent.hpp"

using kmh::Laurent;

namespace {

Laurent random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-4, 4), c(-5, 5), n(0, 4);
  std::vector<Laurent::Term> terms;
  for (int k = n(rng); k > 0; --k)
    terms.emplace_back(e(rng), c(rng));
  return Laurent::from_terms(terms);
}

} // namespace

TEST(Laurent, CanonicalFormDropsZeros) {
  auto x = Laurent::from_terms({{1, 2}, {-1, 3}, {1, -2}, {0, 0}});
  ASSERT_EQ(x.terms().size(), 1u);
  EXPECT_EQ(x.coeff(-1), 3);
  EXPECT_EQ(x.coeff(1), 0);
  EXPECT_TRUE((Laurent::q() - Laurent::q()).is_zero());
}

TEST(Laurent, Arithmetic) {
  const Laurent q = Laurent::q();
  // (q + 1)(q - 1) = q^2 - 1
  EXPECT_EQ((q + 1) * (q - 1), Laurent::q_pow(2) - 1);
  EXPECT_EQ(q * Laurent::q_pow(-1), Laurent(1));
  EXPECT_EQ((q - 1).bar(), Laurent::q_pow(-1) - 1);
  EXPECT_EQ((Laurent::q_pow(2, 3) - 7).to_string(), "3*q^2 - 7");
}

TEST(Laurent, RingAxiomsOnRandomElements) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
    EXPECT_EQ(a.bar().bar(), a);
  }
}

TEST(Laurent, OverflowIsReported) {
  auto big = Laurent(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, std::overflow_error);
  EXPECT_THROW(big + big, std::overflow_error);
}
