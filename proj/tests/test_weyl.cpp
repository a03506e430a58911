#include <gtest/gtest.h>

#include <random>

#include "kmh/errors.hpp"
#include "kmh/weyl.hpp"
#include "oracles.hpp"
#include "test_data.hpp"

using namespace kmh;
using namespace kmh::testing;

TEST(Weyl, FiniteGroupOrders) {
  EXPECT_EQ(enumerate_up_to_length(a1(), 10).size(), 2u);
  EXPECT_EQ(enumerate_up_to_length(a2(), 10).size(), 6u);
  EXPECT_EQ(enumerate_up_to_length(b2(), 10).size(), 8u);
}

TEST(Weyl, InfiniteDihedralCounts) {
  for (auto d : {affine_a1(), hyperbolic()})
    for (std::size_t l : {0u, 1u, 4u, 17u, 50u})
      EXPECT_EQ(enumerate_up_to_length(d, l).size(), 2 * l + 1);
}

TEST(Weyl, CanonicalWordsA2) {
  auto d = a2();
  EXPECT_EQ(WeylElement::from_word(d, std::vector<int>{1, 0, 1}).word(), (Word{0, 1, 0}));
  EXPECT_EQ(WeylElement::from_word(d, std::vector<int>{1, 1}).word(), Word{});
  EXPECT_EQ(WeylElement::from_word(d, std::vector<int>{0, 1, 0, 1}).word(), (Word{1, 0}));
  EXPECT_THROW(WeylElement::from_word(d, std::vector<int>{2}), InvalidArgument);
  EXPECT_THROW(WeylElement::generator(d, -1), InvalidArgument);
}

TEST(Weyl, EnumerationMatchesNaiveShortLexWords) {
  for (const auto& [name, d] : all_data()) {
    const std::size_t n = d->size() == 3 ? 4 : 5;
    auto naive = naive_elements(*d, n);
    auto got = enumerate_up_to_length(d, n);
    ASSERT_EQ(got.size(), naive.size()) << name;
    std::set<Word, ShortLexLess> expected;
    for (const auto& [sig, w] : naive)
      expected.insert(w);
    std::vector<Word> expected_sorted(expected.begin(), expected.end());
    for (std::size_t k = 0; k < got.size(); ++k)
      EXPECT_EQ(got[k].word(), expected_sorted[k]) << name;
  }
}

TEST(Weyl, LengthEqualsInversionCountOfArbitraryWords) {
  std::mt19937_64 rng(7);
  for (const auto& [name, d] : all_data()) {
    std::uniform_int_distribution<int> gen(0, d->size() - 1), len(0, 9);
    for (int t = 0; t < 200; ++t) {
      Word w(static_cast<std::size_t>(len(rng)));
      for (auto& x : w)
        x = gen(rng);
      auto e = WeylElement::from_word(d, w);
      EXPECT_EQ(e.length(), inversion_count(d->gcm(), w)) << name;
      EXPECT_EQ(signature(*d, e.word()), signature(*d, w)) << name;
    }
  }
}

TEST(Weyl, GroupLawsAndAction) {
  std::mt19937_64 rng(11);
  for (const auto& [name, d] : all_data()) {
    std::uniform_int_distribution<int> gen(0, d->size() - 1), len(0, 6), coord(-3, 3);
    auto random_element = [&] {
      Word w(static_cast<std::size_t>(len(rng)));
      for (auto& x : w)
        x = gen(rng);
      return WeylElement::from_word(d, w);
    };
    for (int t = 0; t < 100; ++t) {
      auto u = random_element(), v = random_element(), x = random_element();
      EXPECT_EQ(multiply(multiply(u, v), x), multiply(u, multiply(v, x))) << name;
      EXPECT_TRUE(multiply(u, u.inverse()).is_identity()) << name;
      Weight lambda(static_cast<std::size_t>(d->lattice_rank()));
      for (auto& c : lambda)
        c = coord(rng);
      EXPECT_EQ(act(multiply(u, v), lambda), act(u, act(v, lambda))) << name;
      EXPECT_EQ(act(u, lambda), naive_act(*d, u.word(), lambda)) << name;
      for (int i : u.left_descents())
        EXPECT_LT(multiply(WeylElement::generator(d, i), u).length(), u.length());
      for (int i : u.right_descents())
        EXPECT_LT(multiply(u, WeylElement::generator(d, i)).length(), u.length());
    }
  }
}

TEST(Weyl, BruhatOrderMatchesSubwordOracle) {
  for (auto d : {a2(), b2(), affine_a1(), affine_a2()}) {
    auto elems = enumerate_up_to_length(d, d->size() == 3 ? 3 : 4);
    for (const auto& u : elems)
      for (const auto& w : elems) {
        EXPECT_EQ(bruhat_leq(u, w), naive_bruhat_leq(*d, u.word(), w.word()));
        if (bruhat_leq(u, w))
          EXPECT_TRUE(total_order_leq(u, w));
      }
  }
}

TEST(Weyl, ReducedWordsA2Longest) {
  auto w0 = WeylElement::from_word(a2(), std::vector<int>{0, 1, 0});
  auto words = reduced_words(w0);
  std::sort(words.begin(), words.end());
  EXPECT_EQ(words, (std::vector<Word>{{0, 1, 0}, {1, 0, 1}}));
  auto b = WeylElement::from_word(b2(), std::vector<int>{0, 1, 0, 1});
  EXPECT_EQ(reduced_words(b).size(), 2u);
}

TEST(Weyl, MixedData) {
  EXPECT_THROW(multiply(WeylElement::identity(a1()), WeylElement::identity(a2())), MixedData);
}
