#include <gtest/gtest.h>

#include "kmh/affine_hecke.hpp"
#include "kmh/errors.hpp"
#include "kmh/random_elements.hpp"
#include "oracles.hpp"
#include "test_data.hpp"

using namespace kmh;
using namespace kmh::testing;

namespace {

using Terms = GroupAlgebraElement::Terms;

void add_to(Terms& t, const Weight& l, const Laurent& c) {
  auto& slot = t[l];
  slot = slot + c;
  if (slot.is_zero())
    t.erase(l);
}

// (e^l - e^{s l}) / (1 - e^{-alpha}) as a geometric sum, written from the
// definition rather than taken from the library.
Terms naive_demazure(const RootDatum& d, int i, const Terms& f) {
  Terms out;
  for (const auto& [l, c] : f) {
    std::int64_t n = 0;
    for (std::size_t k = 0; k < l.size(); ++k)
      n += l[k] * d.coroot(i)[k];
    Weight mu = l;
    if (n > 0) {
      for (std::int64_t k = 0; k < n; ++k, mu = mu - d.root(i))
        add_to(out, mu, c);
    } else if (n < 0) {
      for (std::int64_t k = 0; k < -n; ++k) {
        mu = mu + d.root(i);
        add_to(out, mu, -c);
      }
    }
  }
  return out;
}

Terms naive_mul(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b)
      add_to(out, la + lb, ca * cb);
  return out;
}

// T_i f = q (s_i f) + (q - 1) D_i f
Terms naive_rep_gen(const RootDatum& d, int i, const Terms& f) {
  Terms out;
  for (const auto& [l, c] : f)
    add_to(out, naive_reflect(d, i, l), Laurent::q() * c);
  for (const auto& [l, c] : naive_demazure(d, i, f))
    add_to(out, l, (Laurent::q() - 1) * c);
  return out;
}

Terms naive_rep(const RootDatum& d, const AffineHeckeElement& a, const Terms& f) {
  Terms out;
  for (const auto& [w, g] : a.terms()) {
    Terms x = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      x = naive_rep_gen(d, *it, x);
    for (const auto& [l, c] : naive_mul(g.terms(), x))
      add_to(out, l, c);
  }
  return out;
}

GroupAlgebraElement mono(const Datum& d, Weight l) {
  return GroupAlgebraElement::monomial(d, std::move(l));
}

} // namespace

TEST(AffineHecke, RankOneRelations) {
  auto d = a1();
  auto T = AffineHeckeElement::generator(d, 0);
  const Laurent q = Laurent::q();
  EXPECT_EQ(T * T, (q - 1) * T + q * AffineHeckeElement::one(d));
  // T e^w = e^{-w} T + (q - 1) e^w with alpha = 2w.
  auto lhs = T * theta(d, Weight{1});
  auto rhs = theta(d, Weight{-1}) * T + (q - 1) * theta(d, Weight{1});
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(lhs.coeff(Word{0}), mono(d, Weight{-1}));
  // T e^{-w} = e^{w} T - (q - 1) e^w
  EXPECT_EQ(T * theta(d, Weight{-1}),
            theta(d, Weight{1}) * T - (q - 1) * theta(d, Weight{1}));
  // T e^{alpha} = e^{-alpha} T + (q - 1)(e^{alpha} + 1)
  EXPECT_EQ(T * theta(d, Weight{2}), theta(d, Weight{-2}) * T +
                                         (q - 1) * (theta(d, Weight{2}) + theta(d, Weight{0})));
}

TEST(AffineHecke, CrossRelationOnBox) {
  for (const auto& [name, d] : all_data()) {
    const int r = d->lattice_rank();
    const int bound = r >= 4 ? 2 : 3;
    Weight l(static_cast<std::size_t>(r), -bound);
    for (;;) {
      auto f = mono(d, l);
      for (int i = 0; i < d->size(); ++i) {
        ASSERT_TRUE(cross_relation_defect(i, f).is_zero()) << name;
        // f T_i = T_i (s_i f) + (q - 1) D_i f, assembled from the oracle.
        auto Ti = AffineHeckeElement::generator(d, i);
        auto expected = Ti * embed_poly(reflect_action(i, f)) +
                        (Laurent::q() - 1) *
                            embed_poly(GroupAlgebraElement(d, naive_demazure(*d, i, f.terms())));
        ASSERT_EQ(embed_poly(f) * Ti, expected) << name;
      }
      std::size_t k = 0;
      while (k < l.size() && l[k] == bound)
        l[k++] = -bound;
      if (k == l.size())
        break;
      ++l[k];
    }
  }
}

TEST(AffineHecke, ConfluenceOverReducedWords) {
  for (const auto& [name, d] : all_data()) {
    ElementSampler sampler(d, 31);
    for (const auto& w : enumerate_up_to_length(d, 5)) {
      auto f = sampler.poly();
      auto words = reduced_words(w);
      auto expected = reduce_word_times(words.front(), f);
      EXPECT_EQ(expected, AffineHeckeElement::term(GroupAlgebraElement::one(d), w) * embed_poly(f))
          << name;
      for (const auto& word : words)
        ASSERT_EQ(reduce_word_times(word, f), expected) << name;
    }
  }
}

TEST(AffineHecke, ProductsMatchPolynomialRepresentationOracle) {
  for (const auto& [name, d] : all_data()) {
    ElementSampler sampler(d, 37);
    for (int t = 0; t < 40; ++t) {
      auto a = sampler.affine(), b = sampler.affine();
      auto f = sampler.poly();
      auto ab = a * b;
      EXPECT_EQ(naive_rep(*d, ab, f.terms()), naive_rep(*d, a, naive_rep(*d, b, f.terms())))
          << name;
      EXPECT_EQ(poly_rep_apply(a, f).terms(), naive_rep(*d, a, f.terms())) << name;
    }
  }
}

TEST(AffineHecke, AssociativityAndEmbeddings) {
  for (const auto& [name, d] : all_data()) {
    ElementSampler sampler(d, 41);
    for (int t = 0; t < 40; ++t) {
      auto a = sampler.affine(), b = sampler.affine(), c = sampler.affine();
      EXPECT_EQ((a * b) * c, a * (b * c)) << name;
      EXPECT_EQ(anti_involution(a * b), anti_involution(b) * anti_involution(a)) << name;
      EXPECT_EQ(anti_involution(anti_involution(a)), a) << name;
      auto h1 = sampler.hecke(), h2 = sampler.hecke();
      EXPECT_EQ(embed_hecke(h1 * h2), embed_hecke(h1) * embed_hecke(h2)) << name;
      auto f = sampler.poly(), g = sampler.poly();
      EXPECT_EQ(embed_poly(f * g), embed_poly(f) * embed_poly(g)) << name;
      int i = sampler.uniform(0, d->size() - 1);
      EXPECT_EQ(mul_gen_left(i, a), AffineHeckeElement::generator(d, i) * a) << name;
    }
  }
}

TEST(AffineHecke, RightFormRecomposes) {
  for (const auto& [name, d] : all_data()) {
    ElementSampler sampler(d, 43);
    for (int t = 0; t < 40; ++t) {
      auto a = sampler.affine();
      AffineHeckeElement sum(d);
      for (const auto& [u, g] : right_form(a))
        sum += AffineHeckeElement::term(GroupAlgebraElement::one(d),
                                        WeylElement::from_word(d, u)) *
               embed_poly(g);
      EXPECT_EQ(sum, a) << name;
    }
  }
}

TEST(AffineHecke, PolynomialRepresentation) {
  auto d = a1();
  const Laurent q = Laurent::q();
  EXPECT_EQ(poly_rep_generator(0, GroupAlgebraElement::one(d)), q * GroupAlgebraElement::one(d));
  EXPECT_EQ(poly_rep_generator(0, mono(d, Weight{1})),
            q * mono(d, Weight{-1}) + (q - 1) * mono(d, Weight{1}));
  for (const auto& [name, dd] : all_data()) {
    ElementSampler sampler(dd, 47);
    for (int t = 0; t < 50; ++t) {
      auto f = sampler.poly();
      for (int i = 0; i < dd->size(); ++i) {
        auto tf = poly_rep_generator(i, f);
        // (T - q)(T + 1) = 0
        auto lhs = poly_rep_generator(i, tf) + tf - q * tf - q * f;
        EXPECT_TRUE(lhs.is_zero()) << name;
      }
    }
  }
}

TEST(Daha, ContextsAndCentrality) {
  struct Case {
    IntMatrix m;
    bool center;
    int rank;
  };
  for (const auto& c : {Case{cartan_affine_a1(), false, 2}, Case{cartan_affine_a1(), true, 3},
                        Case{cartan_affine_a2(), false, 3}, Case{cartan_affine_a2(), true, 4}}) {
    auto ctx = build_daha(Gcm::validate(c.m), c.center);
    EXPECT_EQ(ctx.datum->lattice_rank(), c.rank);
    EXPECT_EQ(ctx.include_center, c.center);
    ASSERT_TRUE(ctx.datum->delta());
    EXPECT_EQ(*ctx.datum->delta(), ctx.delta);
    auto td = theta(ctx.datum, ctx.delta);
    for (int i = 0; i < ctx.datum->size(); ++i)
      EXPECT_TRUE(cross_relation_defect(i, mono(ctx.datum, ctx.delta)).is_zero());
    ElementSampler sampler(ctx.datum, 53);
    for (int t = 0; t < 30; ++t) {
      auto a = sampler.affine();
      EXPECT_EQ(td * a, a * td);
    }
  }
  EXPECT_THROW(build_daha(Gcm::validate(cartan_b2()), false), NotAffineType);
}

TEST(AffineHecke, MixedData) {
  EXPECT_THROW(AffineHeckeElement::one(a1()) * AffineHeckeElement::one(a2()), MixedData);
  auto g = Gcm::validate(cartan_affine_a1());
  auto l1 = build_daha(g, false).datum, l2 = build_daha(g, true).datum;
  EXPECT_THROW(theta(l1, *l1->delta()) * theta(l2, *l2->delta()), MixedData);
}
