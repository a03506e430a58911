#include <gtest/gtest.h>

#include "kmh/errors.hpp"
#include "kmh/root_datum.hpp"
#include "test_data.hpp"

using namespace kmh;
using namespace kmh::testing;

TEST(ValidateGcm, Symmetrizers) {
  EXPECT_EQ(Gcm::validate(cartan_a2()).symmetrizer(), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(Gcm::validate(cartan_affine_a1()).symmetrizer(), (std::vector<std::int64_t>{1, 1}));
  // d_1 * (-1) = d_2 * (-3)
  EXPECT_EQ(Gcm::validate({{2, -1}, {-3, 2}}).symmetrizer(), (std::vector<std::int64_t>{3, 1}));
  EXPECT_EQ(Gcm::validate(cartan_rank3_indefinite()).symmetrizer(),
            (std::vector<std::int64_t>{1, 3, 6}));
}

TEST(ValidateGcm, SymmetrizerPropertyHoldsExactly) {
  for (const auto& m : {cartan_a1(), cartan_a2(), cartan_b2(), cartan_affine_a2(),
                        cartan_hyperbolic(), cartan_rank3_indefinite()}) {
    auto g = Gcm::validate(m);
    const auto& d = g.symmetrizer();
    for (int i = 0; i < g.size(); ++i)
      for (int j = 0; j < g.size(); ++j)
        EXPECT_EQ(d[i] * g(i, j), d[j] * g(j, i));
  }
}

TEST(ValidateGcm, Errors) {
  EXPECT_THROW(Gcm::validate({{2, -1}, {0, 2}}), NotGCM);
  EXPECT_THROW(Gcm::validate({{2, 1}, {1, 2}}), NotGCM);
  EXPECT_THROW(Gcm::validate({{3, -1}, {-1, 2}}), NotGCM);
  EXPECT_THROW(Gcm::validate({{2, -1, 0}, {-1, 2}}), NotGCM);
  // Cycle 0 -> 1 -> 2 -> 0 with inconsistent ratios.
  EXPECT_THROW(Gcm::validate({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}), NotSymmetrizable);
}

TEST(StandardRealization, A1AndA2) {
  auto d1 = RootDatum::standard(Gcm::validate(cartan_a1()));
  EXPECT_EQ(d1.lattice_rank(), 1);
  EXPECT_EQ(d1.root(0), (Weight{2}));
  EXPECT_EQ(d1.coroot(0), (Weight{1}));

  auto d2 = RootDatum::standard(Gcm::validate(cartan_a2()));
  EXPECT_EQ(d2.lattice_rank(), 2);
  EXPECT_EQ(d2.root(0), (Weight{2, -1}));
  EXPECT_EQ(d2.root(1), (Weight{-1, 2}));
}

TEST(StandardRealization, RankIsTwoNMinusMatrixRank) {
  EXPECT_EQ(RootDatum::standard(Gcm::validate(cartan_affine_a1())).lattice_rank(), 3);
  EXPECT_EQ(RootDatum::standard(Gcm::validate(cartan_affine_a2())).lattice_rank(), 4);
  EXPECT_EQ(RootDatum::standard(Gcm::validate(cartan_hyperbolic())).lattice_rank(), 2);
}

TEST(StandardRealization, PairingReproducesGcm) {
  for (const auto& [name, d] : all_data())
    for (int i = 0; i < d->size(); ++i)
      for (int j = 0; j < d->size(); ++j)
        EXPECT_EQ(d->pairing(d->root(j), i), d->gcm()(i, j)) << name;
}

TEST(AffineRealization, Ranks) {
  auto g = Gcm::validate(cartan_affine_a1());
  EXPECT_EQ(RootDatum::affine(g, false).lattice_rank(), 2);
  EXPECT_EQ(RootDatum::affine(g, true).lattice_rank(), 3);
  auto g2 = Gcm::validate(cartan_affine_a2());
  EXPECT_EQ(RootDatum::affine(g2, false).lattice_rank(), 3);
  EXPECT_EQ(RootDatum::affine(g2, true).lattice_rank(), 4);
  EXPECT_THROW(RootDatum::affine(Gcm::validate(cartan_a2()), false), NotAffineType);
  EXPECT_THROW(RootDatum::affine(Gcm::validate(cartan_hyperbolic()), true), NotAffineType);
}

TEST(AffineRealization, DeltaPairsToZeroWithEveryCoroot) {
  // Twisted affine A_2^(2): marks (2,1), dual marks (1,2).
  const IntMatrix twisted{{2, -4}, {-1, 2}};
  for (const auto& m : {cartan_affine_a1(), cartan_affine_a2(), twisted})
    for (bool center : {false, true}) {
      auto d = RootDatum::affine(Gcm::validate(m), center);
      ASSERT_TRUE(d.delta());
      for (int i = 0; i < d.size(); ++i) {
        EXPECT_EQ(d.pairing(*d.delta(), i), 0);
        for (int j = 0; j < d.size(); ++j)
          EXPECT_EQ(d.pairing(d.root(j), i), d.gcm()(i, j));
      }
    }
}

TEST(NullMarks, Values) {
  EXPECT_EQ(null_marks(Gcm::validate(cartan_affine_a1())), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(null_marks(Gcm::validate(cartan_affine_a2())), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(null_marks(Gcm::validate({{2, -4}, {-1, 2}})), (std::vector<std::int64_t>{2, 1}));
  EXPECT_THROW(null_marks(Gcm::validate(cartan_a1())), NotAffineType);
}

TEST(Reflect, Examples) {
  auto d = a1();
  EXPECT_EQ(d->reflect(0, Weight{1}), (Weight{-1}));
  EXPECT_EQ(d->reflect(0, Weight{0}), (Weight{0}));
  auto aff = affine_a1();
  for (int i = 0; i < 2; ++i)
    EXPECT_EQ(aff->reflect(i, *aff->delta()), *aff->delta());
}

TEST(Reflect, InvolutionAndSignFlipOnGrid) {
  for (const auto& [name, d] : all_data()) {
    Weight lambda(static_cast<std::size_t>(d->lattice_rank()), -2);
    // Walk a small grid in lexicographic order.
    for (int step = 0; step < 200; ++step) {
      for (int i = 0; i < d->size(); ++i) {
        auto s = d->reflect(i, lambda);
        EXPECT_EQ(d->reflect(i, s), lambda) << name;
        EXPECT_EQ(d->pairing(s, i), -d->pairing(lambda, i)) << name;
      }
      std::size_t k = 0;
      while (k < lambda.size() && lambda[k] == 2)
        lambda[k++] = -2;
      if (k == lambda.size())
        break;
      ++lambda[k];
    }
  }
}

TEST(FromVectors, ValidatesPairingAndIndependence) {
  auto g = Gcm::validate(cartan_a1());
  EXPECT_NO_THROW(RootDatum::from_vectors(g, {{2, 0}}, {{1, 0}}));
  EXPECT_THROW(RootDatum::from_vectors(g, {{2, 0}}, {{2, 0}}), InvalidArgument);
  auto aff = Gcm::validate(cartan_affine_a1());
  // Dependent coroots are accepted only on request.
  EXPECT_THROW(RootDatum::from_vectors(aff, {{2, 0}, {-2, 1}}, {{1, 0}, {-1, 0}}), InvalidArgument);
  EXPECT_NO_THROW(RootDatum::from_vectors(aff, {{2, 0}, {-2, 1}}, {{1, 0}, {-1, 0}}, false));
}
