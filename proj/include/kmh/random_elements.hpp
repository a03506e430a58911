#ifndef KMH_RANDOM_ELEMENTS_HPP
#define KMH_RANDOM_ELEMENTS_HPP

#include <cstdint>
#include <random>

#include "kmh/affine_hecke.hpp"

namespace kmh {

/// Seeded generators for property sweeps. The library's algebra modules never
/// draw random numbers themselves.
class ElementSampler {
public:
  struct Bounds {
    int max_coord = 3;       // |lambda_k|
    int max_qdeg = 3;        // |q exponent|
    int max_coeff = 3;       // |integer coefficient|
    std::size_t max_length = 3;
    std::size_t max_support = 3;
    std::size_t max_poly_terms = 2;
  };

  ElementSampler(Datum datum, std::uint64_t seed, Bounds bounds)
      : datum_(std::move(datum)), rng_(seed), bounds_(bounds) {}
  ElementSampler(Datum datum, std::uint64_t seed) : ElementSampler(std::move(datum), seed, Bounds{}) {}

  const Bounds& bounds() const { return bounds_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Weight weight();
  Laurent laurent();
  WeylElement weyl();
  GroupAlgebraElement poly();
  HeckeElement hecke();
  AffineHeckeElement affine();

private:
  Datum datum_;
  std::mt19937_64 rng_;
  Bounds bounds_;
};

} // namespace kmh

#endif // KMH_RANDOM_ELEMENTS_HPP
