#include "kmh/random_elements.hpp"

namespace kmh {

Weight ElementSampler::weight() {
  Weight w(static_cast<std::size_t>(datum_->lattice_rank()));
  for (auto& x : w)
    x = uniform(-bounds_.max_coord, bounds_.max_coord);
  return w;
}

Laurent ElementSampler::laurent() {
  std::vector<Laurent::Term> terms;
  const int count = uniform(1, 2);
  for (int k = 0; k < count; ++k) {
    int c = 0;
    while (c == 0)
      c = uniform(-bounds_.max_coeff, bounds_.max_coeff);
    terms.emplace_back(uniform(-bounds_.max_qdeg, bounds_.max_qdeg), c);
  }
  auto out = Laurent::from_terms(std::move(terms));
  return out.is_zero() ? Laurent(1) : out;
}

WeylElement ElementSampler::weyl() {
  const int len = uniform(0, static_cast<int>(bounds_.max_length));
  Word w;
  for (int k = 0; k < len; ++k)
    w.push_back(uniform(0, datum_->size() - 1));
  return WeylElement::from_word(datum_, w);
}

GroupAlgebraElement ElementSampler::poly() {
  GroupAlgebraElement f(datum_);
  const int count = uniform(1, static_cast<int>(bounds_.max_poly_terms));
  for (int k = 0; k < count; ++k)
    f.add_term(weight(), laurent());
  return f;
}

HeckeElement ElementSampler::hecke() {
  HeckeElement h(datum_);
  const int count = uniform(1, static_cast<int>(bounds_.max_support));
  for (int k = 0; k < count; ++k)
    h.add_term(weyl().word(), laurent());
  return h;
}

AffineHeckeElement ElementSampler::affine() {
  AffineHeckeElement a(datum_);
  const int count = uniform(1, static_cast<int>(bounds_.max_support));
  for (int k = 0; k < count; ++k)
    a.add_term(weyl().word(), poly());
  return a;
}

} // namespace kmh
