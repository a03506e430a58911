#include "kmh/principal_series.hpp"

#include "kmh/errors.hpp"

namespace kmh {

namespace {

mpq_class power(const mpq_class& base, std::int64_t e) {
  mpq_class b = e < 0 ? mpq_class(1 / base) : base;
  auto n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  mpq_class out = 1;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), n);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), n);
  out.canonicalize();
  return out;
}

} // namespace

Character::Character(Datum datum, std::vector<mpq_class> values, mpq_class q0)
    : datum_(std::move(datum)), values_(std::move(values)), q0_(std::move(q0)) {
  if (static_cast<int>(values_.size()) != datum_->lattice_rank())
    throw InvalidArgument("character needs one value per lattice coordinate");
  for (const auto& v : values_)
    if (v == 0)
      throw InvalidArgument("character values must be nonzero");
  if (q0_ == 0)
    throw BadParameter("q0 = 0: q is not invertible at this specialization");
}

mpq_class Character::operator()(const Weight& lambda) const {
  mpq_class out = 1;
  for (std::size_t k = 0; k < lambda.size(); ++k)
    if (lambda[k] != 0)
      out *= power(values_[k], lambda[k]);
  return out;
}

mpq_class Character::operator()(const Laurent& c) const {
  mpq_class out = 0;
  for (const auto& [e, k] : c.terms())
    out += mpq_class(static_cast<long>(k)) * power(q0_, e);
  return out;
}

mpq_class Character::operator()(const GroupAlgebraElement& f) const {
  require_same_datum(datum_, f.datum());
  mpq_class out = 0;
  for (const auto& [lambda, c] : f.terms())
    out += (*this)(c) * (*this)(lambda);
  return out;
}

PrincipalSeries::PrincipalSeries(Character chi, std::size_t root_check_length)
    : chi_(std::move(chi)) {
  const mpq_class& q0 = chi_.q0();
  if (q0 == 1 || q0 == -1)
    throw BadParameter("q0 must avoid 0 and +-1");
  const mpq_class q0_inv = 1 / q0;
  const Datum& d = chi_.datum();
  for (const auto& w : enumerate_up_to_length(d, root_check_length))
    for (int i = 0; i < d->size(); ++i) {
      const Weight beta = act(w, d->root(i));
      const mpq_class v = chi_(beta);
      if (v == 1 || v == q0 || v == q0_inv)
        throw BadParameter("character takes a degenerate value on a real root");
    }
}

ModuleVector PrincipalSeries::apply_basis(const AffineHeckeElement& a, const Word& w) const {
  require_same_datum(a.datum(), chi_.datum());
  const Datum& d = chi_.datum();
  // a T_w = sum_u T_u g_u, and T_u g_u (x) 1 = chi(g_u) T_u (x) 1.
  auto product = multiply(a, AffineHeckeElement::term(GroupAlgebraElement::one(d),
                                                      WeylElement::from_word(d, w)));
  ModuleVector out;
  for (const auto& [u, g] : right_form(product)) {
    mpq_class c = chi_(g);
    if (c != 0)
      out.emplace(u, std::move(c));
  }
  return out;
}

ModuleVector PrincipalSeries::apply(const AffineHeckeElement& a, const ModuleVector& v) const {
  ModuleVector out;
  for (const auto& [w, c] : v) {
    if (c == 0)
      continue;
    for (const auto& [u, x] : apply_basis(a, w)) {
      auto& slot = out[u];
      slot += c * x;
      if (slot == 0)
        out.erase(u);
    }
  }
  return out;
}

ModuleVector principal_series_apply(const Character& chi, const AffineHeckeElement& a,
                                    const ModuleVector& v) {
  return PrincipalSeries(chi).apply(a, v);
}

} // namespace kmh
