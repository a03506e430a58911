#include "kmh/affine_hecke.hpp"

#include <functional>

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kmh/errors.hpp"

namespace kmh {

namespace {

const Laurent& q_minus_one() {
  static const Laurent v = Laurent::q() - 1;
  return v;
}

} // namespace

AffineHeckeElement AffineHeckeElement::one(Datum datum) {
  return embed_poly(GroupAlgebraElement::one(std::move(datum)));
}

AffineHeckeElement AffineHeckeElement::term(const GroupAlgebraElement& f, const WeylElement& w) {
  require_same_datum(f.datum(), w.datum());
  AffineHeckeElement out(f.datum());
  out.add_term(w.word(), f);
  return out;
}

AffineHeckeElement AffineHeckeElement::generator(Datum datum, int i) {
  auto s = WeylElement::generator(datum, i);
  return term(GroupAlgebraElement::one(std::move(datum)), s);
}

GroupAlgebraElement AffineHeckeElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? GroupAlgebraElement(datum_) : it->second;
}

void AffineHeckeElement::add_term(const Word& w, const GroupAlgebraElement& f) {
  if (f.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(w, f);
  if (inserted)
    return;
  it->second += f;
  if (it->second.is_zero())
    terms_.erase(it);
}

AffineHeckeElement AffineHeckeElement::operator-() const {
  AffineHeckeElement out(datum_);
  for (const auto& [w, f] : terms_)
    out.terms_.emplace(w, -f);
  return out;
}

AffineHeckeElement& AffineHeckeElement::operator+=(const AffineHeckeElement& o) {
  require_same_datum(datum_, o.datum_);
  for (const auto& [w, f] : o.terms_)
    add_term(w, f);
  return *this;
}

AffineHeckeElement& AffineHeckeElement::operator-=(const AffineHeckeElement& o) {
  require_same_datum(datum_, o.datum_);
  for (const auto& [w, f] : o.terms_)
    add_term(w, -f);
  return *this;
}

AffineHeckeElement& AffineHeckeElement::operator*=(const Laurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, f] : terms_)
    f *= c;
  return *this;
}

std::string AffineHeckeElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, f] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "[" << f << "]T[";
    for (std::size_t k = 0; k < w.size(); ++k)
      os << (k ? "," : "") << w[k];
    os << "]";
  }
  return os.str();
}

AffineHeckeElement embed_poly(const GroupAlgebraElement& f) {
  AffineHeckeElement out(f.datum());
  out.add_term({}, f);
  return out;
}

AffineHeckeElement embed_hecke(const HeckeElement& h) {
  AffineHeckeElement out(h.datum());
  for (const auto& [w, c] : h.terms())
    out.add_term(w, GroupAlgebraElement::scalar(h.datum(), c));
  return out;
}

AffineHeckeElement theta(const Datum& datum, const Weight& lambda) {
  return embed_poly(GroupAlgebraElement::monomial(datum, lambda));
}

AffineHeckeElement mul_gen_left(int i, const AffineHeckeElement& a) {
  const Gcm& gcm = a.datum()->gcm();
  if (i < 0 || i >= gcm.size())
    throw InvalidArgument("generator index " + std::to_string(i) + " out of range");
  static const Laurent q = Laurent::q();
  AffineHeckeElement out(a.datum());
  for (const auto& [u, f] : a.terms()) {
    // T_i f T_u = (s_i f) T_i T_u + (q-1) demazure(i, f) T_u
    GroupAlgebraElement sf = reflect_action(i, f);
    auto step = left_step(gcm, i, u);
    if (step.up) {
      out.add_term(step.word, sf);
    } else {
      out.add_term(u, q_minus_one() * sf);
      out.add_term(step.word, q * std::move(sf));
    }
    out.add_term(u, q_minus_one() * demazure(i, f));
  }
  return out;
}

AffineHeckeElement commute_gen_past(int i, const GroupAlgebraElement& f) {
  AffineHeckeElement out = mul_gen_left(i, embed_poly(f));
#ifdef KMH_CHECKED_REWRITES
  // The cross relation as written: f T_s - T_s (s f) = (q-1) demazure(i, f).
  const GroupAlgebraElement sf = reflect_action(i, f);
  AffineHeckeElement lhs = AffineHeckeElement::term(f, WeylElement::generator(f.datum(), i)) -
                           mul_gen_left(i, embed_poly(sf));
  if (lhs != embed_poly(q_minus_one() * demazure(i, f)))
    throw std::logic_error("commute_gen_past: cross relation check failed");
#endif
  return out;
}

AffineHeckeElement reduce_word_times(std::span<const int> word, const GroupAlgebraElement& f) {
  AffineHeckeElement x = embed_poly(f);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    x = mul_gen_left(*it, x);
  return x;
}

AffineHeckeElement multiply(const AffineHeckeElement& a, const AffineHeckeElement& b) {
  require_same_datum(a.datum(), b.datum());
  AffineHeckeElement out(a.datum());
  // T_w b for every suffix w of a word in a's support, built left letter by
  // left letter so that words sharing a tail share the work.
  std::map<Word, AffineHeckeElement, ShortLexLess> memo;
  memo.emplace(Word{}, b);
  std::function<const AffineHeckeElement&(const Word&)> times_b =
      [&](const Word& w) -> const AffineHeckeElement& {
    if (auto it = memo.find(w); it != memo.end())
      return it->second;
    const Word tail(w.begin() + 1, w.end());
    auto x = mul_gen_left(w.front(), times_b(tail));
    return memo.emplace(w, std::move(x)).first->second;
  };
  for (const auto& [w, f] : a.terms())
    for (const auto& [u, g] : times_b(w).terms())
      out.add_term(u, f * g);
  return out;
}

AffineHeckeElement operator*(const AffineHeckeElement& a, const AffineHeckeElement& b) {
  return multiply(a, b);
}

AffineHeckeElement anti_involution(const AffineHeckeElement& a) {
  AffineHeckeElement out(a.datum());
  for (const auto& [w, f] : a.terms()) {
    Word rev(w.rbegin(), w.rend());
    out += reduce_word_times(rev, f);
  }
  return out;
}

AffineHeckeElement::Terms right_form(const AffineHeckeElement& a) {
  const Gcm& gcm = a.datum()->gcm();
  AffineHeckeElement::Terms out;
  const AffineHeckeElement flipped = anti_involution(a);
  for (const auto& [v, g] : flipped.terms()) {
    Word rev(v.rbegin(), v.rend());
    out.emplace(canonical_word(gcm, rev), g);
  }
  return out;
}

AffineHeckeElement cross_relation_defect(int i, const GroupAlgebraElement& f) {
  const Datum& d = f.datum();
  const GroupAlgebraElement sf = reflect_action(i, f);
  AffineHeckeElement lhs = AffineHeckeElement::term(f, WeylElement::generator(d, i)) -
                           multiply(AffineHeckeElement::generator(d, i), embed_poly(sf));
  return lhs - embed_poly(q_minus_one() * demazure(i, f));
}

GroupAlgebraElement poly_rep_generator(int i, const GroupAlgebraElement& f) {
  return Laurent::q() * reflect_action(i, f) + q_minus_one() * demazure(i, f);
}

GroupAlgebraElement poly_rep_apply(const AffineHeckeElement& a, const GroupAlgebraElement& f) {
  require_same_datum(a.datum(), f.datum());
  GroupAlgebraElement out(a.datum());
  for (const auto& [w, coeff] : a.terms()) {
    GroupAlgebraElement x = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      x = poly_rep_generator(*it, x);
    out += coeff * x;
  }
  return out;
}

DahaContext build_daha(const Gcm& gcm, bool include_center) {
  auto datum = make_datum(RootDatum::affine(gcm, include_center));
  Weight delta = *datum->delta();
  return {std::move(datum), std::move(delta), include_center};
}

std::ostream& operator<<(std::ostream& os, const AffineHeckeElement& a) {
  return os << a.to_string();
}

} // namespace kmh
