#include "kmh/hecke.hpp"

#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include "kmh/errors.hpp"

namespace kmh {

HeckeElement HeckeElement::one(Datum datum) {
  HeckeElement h(std::move(datum));
  h.add_term({}, 1);
  return h;
}

HeckeElement HeckeElement::basis(const WeylElement& w, Laurent c) {
  HeckeElement h(w.datum());
  h.add_term(w.word(), c);
  return h;
}

HeckeElement HeckeElement::generator(Datum datum, int i) {
  auto s = WeylElement::generator(datum, i);
  return basis(s);
}

Laurent HeckeElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Laurent{} : it->second;
}

void HeckeElement::add_term(const Word& w, const Laurent& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted)
    return;
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement out(datum_);
  for (const auto& [w, c] : terms_)
    out.terms_.emplace(w, -c);
  return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  require_same_datum(datum_, o.datum_);
  for (const auto& [w, c] : o.terms_)
    add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  require_same_datum(datum_, o.datum_);
  for (const auto& [w, c] : o.terms_)
    add_term(w, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Laurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_)
    x *= c;
  return *this;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c << ")T[";
    for (std::size_t k = 0; k < w.size(); ++k)
      os << (k ? "," : "") << w[k];
    os << "]";
  }
  return os.str();
}

HeckeElement mul_gen_left(int i, const HeckeElement& h) {
  const Gcm& gcm = h.datum()->gcm();
  if (i < 0 || i >= gcm.size())
    throw InvalidArgument("generator index " + std::to_string(i) + " out of range");
  static const Laurent q = Laurent::q();
  static const Laurent q_minus_one = Laurent::q() - 1;
  HeckeElement out(h.datum());
  for (const auto& [w, c] : h.terms()) {
    auto step = left_step(gcm, i, w);
    if (step.up) {
      out.add_term(step.word, c);
    } else {
      // T_s T_w = q T_{sw} + (q-1) T_w when l(sw) < l(w).
      out.add_term(step.word, q * c);
      out.add_term(w, q_minus_one * c);
    }
  }
  return out;
}

HeckeElement anti_involution(const HeckeElement& h) {
  const Gcm& gcm = h.datum()->gcm();
  HeckeElement out(h.datum());
  for (const auto& [w, c] : h.terms()) {
    Word rev(w.rbegin(), w.rend());
    out.add_term(canonical_word(gcm, rev), c);
  }
  return out;
}

HeckeElement mul_gen_right(const HeckeElement& h, int i) {
  return anti_involution(mul_gen_left(i, anti_involution(h)));
}

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
  require_same_datum(a.datum(), b.datum());
  HeckeElement out(a.datum());
  for (const auto& [w, c] : a.terms()) {
    HeckeElement x = b;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      x = mul_gen_left(*it, x);
    out += c * x;
  }
  return out;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return multiply(a, b); }

HeckeElement cprime_gen(const Datum& datum, int i) {
  return HeckeElement::generator(datum, i) + HeckeElement::one(datum);
}

HeckeElement bar_involution(const HeckeElement& h) {
  static const Laurent q_inv = Laurent::q_pow(-1);
  static const Laurent q_inv_minus_one = Laurent::q_pow(-1) - 1;
  HeckeElement out(h.datum());
  for (const auto& [w, c] : h.terms()) {
    // bar(T_w) = T_{s1}^-1 ... T_{sk}^-1, T_s^-1 = q^-1 T_s + (q^-1 - 1).
    HeckeElement x = HeckeElement::one(h.datum());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      x = q_inv * mul_gen_left(*it, x) + q_inv_minus_one * x;
    out += c.bar() * x;
  }
  return out;
}

std::vector<Word> bruhat_interval(const WeylElement& w, std::size_t max_interval) {
  const Gcm& gcm = w.datum()->gcm();
  // {y <= s v} = {y <= v} u s{y <= v} for s v > v.
  std::set<Word, ShortLexLess> interval{Word{}};
  const Word& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::vector<Word> shifted;
    shifted.reserve(interval.size());
    for (const auto& y : interval)
      shifted.push_back(left_step(gcm, *it, y).word);
    interval.insert(shifted.begin(), shifted.end());
    if (interval.size() > max_interval)
      throw IntervalTooLarge("Bruhat interval below w exceeds " +
                             std::to_string(max_interval) + " elements");
  }
  return {interval.begin(), interval.end()};
}

HeckeElement kl_basis(const WeylElement& w, std::size_t max_interval) {
  bruhat_interval(w, max_interval);
  const Datum& datum = w.datum();
  const Gcm& gcm = datum->gcm();
  std::map<Word, HeckeElement, ShortLexLess> memo;

  std::function<const HeckeElement&(const Word&)> compute = [&](const Word& x) -> const HeckeElement& {
    if (auto it = memo.find(x); it != memo.end())
      return it->second;
    if (x.empty())
      return memo.emplace(x, HeckeElement::one(datum)).first->second;

    const int s = x.front();
    const Word v(x.begin() + 1, x.end());
    const HeckeElement cv = compute(v);
    // C'_s C'_v = C'_{sv} + sum_{z < v, sz < z} mu(z,v) q^{(l(sv)-l(z))/2} C'_z.
    HeckeElement result = mul_gen_left(s, cv) + cv;
    for (const auto& [z, p] : cv.terms()) {
      if (z.size() >= v.size() || (v.size() - z.size()) % 2 == 0)
        continue;
      if (!is_left_descent(gcm, z, s))
        continue;
      const int top = static_cast<int>((v.size() - z.size() - 1) / 2);
      const auto mu = p.coeff(top);
      if (mu == 0)
        continue;
      const int shift = static_cast<int>((x.size() - z.size()) / 2);
      result -= Laurent::q_pow(shift, mu) * compute(z);
    }
    return memo.emplace(x, std::move(result)).first->second;
  };
  return compute(w.word());
}

std::ostream& operator<<(std::ostream& os, const HeckeElement& h) {
  return os << h.to_string();
}

} // namespace kmh
