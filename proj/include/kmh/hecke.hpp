#ifndef KMH_HECKE_HPP
#define KMH_HECKE_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "kmh/laurent.hpp"
#include "kmh/root_datum.hpp"
#include "kmh/weyl.hpp"

namespace kmh {

/// Element of the Hecke algebra H: finite sum of a_w T_w over canonical
/// words, a_w in Z[q, q^-1], stored in total (ShortLex) order.
class HeckeElement {
public:
  using Terms = std::map<Word, Laurent, ShortLexLess>;

  explicit HeckeElement(Datum datum) : datum_(std::move(datum)) {}

  static HeckeElement zero(Datum datum) { return HeckeElement(std::move(datum)); }
  static HeckeElement one(Datum datum);
  /// c T_w.
  static HeckeElement basis(const WeylElement& w, Laurent c = 1);
  static HeckeElement generator(Datum datum, int i);

  const Datum& datum() const { return datum_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(const Word& w) const;

  /// Adds c T_w; `w` must already be canonical.
  void add_term(const Word& w, const Laurent& c);

  HeckeElement operator-() const;
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const Laurent& c);

  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(HeckeElement a, const Laurent& c) { return a *= c; }
  friend HeckeElement operator*(const Laurent& c, HeckeElement a) { return a *= c; }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.terms_ == b.terms_ && same_datum(a.datum_, b.datum_);
  }

  std::string to_string() const;

private:
  Datum datum_;
  Terms terms_;
};

/// T_{s_i} h.
HeckeElement mul_gen_left(int i, const HeckeElement& h);
/// h T_{s_i}, through the anti-automorphism T_w -> T_{w^-1}.
HeckeElement mul_gen_right(const HeckeElement& h, int i);

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b);
HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);

/// T_w -> T_{w^-1}, R-linear.
HeckeElement anti_involution(const HeckeElement& h);

/// C'_i = T_{s_i} + T_e.
HeckeElement cprime_gen(const Datum& datum, int i);

/// q -> q^-1, T_w -> (T_{w^-1})^-1.
HeckeElement bar_involution(const HeckeElement& h);

/// C'_w = sum_{y <= w} P_{y,w}(q) T_y with the unnormalized polynomials
/// P_{y,w}: P_{w,w} = 1, deg P_{y,w} <= (l(w)-l(y)-1)/2, and
/// bar(C'_w) = q^{-l(w)} C'_w. Throws IntervalTooLarge when the Bruhat
/// interval below w exceeds `max_interval`.
HeckeElement kl_basis(const WeylElement& w, std::size_t max_interval = 10000);

/// {y : y <= w}, in total order. Throws IntervalTooLarge past the cap.
std::vector<Word> bruhat_interval(const WeylElement& w, std::size_t max_interval = 10000);

std::ostream& operator<<(std::ostream& os, const HeckeElement& h);

} // namespace kmh

#endif // KMH_HECKE_HPP
