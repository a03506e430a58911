#ifndef KMH_AFFINE_HECKE_HPP
#define KMH_AFFINE_HECKE_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "kmh/group_algebra.hpp"
#include "kmh/hecke.hpp"
#include "kmh/weyl.hpp"

namespace kmh {

/// Element of H^ = H (x) Z[q,q^-1][X] in the normal form sum_w f_w T_w,
/// group-algebra coefficients on the left.
class AffineHeckeElement {
public:
  using Terms = std::map<Word, GroupAlgebraElement, ShortLexLess>;

  explicit AffineHeckeElement(Datum datum) : datum_(std::move(datum)) {}

  static AffineHeckeElement zero(Datum datum) { return AffineHeckeElement(std::move(datum)); }
  static AffineHeckeElement one(Datum datum);
  /// f T_w.
  static AffineHeckeElement term(const GroupAlgebraElement& f, const WeylElement& w);
  static AffineHeckeElement generator(Datum datum, int i);

  const Datum& datum() const { return datum_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GroupAlgebraElement coeff(const Word& w) const;

  /// Adds f T_w; `w` must be canonical.
  void add_term(const Word& w, const GroupAlgebraElement& f);

  AffineHeckeElement operator-() const;
  AffineHeckeElement& operator+=(const AffineHeckeElement& o);
  AffineHeckeElement& operator-=(const AffineHeckeElement& o);
  AffineHeckeElement& operator*=(const Laurent& c);

  friend AffineHeckeElement operator+(AffineHeckeElement a, const AffineHeckeElement& b) {
    return a += b;
  }
  friend AffineHeckeElement operator-(AffineHeckeElement a, const AffineHeckeElement& b) {
    return a -= b;
  }
  friend AffineHeckeElement operator*(AffineHeckeElement a, const Laurent& c) { return a *= c; }
  friend AffineHeckeElement operator*(const Laurent& c, AffineHeckeElement a) { return a *= c; }

  friend bool operator==(const AffineHeckeElement& a, const AffineHeckeElement& b) {
    return a.terms_ == b.terms_ && same_datum(a.datum_, b.datum_);
  }

  std::string to_string() const;

private:
  Datum datum_;
  Terms terms_;
};

/// f T_e.
AffineHeckeElement embed_poly(const GroupAlgebraElement& f);
/// sum a_w T_w with constant coefficients.
AffineHeckeElement embed_hecke(const HeckeElement& h);
/// e^lambda T_e.
AffineHeckeElement theta(const Datum& datum, const Weight& lambda);

/// Normal form of T_{s_i} f = (s_i f) T_{s_i} + (q-1) demazure(i, f) T_e.
AffineHeckeElement commute_gen_past(int i, const GroupAlgebraElement& f);

/// T_{s_i} a.
AffineHeckeElement mul_gen_left(int i, const AffineHeckeElement& a);

/// Normal form of T_w f computed along an arbitrary reduced word of w
/// (rightmost letter first). Used to test confluence.
AffineHeckeElement reduce_word_times(std::span<const int> word, const GroupAlgebraElement& f);

AffineHeckeElement multiply(const AffineHeckeElement& a, const AffineHeckeElement& b);
AffineHeckeElement operator*(const AffineHeckeElement& a, const AffineHeckeElement& b);

/// Anti-automorphism f T_w -> T_{w^-1} f.
AffineHeckeElement anti_involution(const AffineHeckeElement& a);

/// Coefficients g_u with a = sum_u T_u g_u (group algebra on the right).
AffineHeckeElement::Terms right_form(const AffineHeckeElement& a);

/// f T_s - T_s (s f) - (q-1) demazure(i, f), computed by the engine. Zero iff
/// the cross relation holds for this f.
AffineHeckeElement cross_relation_defect(int i, const GroupAlgebraElement& f);

/// Polynomial representation H^ (x)_H triv on Z[q,q^-1][X]:
/// T_i f = q (s_i f) + (q-1) demazure(i, f), e^lambda f = e^lambda f.
GroupAlgebraElement poly_rep_generator(int i, const GroupAlgebraElement& f);
GroupAlgebraElement poly_rep_apply(const AffineHeckeElement& a, const GroupAlgebraElement& f);

/// H^ over an affine GCM, with the lattice of rank l+1 (no center) or l+2.
struct DahaContext {
  Datum datum;
  Weight delta;
  bool include_center;
};

DahaContext build_daha(const Gcm& gcm, bool include_center);

std::ostream& operator<<(std::ostream& os, const AffineHeckeElement& a);

} // namespace kmh

#endif // KMH_AFFINE_HECKE_HPP
