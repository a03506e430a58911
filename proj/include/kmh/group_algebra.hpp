#ifndef KMH_GROUP_ALGEBRA_HPP
#define KMH_GROUP_ALGEBRA_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "kmh/laurent.hpp"
#include "kmh/root_datum.hpp"
#include "kmh/weyl.hpp"

namespace kmh {

/// Finite sum of c_lambda e^lambda with c_lambda in Z[q, q^-1] and lambda in X.
/// Terms are kept in lexicographic order of lambda, zeros never stored.
class GroupAlgebraElement {
public:
  using Terms = std::map<Weight, Laurent>;

  explicit GroupAlgebraElement(Datum datum) : datum_(std::move(datum)) {}
  GroupAlgebraElement(Datum datum, Terms terms);

  static GroupAlgebraElement zero(Datum datum) { return GroupAlgebraElement(std::move(datum)); }
  static GroupAlgebraElement one(Datum datum);
  static GroupAlgebraElement scalar(Datum datum, Laurent c);
  /// c e^lambda.
  static GroupAlgebraElement monomial(Datum datum, Weight lambda, Laurent c = 1);

  const Datum& datum() const { return datum_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(const Weight& lambda) const;

  /// Adds c e^lambda in place.
  void add_term(const Weight& lambda, const Laurent& c);

  GroupAlgebraElement operator-() const;
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator*=(const Laurent& c);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a -= b;
  }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Laurent& c) { return a *= c; }
  friend GroupAlgebraElement operator*(const Laurent& c, GroupAlgebraElement a) { return a *= c; }

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.terms_ == b.terms_ && same_datum(a.datum_, b.datum_);
  }

  std::string to_string() const;

private:
  Datum datum_;
  Terms terms_;
};

/// e^lambda e^mu = e^{lambda+mu}, extended bilinearly. Throws MixedData.
GroupAlgebraElement ga_multiply(const GroupAlgebraElement& f, const GroupAlgebraElement& g);
GroupAlgebraElement operator*(const GroupAlgebraElement& f, const GroupAlgebraElement& g);

/// e^lambda -> e^{w(lambda)}.
GroupAlgebraElement w_action(const WeylElement& w, const GroupAlgebraElement& f);
/// e^lambda -> e^{s_i(lambda)}.
GroupAlgebraElement reflect_action(int i, const GroupAlgebraElement& f);

/// (f - s_i f) / (1 - e^{-alpha_i}), by the closed monomial formula.
GroupAlgebraElement demazure(int i, const GroupAlgebraElement& f);

std::ostream& operator<<(std::ostream& os, const GroupAlgebraElement& f);

} // namespace kmh

#endif // KMH_GROUP_ALGEBRA_HPP
