#ifndef KMH_PRINCIPAL_SERIES_HPP
#define KMH_PRINCIPAL_SERIES_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

#include "kmh/affine_hecke.hpp"

namespace kmh {

/// Character of X with rational values on the coordinate basis, together
/// with a rational specialization q0 of q.
class Character {
public:
  /// Throws InvalidArgument on a zero value or a wrong number of values, and
  /// BadParameter when q0 = 0.
  Character(Datum datum, std::vector<mpq_class> values, mpq_class q0);

  const Datum& datum() const { return datum_; }
  const std::vector<mpq_class>& values() const { return values_; }
  const mpq_class& q0() const { return q0_; }

  mpq_class operator()(const Weight& lambda) const;
  mpq_class operator()(const Laurent& c) const;
  mpq_class operator()(const GroupAlgebraElement& f) const;

private:
  Datum datum_;
  std::vector<mpq_class> values_;
  mpq_class q0_;
};

/// Finitely supported vector over the basis {T_w (x) 1}.
using ModuleVector = std::map<Word, mpq_class, ShortLexLess>;

/// M_chi = H^ (x)_{Z[X]} chi with basis T_w (x) 1. On T_w (x) 1, Theta_lambda
/// acts with diagonal entry chi(w^{-1}(lambda)) plus Bruhat-lower terms.
class PrincipalSeries {
public:
  /// Throws BadParameter when q0 is 0 or +-1, or chi(beta) is 1 or q0^{+-1}
  /// for a real root beta = w(alpha_i) with l(w) <= root_check_length.
  explicit PrincipalSeries(Character chi, std::size_t root_check_length = 3);

  const Character& character() const { return chi_; }

  /// a . (T_w (x) 1).
  ModuleVector apply_basis(const AffineHeckeElement& a, const Word& w) const;
  ModuleVector apply(const AffineHeckeElement& a, const ModuleVector& v) const;

private:
  Character chi_;
};

ModuleVector principal_series_apply(const Character& chi, const AffineHeckeElement& a,
                                    const ModuleVector& v);

} // namespace kmh

#endif // KMH_PRINCIPAL_SERIES_HPP
