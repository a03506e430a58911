#ifndef KMH_LAURENT_HPP
#define KMH_LAURENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace kmh {

/// Element of Z[q, q^-1], stored as (exponent, coefficient) pairs with
/// strictly increasing exponents and no zero coefficients.
class Laurent {
public:
  using Term = std::pair<int, std::int64_t>;

  Laurent() = default;
  Laurent(std::int64_t constant); // NOLINT(google-explicit-constructor)

  static Laurent q_pow(int exponent, std::int64_t coeff = 1);
  static Laurent q() { return q_pow(1); }

  /// Builds from unsorted terms; duplicates are summed and zeros dropped.
  static Laurent from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::int64_t coeff(int exponent) const;
  int min_degree() const; // requires !is_zero()
  int max_degree() const; // requires !is_zero()

  /// q -> q^-1.
  Laurent bar() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent&, const Laurent&) = default;

  std::string to_string() const;

private:
  explicit Laurent(std::vector<Term> canonical) : terms_(std::move(canonical)) {}
  static Laurent merge(const Laurent& a, const Laurent& b, bool subtract);

  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& x);

} // namespace kmh

#endif // KMH_LAURENT_HPP
