#ifndef KMH_WEYL_HPP
#define KMH_WEYL_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "kmh/root_datum.hpp"

namespace kmh {

/// Sequence of 0-based generator indices.
using Word = std::vector<int>;

/// Length first, then lexicographic. Restricted to canonical words this is
/// a total order on W refining the Bruhat order.
struct ShortLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  }
};

/// ShortLex-minimal reduced word of the product s_{w[0]} ... s_{w[k-1]}.
/// Only the GCM enters: descents are decided on root-lattice coordinates.
Word canonical_word(const Gcm& gcm, std::span<const int> word);

/// True iff l(s_i w) < l(w), for a reduced word w.
bool is_left_descent(const Gcm& gcm, std::span<const int> word, int i);

/// Canonical word of s_i w together with whether the length went up.
struct GeneratorStep {
  Word word;
  bool up;
};
GeneratorStep left_step(const Gcm& gcm, int i, const Word& canonical);

/// Element of the Weyl group in canonical form.
class WeylElement {
public:
  static WeylElement identity(Datum datum);
  static WeylElement generator(Datum datum, int i);
  /// Canonical form of the product of the given generators. Indices are
  /// 0-based; throws InvalidArgument when out of range.
  static WeylElement from_word(Datum datum, std::span<const int> word);

  const Datum& datum() const { return datum_; }
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }

  WeylElement inverse() const;
  std::vector<int> left_descents() const;
  std::vector<int> right_descents() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.word_ == b.word_ && same_datum(a.datum_, b.datum_);
  }

private:
  WeylElement(Datum d, Word w) : datum_(std::move(d)), word_(std::move(w)) {}

  Datum datum_;
  Word word_;
};

WeylElement multiply(const WeylElement& u, const WeylElement& v);

/// w(lambda): reflections applied rightmost letter first.
Weight act(const WeylElement& w, const Weight& lambda);
Weight act_word(const RootDatum& datum, std::span<const int> word, const Weight& lambda);

bool bruhat_leq(const WeylElement& u, const WeylElement& w);
bool total_order_leq(const WeylElement& u, const WeylElement& w);

/// All elements of length <= max_length in total order.
std::vector<WeylElement> enumerate_up_to_length(const Datum& datum, std::size_t max_length);

/// Every reduced word of w (exponential in l(w); desk scale only).
std::vector<Word> reduced_words(const WeylElement& w);

/// |{beta > 0 real : w(beta) < 0}| for w the product of an arbitrary word.
std::size_t inversion_count(const Gcm& gcm, std::span<const int> word);

} // namespace kmh

#endif // KMH_WEYL_HPP
