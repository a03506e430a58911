#include "kmh/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "kmh/errors.hpp"

namespace kmh {

namespace {

// Root coordinates grow exponentially in the length for indefinite types;
// 128 bits keeps words of length ~90 exact there.
using Wide = __int128;
using RootVec = std::vector<Wide>;

Wide wide_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("root coordinate overflow");
  return r;
}

Wide wide_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("root coordinate overflow");
  return r;
}

// s_i acting on a root-lattice vector: beta - <beta, coroot_i> alpha_i.
void reflect_root(const Gcm& gcm, int i, RootVec& beta) {
  Wide p = 0;
  for (int j = 0; j < gcm.size(); ++j)
    if (beta[j] != 0)
      p = wide_add(p, wide_mul(beta[j], gcm(i, j)));
  beta[i] = wide_add(beta[i], wide_mul(p, -1));
}

bool is_negative(const RootVec& beta) {
  for (auto x : beta)
    if (x != 0)
      return x < 0;
  return false;
}

RootVec simple(int n, int j) {
  RootVec v(static_cast<std::size_t>(n), 0);
  v[j] = 1;
  return v;
}

// w^{-1}(alpha_j) for w the product of `word`.
RootVec inverse_image(const Gcm& gcm, std::span<const int> word, int j) {
  auto v = simple(gcm.size(), j);
  for (int letter : word)
    reflect_root(gcm, letter, v);
  return v;
}

void check_indices(const Gcm& gcm, std::span<const int> word) {
  for (int i : word)
    if (i < 0 || i >= gcm.size())
      throw InvalidArgument("generator index " + std::to_string(i) + " out of range");
}

} // namespace

Word canonical_word(const Gcm& gcm, std::span<const int> word) {
  const int n = gcm.size();
  // columns[m] = w^{-1}(alpha_m)
  std::vector<RootVec> columns;
  columns.reserve(n);
  for (int m = 0; m < n; ++m)
    columns.push_back(inverse_image(gcm, word, m));

  Word out;
  out.reserve(word.size());
  for (;;) {
    int j = 0;
    while (j < n && !is_negative(columns[j]))
      ++j;
    if (j == n)
      break;
    out.push_back(j);
    // w <- s_j w, so w^{-1}(alpha_m) <- w^{-1}(alpha_m) - a_jm w^{-1}(alpha_j).
    const RootVec pivot = columns[j];
    for (int m = 0; m < n; ++m) {
      auto a = gcm(j, m);
      if (a == 0)
        continue;
      for (int k = 0; k < n; ++k)
        columns[m][k] = wide_add(columns[m][k], wide_mul(-a, pivot[k]));
    }
  }
  return out;
}

bool is_left_descent(const Gcm& gcm, std::span<const int> word, int i) {
  return is_negative(inverse_image(gcm, word, i));
}

GeneratorStep left_step(const Gcm& gcm, int i, const Word& canonical) {
  Word w;
  w.reserve(canonical.size() + 1);
  w.push_back(i);
  w.insert(w.end(), canonical.begin(), canonical.end());
  if (is_left_descent(gcm, canonical, i))
    return {canonical_word(gcm, w), false};
  // Length goes up; only the ShortLex rearrangement remains.
  if (canonical.empty() || i <= canonical.front())
    return {std::move(w), true};
  return {canonical_word(gcm, w), true};
}

WeylElement WeylElement::identity(Datum datum) { return WeylElement(std::move(datum), {}); }

WeylElement WeylElement::generator(Datum datum, int i) {
  const int one[] = {i};
  return from_word(std::move(datum), one);
}

WeylElement WeylElement::from_word(Datum datum, std::span<const int> word) {
  check_indices(datum->gcm(), word);
  auto w = canonical_word(datum->gcm(), word);
  return WeylElement(std::move(datum), std::move(w));
}

WeylElement WeylElement::inverse() const {
  Word rev(word_.rbegin(), word_.rend());
  return from_word(datum_, rev);
}

std::vector<int> WeylElement::left_descents() const {
  std::vector<int> out;
  for (int i = 0; i < datum_->size(); ++i)
    if (is_left_descent(datum_->gcm(), word_, i))
      out.push_back(i);
  return out;
}

std::vector<int> WeylElement::right_descents() const { return inverse().left_descents(); }

WeylElement multiply(const WeylElement& u, const WeylElement& v) {
  require_same_datum(u.datum(), v.datum());
  Word w = u.word();
  w.insert(w.end(), v.word().begin(), v.word().end());
  return WeylElement::from_word(u.datum(), w);
}

Weight act_word(const RootDatum& datum, std::span<const int> word, const Weight& lambda) {
  Weight out = lambda;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = datum.reflect(*it, out);
  return out;
}

Weight act(const WeylElement& w, const Weight& lambda) {
  return act_word(*w.datum(), w.word(), lambda);
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  require_same_datum(u.datum(), w.datum());
  const Gcm& gcm = u.datum()->gcm();
  Word x = u.word();
  std::span<const int> y = w.word();
  for (;;) {
    if (x.size() > y.size())
      return false;
    if (y.empty())
      return x.empty();
    // The tail of a ShortLex-minimal word is ShortLex-minimal for s*w.
    const int s = y.front();
    y = y.subspan(1);
    if (is_left_descent(gcm, x, s))
      x = left_step(gcm, s, x).word;
  }
}

bool total_order_leq(const WeylElement& u, const WeylElement& w) {
  require_same_datum(u.datum(), w.datum());
  return !ShortLexLess{}(w.word(), u.word());
}

std::vector<WeylElement> enumerate_up_to_length(const Datum& datum, std::size_t max_length) {
  const Gcm& gcm = datum->gcm();
  std::set<Word, ShortLexLess> all{Word{}};
  std::set<Word, ShortLexLess> layer{Word{}};
  for (std::size_t len = 0; len < max_length && !layer.empty(); ++len) {
    std::set<Word, ShortLexLess> next;
    for (const auto& w : layer)
      for (int i = 0; i < gcm.size(); ++i) {
        auto step = left_step(gcm, i, w);
        if (step.up)
          next.insert(std::move(step.word));
      }
    all.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<WeylElement> out;
  out.reserve(all.size());
  for (const auto& w : all)
    out.push_back(WeylElement::from_word(datum, w));
  return out;
}

std::vector<Word> reduced_words(const WeylElement& w) {
  const Gcm& gcm = w.datum()->gcm();
  std::vector<Word> out;
  if (w.is_identity()) {
    out.emplace_back();
    return out;
  }
  for (int i : w.left_descents()) {
    auto rest = WeylElement::from_word(w.datum(), left_step(gcm, i, w.word()).word);
    for (auto& tail : reduced_words(rest)) {
      Word full{i};
      full.insert(full.end(), tail.begin(), tail.end());
      out.push_back(std::move(full));
    }
  }
  return out;
}

std::size_t inversion_count(const Gcm& gcm, std::span<const int> word) {
  // Every inversion of w is +-s_{ik}...s_{i(j+1)}(alpha_{ij}) for some j,
  // whether or not the word is reduced; filter candidates by the definition.
  std::set<RootVec> inversions;
  for (std::size_t j = 0; j < word.size(); ++j) {
    auto beta = simple(gcm.size(), word[j]);
    for (std::size_t t = j + 1; t < word.size(); ++t)
      reflect_root(gcm, word[t], beta);
    if (is_negative(beta))
      for (auto& x : beta)
        x = -x;
    auto image = beta;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      reflect_root(gcm, *it, image);
    if (is_negative(image))
      inversions.insert(beta);
  }
  return inversions.size();
}

} // namespace kmh
