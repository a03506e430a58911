#include "kmh/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

#include "kmh/checked.hpp"

namespace kmh {

Laurent::Laurent(std::int64_t constant) {
  if (constant != 0)
    terms_.emplace_back(0, constant);
}

Laurent Laurent::q_pow(int exponent, std::int64_t coeff) {
  if (coeff == 0)
    return {};
  return Laurent(std::vector<Term>{{exponent, coeff}});
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  for (const auto& [e, c] : terms) {
    if (!out.empty() && out.back().first == e)
      out.back().second = checked_add(out.back().second, c);
    else
      out.emplace_back(e, c);
    if (out.back().second == 0)
      out.pop_back();
  }
  return Laurent(std::move(out));
}

std::int64_t Laurent::coeff(int exponent) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const Term& t, int e) { return t.first < e; });
  return (it != terms_.end() && it->first == exponent) ? it->second : 0;
}

int Laurent::min_degree() const {
  assert(!is_zero());
  return terms_.front().first;
}

int Laurent::max_degree() const {
  assert(!is_zero());
  return terms_.back().first;
}

Laurent Laurent::bar() const {
  std::vector<Term> out(terms_.rbegin(), terms_.rend());
  for (auto& t : out)
    t.first = -t.first;
  return Laurent(std::move(out));
}

Laurent Laurent::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out)
    t.second = checked_sub(0, t.second);
  return Laurent(std::move(out));
}

Laurent Laurent::merge(const Laurent& a, const Laurent& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      out.emplace_back(j->first, subtract ? checked_sub(0, j->second) : j->second);
      ++j;
    } else {
      auto c = subtract ? checked_sub(i->second, j->second)
                        : checked_add(i->second, j->second);
      if (c != 0)
        out.emplace_back(i->first, c);
      ++i;
      ++j;
    }
  }
  return Laurent(std::move(out));
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero())
    return *this;
  return *this = merge(*this, o, false);
}

Laurent& Laurent::operator-=(const Laurent& o) {
  if (o.is_zero())
    return *this;
  return *this = merge(*this, o, true);
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1)
    return Laurent::q_pow(a.terms_[0].first + b.terms_[0].first,
                          checked_mul(a.terms_[0].second, b.terms_[0].second));
  // Dense convolution over the exponent window.
  int lo = a.min_degree() + b.min_degree();
  int hi = a.max_degree() + b.max_degree();
  std::vector<std::int64_t> acc(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      auto& slot = acc[static_cast<std::size_t>(ea + eb - lo)];
      slot = checked_add(slot, checked_mul(ca, cb));
    }
  std::vector<Laurent::Term> out;
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (acc[k] != 0)
      out.emplace_back(lo + static_cast<int>(k), acc[k]);
  return Laurent(std::move(out));
}

std::string Laurent::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    first = false;
    std::int64_t mag = c < 0 ? -c : c;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1)
      os << mag << "*";
    os << "q";
    if (e != 1)
      os << "^" << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Laurent& x) {
  return os << x.to_string();
}

} // namespace kmh
