#include "kmh/group_algebra.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kmh/errors.hpp"

namespace kmh {

GroupAlgebraElement::GroupAlgebraElement(Datum datum, Terms terms) : datum_(std::move(datum)) {
  for (auto& [lambda, c] : terms)
    add_term(lambda, c);
}

GroupAlgebraElement GroupAlgebraElement::one(Datum datum) {
  return scalar(std::move(datum), 1);
}

GroupAlgebraElement GroupAlgebraElement::scalar(Datum datum, Laurent c) {
  Weight zero(static_cast<std::size_t>(datum->lattice_rank()), 0);
  return monomial(std::move(datum), std::move(zero), std::move(c));
}

GroupAlgebraElement GroupAlgebraElement::monomial(Datum datum, Weight lambda, Laurent c) {
  GroupAlgebraElement out(std::move(datum));
  out.add_term(lambda, c);
  return out;
}

Laurent GroupAlgebraElement::coeff(const Weight& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Laurent{} : it->second;
}

void GroupAlgebraElement::add_term(const Weight& lambda, const Laurent& c) {
  if (c.is_zero())
    return;
  if (static_cast<int>(lambda.size()) != datum_->lattice_rank())
    throw InvalidArgument("weight has " + std::to_string(lambda.size()) +
                          " coordinates, lattice rank is " +
                          std::to_string(datum_->lattice_rank()));
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (inserted)
    return;
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement out(datum_);
  for (const auto& [lambda, c] : terms_)
    out.terms_.emplace(lambda, -c);
  return out;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  require_same_datum(datum_, o.datum_);
  for (const auto& [lambda, c] : o.terms_)
    add_term(lambda, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  require_same_datum(datum_, o.datum_);
  for (const auto& [lambda, c] : o.terms_)
    add_term(lambda, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Laurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, x] : terms_)
    x *= c;
  return *this;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c << ")e^[";
    for (std::size_t k = 0; k < lambda.size(); ++k)
      os << (k ? "," : "") << lambda[k];
    os << "]";
  }
  return os.str();
}

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& f, const GroupAlgebraElement& g) {
  require_same_datum(f.datum(), g.datum());
  GroupAlgebraElement out(f.datum());
  for (const auto& [lf, cf] : f.terms())
    for (const auto& [lg, cg] : g.terms())
      out.add_term(lf + lg, cf * cg);
  return out;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& f, const GroupAlgebraElement& g) {
  return ga_multiply(f, g);
}

GroupAlgebraElement w_action(const WeylElement& w, const GroupAlgebraElement& f) {
  require_same_datum(w.datum(), f.datum());
  GroupAlgebraElement out(f.datum());
  for (const auto& [lambda, c] : f.terms())
    out.add_term(act(w, lambda), c);
  return out;
}

GroupAlgebraElement reflect_action(int i, const GroupAlgebraElement& f) {
  const RootDatum& d = *f.datum();
  GroupAlgebraElement out(f.datum());
  for (const auto& [lambda, c] : f.terms())
    out.add_term(d.reflect(i, lambda), c);
  return out;
}

GroupAlgebraElement demazure(int i, const GroupAlgebraElement& f) {
  const RootDatum& d = *f.datum();
  if (i < 0 || i >= d.size())
    throw InvalidArgument("generator index " + std::to_string(i) + " out of range");
  const Weight& alpha = d.root(i);
  GroupAlgebraElement out(f.datum());
  for (const auto& [lambda, c] : f.terms()) {
    const auto n = d.pairing(lambda, i);
    if (n > 0) {
      Weight mu = lambda;
      for (std::int64_t k = 0; k < n; ++k) {
        out.add_term(mu, c);
        mu = mu - alpha;
      }
    } else if (n < 0) {
      Weight mu = lambda;
      const Laurent neg = -c;
      for (std::int64_t k = 1; k <= -n; ++k) {
        mu = mu + alpha;
        out.add_term(mu, neg);
      }
    }
  }
#ifdef KMH_CHECKED_REWRITES
  // Multiply back by (1 - e^{-alpha}) and compare with f - s_i f.
  Weight zero(alpha.size(), 0);
  GroupAlgebraElement denom = GroupAlgebraElement::monomial(f.datum(), zero, 1);
  denom.add_term(-alpha, -1);
  if (ga_multiply(denom, out) != f - reflect_action(i, f))
    throw std::logic_error("demazure: multiply-back check failed");
#endif
  return out;
}

std::ostream& operator<<(std::ostream& os, const GroupAlgebraElement& f) {
  return os << f.to_string();
}

} // namespace kmh
