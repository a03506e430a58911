#include "kmh/root_datum.hpp"

#include <gmpxx.h>

#include <deque>
#include <sstream>

#include "kmh/checked.hpp"
#include "kmh/errors.hpp"
#include "linalg.hpp"

namespace kmh {

namespace {

std::string cell(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

bool independent(const std::vector<Weight>& rows) {
  return detail::rank(rows) == static_cast<int>(rows.size());
}

std::vector<std::int64_t> positive_kernel_vector(const IntMatrix& m, const char* what) {
  auto basis = detail::kernel(m);
  if (basis.size() != 1)
    throw NotAffineType(std::string(what) + ": matrix corank is " +
                        std::to_string(basis.size()) + ", expected 1");
  auto v = detail::primitive_integer(basis[0]);
  bool all_pos = true;
  bool all_neg = true;
  for (auto x : v) {
    all_pos = all_pos && x > 0;
    all_neg = all_neg && x < 0;
  }
  if (all_neg)
    for (auto& x : v)
      x = -x;
  else if (!all_pos)
    throw NotAffineType(std::string(what) + ": kernel vector is not strictly positive");
  return v;
}

} // namespace

Gcm Gcm::validate(IntMatrix entries) {
  const std::size_t n = entries.size();
  if (n == 0)
    throw NotGCM("Cartan matrix is empty");
  for (const auto& row : entries)
    if (row.size() != n)
      throw NotGCM("Cartan matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries[i][i] != 2)
      throw NotGCM("diagonal entry " + cell(int(i), int(i)) + " is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        continue;
      if (entries[i][j] > 0)
        throw NotGCM("off-diagonal entry " + cell(int(i), int(j)) + " is positive");
      if ((entries[i][j] == 0) != (entries[j][i] == 0))
        throw NotGCM("zero pattern is not symmetric at " + cell(int(i), int(j)));
    }
  }

  // d_i a_ij = d_j a_ji, propagated along the graph of nonzero entries.
  std::vector<mpq_class> d(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (d[start] != 0)
      continue;
    d[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      auto i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || entries[i][j] == 0)
          continue;
        mpq_class want = d[i] * mpq_class(static_cast<long>(entries[i][j])) /
                         mpq_class(static_cast<long>(entries[j][i]));
        if (d[j] == 0) {
          d[j] = want;
          queue.push_back(j);
        } else if (d[j] != want) {
          throw NotSymmetrizable("no symmetrizer: inconsistent cycle through " +
                                 cell(int(i), int(j)));
        }
      }
    }
  }
  return Gcm(std::move(entries), detail::primitive_integer(d));
}

int Gcm::matrix_rank() const { return detail::rank(entries_); }

bool Gcm::is_affine() const {
  try {
    positive_kernel_vector(entries_, "affine check");
    return true;
  } catch (const NotAffineType&) {
    return false;
  }
}

std::vector<std::int64_t> null_marks(const Gcm& gcm) {
  return positive_kernel_vector(gcm.entries(), "null_marks");
}

std::vector<std::int64_t> dual_null_marks(const Gcm& gcm) {
  return positive_kernel_vector(detail::transpose(gcm.entries()), "dual_null_marks");
}

std::string to_string(Realization r) {
  switch (r) {
  case Realization::standard:
    return "standard";
  case Realization::affine_l1:
    return "affine_l1";
  case Realization::affine_l2:
    return "affine_l2";
  case Realization::custom:
    return "custom";
  }
  return "custom";
}

Realization realization_from_string(const std::string& s) {
  if (s == "standard")
    return Realization::standard;
  if (s == "affine_l1")
    return Realization::affine_l1;
  if (s == "affine_l2")
    return Realization::affine_l2;
  throw ParseError("unknown realization '" + s + "'");
}

RootDatum::RootDatum(Gcm gcm, int rank, std::vector<Weight> roots,
                     std::vector<Weight> coroots, Realization kind)
    : gcm_(std::move(gcm)), rank_(rank), roots_(std::move(roots)),
      coroots_(std::move(coroots)), kind_(kind) {
  if (gcm_.is_affine()) {
    auto marks = null_marks(gcm_);
    Weight d(static_cast<std::size_t>(rank_), 0);
    for (int j = 0; j < size(); ++j)
      d = d + scaled(roots_[j], marks[j]);
    delta_ = std::move(d);
  }
}

RootDatum RootDatum::from_vectors(const Gcm& gcm, std::vector<Weight> roots,
                                  std::vector<Weight> coroots,
                                  bool require_independent_coroots) {
  const int n = gcm.size();
  if (static_cast<int>(roots.size()) != n || static_cast<int>(coroots.size()) != n)
    throw InvalidArgument("need exactly one root and one coroot per GCM row");
  const std::size_t r = roots[0].size();
  if (static_cast<int>(r) < n)
    throw InvalidArgument("lattice rank is smaller than the GCM size");
  for (int i = 0; i < n; ++i)
    if (roots[i].size() != r || coroots[i].size() != r)
      throw InvalidArgument("root and coroot vectors must share one length");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t p = 0;
      for (std::size_t k = 0; k < r; ++k)
        p = checked_add(p, checked_mul(roots[j][k], coroots[i][k]));
      if (p != gcm(i, j))
        throw InvalidArgument("pairing <alpha_" + std::to_string(j) + ", coroot_" +
                              std::to_string(i) + "> does not reproduce the GCM");
    }
  if (!independent(roots))
    throw InvalidArgument("simple roots are linearly dependent");
  if (require_independent_coroots && !independent(coroots))
    throw InvalidArgument("simple coroots are linearly dependent");
  return RootDatum(gcm, static_cast<int>(r), std::move(roots), std::move(coroots),
                   Realization::custom);
}

RootDatum RootDatum::standard(const Gcm& gcm) {
  const int n = gcm.size();
  const int extra = n - gcm.matrix_rank();
  const int r = n + extra;

  std::vector<Weight> roots(n, Weight(static_cast<std::size_t>(r), 0));
  std::vector<Weight> coroots(n, Weight(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < n; ++i) {
    coroots[i][i] = 1;
    for (int j = 0; j < n; ++j)
      roots[j][i] = gcm(i, j);
  }

  // Greedily append unit columns e_m until the root matrix has rank n.
  IntMatrix columns = detail::transpose([&] {
    IntMatrix m(n, std::vector<std::int64_t>(n));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        m[j][i] = gcm(i, j);
    return m;
  }());
  int slot = n;
  int current = detail::rank(columns);
  for (int m = 0; m < n && slot < r; ++m) {
    std::vector<std::int64_t> unit(n, 0);
    unit[m] = 1;
    columns.push_back(unit);
    int next = detail::rank(columns);
    if (next == current) {
      columns.pop_back();
      continue;
    }
    current = next;
    roots[m][slot++] = 1;
  }

  auto out = from_vectors(gcm, std::move(roots), std::move(coroots));
  out.kind_ = Realization::standard;
  return out;
}

RootDatum RootDatum::affine(const Gcm& gcm, bool include_center) {
  if (!gcm.is_affine())
    throw NotAffineType("GCM is not of affine type (need corank 1 and a positive null vector)");
  const int n = gcm.size();
  const auto dual = dual_null_marks(gcm);
  int k = -1;
  for (int i = 0; i < n && k < 0; ++i)
    if (dual[i] == 1)
      k = i;
  if (k < 0)
    throw NotAffineType("no node with dual mark 1");

  // Coordinates 0..n-2: classical directions (nodes other than k), n-1: degree,
  // n: level (only with the center).
  const int r = include_center ? n + 1 : n;
  std::vector<int> slot(n, -1);
  for (int i = 0, s = 0; i < n; ++i)
    if (i != k)
      slot[i] = s++;

  std::vector<Weight> roots(n, Weight(static_cast<std::size_t>(r), 0));
  std::vector<Weight> coroots(n, Weight(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < n; ++i) {
    if (i == k)
      continue;
    coroots[i][slot[i]] = 1;
    coroots[k][slot[i]] = -dual[i];
    for (int j = 0; j < n; ++j)
      roots[j][slot[i]] = gcm(i, j);
  }
  roots[k][n - 1] = 1;
  if (include_center)
    coroots[k][n] = 1;

  auto out = from_vectors(gcm, std::move(roots), std::move(coroots), include_center);
  out.kind_ = include_center ? Realization::affine_l2 : Realization::affine_l1;
  return out;
}

RootDatum RootDatum::realize(const Gcm& gcm, Realization kind) {
  switch (kind) {
  case Realization::standard:
    return standard(gcm);
  case Realization::affine_l1:
    return affine(gcm, false);
  case Realization::affine_l2:
    return affine(gcm, true);
  case Realization::custom:
    break;
  }
  throw InvalidArgument("custom realizations need explicit roots and coroots");
}

std::int64_t RootDatum::pairing(const Weight& lambda, int i) const {
  const auto& c = coroots_[i];
  std::int64_t p = 0;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0)
      p = checked_add(p, checked_mul(lambda[k], c[k]));
  return p;
}

Weight RootDatum::reflect(int i, const Weight& lambda) const {
  auto n = pairing(lambda, i);
  if (n == 0)
    return lambda;
  return lambda - scaled(roots_[i], n);
}

void require_same_datum(const Datum& a, const Datum& b) {
  if (!same_datum(a, b))
    throw MixedData();
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    out[k] = checked_add(a[k], b[k]);
  return out;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    out[k] = checked_sub(a[k], b[k]);
  return out;
}

Weight operator-(const Weight& a) {
  Weight out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    out[k] = checked_sub(0, a[k]);
  return out;
}

Weight scaled(const Weight& a, std::int64_t k) {
  Weight out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = checked_mul(a[i], k);
  return out;
}

} // namespace kmh
