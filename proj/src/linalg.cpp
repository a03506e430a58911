#include "linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace kmh::detail {

QMatrix to_rational(const IntMatrix& m) {
  QMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto x : m[i])
      out[i].emplace_back(static_cast<long>(x));
  return out;
}

std::vector<int> row_reduce(QMatrix& m) {
  std::vector<int> pivots;
  if (m.empty())
    return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(m[p], m[r]);
    mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r])
      x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      mpq_class f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        m[i][k] -= f * m[r][k];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(const IntMatrix& m) {
  auto q = to_rational(m);
  return static_cast<int>(row_reduce(q).size());
}

std::vector<std::vector<mpq_class>> kernel(const IntMatrix& m) {
  auto q = to_rational(m);
  auto pivots = row_reduce(q);
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots)
    is_pivot[p] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<mpq_class> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -q[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::int64_t> primitive_integer(const std::vector<mpq_class>& v) {
  mpz_class den = 1;
  for (const auto& x : v)
    den = lcm(den, mpz_class(x.get_den()));
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class k = x.get_num() * (den / x.get_den());
    g = gcd(g, k);
    ints.push_back(k);
  }
  std::vector<std::int64_t> out;
  for (auto& k : ints) {
    if (g != 0)
      k /= g;
    if (!k.fits_slong_p())
      throw std::overflow_error("integer vector entry out of range");
    out.push_back(k.get_si());
  }
  return out;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty())
    return {};
  IntMatrix t(m[0].size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      t[j][i] = m[i][j];
  return t;
}

} // namespace kmh::detail
