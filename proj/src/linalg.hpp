// Exact rational linear algebra used by the realization code.
#ifndef KMH_SRC_LINALG_HPP
#define KMH_SRC_LINALG_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "kmh/root_datum.hpp"

namespace kmh::detail {

using QMatrix = std::vector<std::vector<mpq_class>>;

QMatrix to_rational(const IntMatrix& m);

/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> row_reduce(QMatrix& m);

int rank(const IntMatrix& m);

/// Basis of {x : m x = 0}.
std::vector<std::vector<mpq_class>> kernel(const IntMatrix& m);

/// Scales a rational vector to a primitive integer vector (same direction).
std::vector<std::int64_t> primitive_integer(const std::vector<mpq_class>& v);

IntMatrix transpose(const IntMatrix& m);

} // namespace kmh::detail

#endif
