#ifndef KMH_CLI_HPP
#define KMH_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "kmh/serialize.hpp"
#include "kmh/verify.hpp"

namespace kmh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string cartan_path;
  /// Overrides the "realization" field of the Cartan file when set.
  std::optional<Realization> realization;
  std::size_t max_length = 6;
  int max_coord = 3;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::string output; // empty: standard output
  Execution exec = Execution::parallel;
};

/// Reads {"cartan": [[...]], "realization": "..."} and builds the datum.
Datum load_datum(const std::string& cartan_path, std::optional<Realization> override_kind = {});
Datum datum_from_json(const json& j, std::optional<Realization> override_kind = {});

struct VerifyResult {
  json report;
  int exit_code;
};

/// Runs the invariant suite. The report depends only on the config.
VerifyResult cmd_verify(const RunConfig& config);
VerifyResult cmd_verify(const Datum& datum, const RunConfig& config);

/// Evaluates an infix expression in H^ and returns its normal form.
///
/// Grammar: sums and differences of products of factors; a factor is an
/// integer, `q`, `q^k`, `Ts<i>`, `T[i,j,...]`, `theta(<weight>)`, a name
/// from `defs["elements"]`, or a parenthesized expression. Weights are
/// integer combinations of `w<k>` (k-th lattice basis vector), `a<i>`
/// (simple root), `d` (null root), `[x,y,...]`, or names from
/// `defs["weights"]`.
AffineHeckeElement evaluate_expression(const Datum& datum, const json& defs,
                                       const std::string& expression);

json cmd_compute(const Datum& datum, const json& defs, const std::string& expression);

} // namespace kmh::cli

#endif // KMH_CLI_HPP
