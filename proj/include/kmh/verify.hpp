#ifndef KMH_VERIFY_HPP
#define KMH_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kmh/serialize.hpp"

namespace kmh {

/// Property sweeps evaluate independent cases. The serial path is the
/// reference; the parallel path (OpenMP) must agree with it exactly.
enum class Execution { serial, parallel };

struct CheckReport {
  std::string check;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<json> failures; // first few counterexamples, in case order

  bool passed() const { return failure_count == 0; }
};

json to_json(const CheckReport& r);

/// Counterexamples kept per check.
inline constexpr std::size_t kMaxReportedFailures = 10;

/// A case evaluator returns nullopt on success, or a replayable
/// counterexample. Exceptions count as failures.
using CaseFn = std::function<std::optional<json>(std::size_t)>;

CheckReport run_cases(std::string name, std::size_t count, const CaseFn& eval, Execution exec);

struct SweepConfig {
  std::size_t max_length = 6;
  int max_coord = 3;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  Execution exec = Execution::parallel;
};

// Individual checks. Each is deterministic in (datum, config).

/// (T_s + 1)(T_s - q) = 0 in H and in H^, for every generator.
CheckReport check_quadratic(const Datum& d, const SweepConfig& c);
/// T_s T_w = T_{sw} whenever l(sw) = l(w) + 1, for l(w) <= max_length.
CheckReport check_length_additive(const Datum& d, const SweepConfig& c);
/// Products along every reduced word of w agree (both multiplication sides).
CheckReport check_hecke_braid_confluence(const Datum& d, const SweepConfig& c);
/// T_w e^lambda reduces identically along every reduced word, l(w) <= min(max_length, 5).
CheckReport check_affine_confluence(const Datum& d, const SweepConfig& c);
/// f T_s - T_s (s f) = (q-1)(f - s f)/(1 - e^{-alpha}) on the monomial box.
CheckReport check_cross_relation(const Datum& d, const SweepConfig& c);
CheckReport check_demazure(const Datum& d, const SweepConfig& c);
CheckReport check_hecke_associativity(const Datum& d, const SweepConfig& c);
CheckReport check_affine_associativity(const Datum& d, const SweepConfig& c);
CheckReport check_embeddings(const Datum& d, const SweepConfig& c);
/// Right multiplication by C'_i squares to (q+1) times itself.
CheckReport check_cprime_square(const Datum& d, const SweepConfig& c);
/// theta(delta) commutes with generators, thetas, and random elements.
CheckReport check_centrality(const Datum& d, const SweepConfig& c);
/// pi(ab) = pi(a) pi(b) on `trials` pairs times 10 monomials.
CheckReport check_poly_rep_homomorphism(const Datum& d, const SweepConfig& c);
/// (pi(T_s) + 1)(pi(T_s) - q) kills every monomial in the box.
CheckReport check_poly_rep_quadratic(const Datum& d, const SweepConfig& c);

/// The full suite, in a fixed order. Centrality runs only for affine GCMs.
std::vector<CheckReport> run_suite(const Datum& d, const SweepConfig& c);

/// Every weight with coordinates in [-max_coord, max_coord].
std::vector<Weight> weight_box(int rank, int max_coord);

} // namespace kmh

#endif // KMH_VERIFY_HPP
