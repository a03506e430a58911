// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exit status is nonzero iff some criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "kmh/cli.hpp"
#include "kmh/hecke.hpp"
#include "kmh/verify.hpp"
#include "oracles.hpp"
#include "test_data.hpp"

using namespace kmh;
using namespace kmh::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }

  void require(const CheckReport& r, const std::string& data) {
    if (!r.passed()) {
      pass = false;
      detail << " [" << r.check << " on " << data << ": " << r.failure_count << "/" << r.cases
             << " failed]";
    }
  }
};

// The six data named by the criteria.
std::vector<std::pair<std::string, Datum>> criteria_data() {
  auto all = all_data();
  all.pop_back();
  return all;
}

std::vector<std::pair<std::string, Datum>> daha_contexts() {
  auto g = Gcm::validate(cartan_affine_a1());
  return {{"affine A1 rank l+1", build_daha(g, false).datum},
          {"affine A1 rank l+2", build_daha(g, true).datum}};
}

SweepConfig sweep(std::size_t max_length, int max_coord, std::size_t trials) {
  SweepConfig c;
  c.max_length = max_length;
  c.max_coord = max_coord;
  c.trials = trials;
  c.seed = 20240101;
  return c;
}

Outcome defining_relations() {
  Outcome o;
  for (const auto& [name, d] : criteria_data()) {
    o.require(check_quadratic(d, sweep(6, 3, 1)), name);
    o.require(check_length_additive(d, sweep(6, 3, 1)), name);
    o.require(check_hecke_braid_confluence(d, sweep(6, 3, 1)), name);
  }
  return o;
}

Outcome cross_relation() {
  Outcome o;
  auto data = criteria_data();
  for (auto& c : daha_contexts())
    data.push_back(c);
  for (const auto& [name, d] : data)
    o.require(check_cross_relation(d, sweep(6, 3, 1)), name);
  return o;
}

Outcome confluence_and_associativity() {
  Outcome o;
  for (const auto& [name, d] : criteria_data()) {
    o.require(check_affine_confluence(d, sweep(5, 3, 1)), name);
    o.require(check_affine_associativity(d, sweep(5, 3, 200)), name);
  }
  return o;
}

Outcome cprime_square() {
  Outcome o;
  for (const auto& [name, d] : criteria_data())
    o.require(check_cprime_square(d, sweep(6, 3, 50)), name);
  return o;
}

Outcome kl_basis_a2() {
  Outcome o;
  auto d = a2();
  NaiveHecke oracle(d, 3);
  auto elems = enumerate_up_to_length(d, 10);
  o.require(elems.size() == 6, "|W(A2)| != 6");
  for (const auto& w : elems) {
    auto kl = kl_basis(w);
    NaiveHecke::Vec got(kl.terms().begin(), kl.terms().end());
    NaiveHecke::Vec interval;
    for (const auto& y : elems)
      if (naive_bruhat_leq(*d, y.word(), w.word()))
        interval[y.word()] = Laurent(1);
    auto solutions = brute_force_kl(oracle, d, w, 2);
    const std::string tag = "w=" + json(w.word()).dump();
    o.require(solutions.size() == 1, tag + " solver found " + std::to_string(solutions.size()));
    o.require(!solutions.empty() && got == solutions.front(), tag + " differs from solver");
    o.require(got == interval, tag + " is not the interval sum");
  }
  return o;
}

Outcome daha_centrality() {
  Outcome o;
  for (const auto& [name, d] : daha_contexts())
    o.require(check_centrality(d, sweep(6, 3, 100)), name);
  return o;
}

Outcome polynomial_representation() {
  Outcome o;
  for (const auto& [name, d] : criteria_data()) {
    o.require(check_poly_rep_homomorphism(d, sweep(6, 3, 100)), name);
    o.require(check_poly_rep_quadratic(d, sweep(6, 3, 1)), name);
  }
  return o;
}

Outcome weyl_combinatorics() {
  Outcome o;
  auto aff = enumerate_up_to_length(affine_a1(), 50);
  std::vector<std::size_t> by_length(51, 0);
  for (const auto& w : aff)
    ++by_length[w.length()];
  std::size_t cumulative = 0;
  for (std::size_t l = 0; l <= 50; ++l) {
    cumulative += by_length[l];
    o.require(cumulative == 2 * l + 1, "affine A1 count at L=" + std::to_string(l));
  }
  auto a = a2();
  auto w = enumerate_up_to_length(a, 10);
  o.require(w.size() == 6, "|W(A2)| != 6");
  std::size_t pairs = 0;
  for (const auto& u : w)
    for (const auto& v : w) {
      ++pairs;
      o.require(bruhat_leq(u, v) == naive_bruhat_leq(*a, u.word(), v.word()),
                "Bruhat " + json(u.word()).dump() + " <= " + json(v.word()).dump());
    }
  o.require(pairs == 36, "pair count");
  return o;
}

Outcome determinism() {
  Outcome o;
  cli::RunConfig c;
  c.cartan_path = std::string(KMH_TEST_DATA_DIR) + "/affine_a1.json";
  auto first = cli::cmd_verify(c);
  auto second = cli::cmd_verify(c);
  c.exec = Execution::serial;
  auto serial = cli::cmd_verify(c);
  o.require(first.exit_code == cli::kExitOk, "affine A1 defaults did not pass");
  o.require(first.report.dump(2) == second.report.dump(2), "repeated runs differ");
  o.require(first.report.dump(2) == serial.report.dump(2), "serial and parallel differ");
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 defining relations (quadratic, length-additive products, l <= 6)", defining_relations},
      {"2 cross relation on all monomials with |coords| <= 3", cross_relation},
      {"3 normal-form confluence (l <= 5) and 200 associativity triples",
       confluence_and_associativity},
      {"4 (C'_i)^2 = (q+1) C'_i on 50 random Hecke elements", cprime_square},
      {"5 Kazhdan-Lusztig basis of A2 against brute-force solver", kl_basis_a2},
      {"6 theta(delta) central in both affine A1 contexts", daha_centrality},
      {"7 polynomial representation homomorphism and quadratic relation",
       polynomial_representation},
      {"8 Weyl group counts and Bruhat order", weyl_combinatorics},
      {"9 byte-identical verify reports", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << name << " (" << std::fixed
              << std::setprecision(2) << secs << " s)" << o.detail.str() << "\n";
    if (!o.pass)
      ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
