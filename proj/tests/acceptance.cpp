#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "narayana/narayana.hpp"
#include "narayana/series.hpp"
#include "narayana/stability.hpp"
#include "narayana/stirling.hpp"
#include "oracles.hpp"

namespace {

using namespace narayana;

struct Criterion {
  int number;
  std::string title;
  std::function<std::vector<CheckResult>()> run;
  double budget_seconds = 0;  // 0: no time limit
};

std::vector<Rational> grid(std::initializer_list<Rational> values) { return values; }

// Closed-form coefficients against the binomial definition, independent of narayana_a/b.
CheckResult series_oracle(int order) {
  return run_check("closed-form-series-oracle", order, [order]() -> std::optional<std::string> {
    const auto [ca, cb] = series_from_closed_forms(order);
    for (int k = 0; k <= order; ++k) {
      if (ca.coeff(k) != oracle::type_a(k)) return "type A coefficient " + std::to_string(k);
      if (cb.coeff(k) != oracle::type_b(k)) return "type B coefficient " + std::to_string(k);
    }
    return std::nullopt;
  });
}

}  // namespace

int main() {
  const ProbeOptions probe;  // 10^4 samples, fixed seed
  const std::vector<Criterion> criteria{
      {1, "tree/grammar agreement, type A, 1 <= n <= 6", [] { return std::vector{check_tree_grammar_a(6)}; }, 120},
      {2, "tree/grammar agreement, type B, 1 <= n <= 5", [] { return std::vector{check_tree_grammar_b(5)}; }},
      {3, "refined agreement: F (n <= 5), F_star (n <= 4), operator steps (n <= 4)",
       [] {
         return std::vector{check_refined_tree_chain_a(5), check_refined_tree_chain_b(4),
                            check_refined_operator_recurrence(4)};
       }},
      {4, "collapsed refined polynomials give scaled Narayana polynomials, n <= 5",
       [] { return std::vector{check_refined_specialization_a(5), check_refined_specialization_b(5)}; }},
      {5, "tilde A at s = t = 1 (n <= 6) and tilde B at s = t (n <= 5)",
       [] { return std::vector{check_tilde_a_specialization(6), check_tilde_b_specialization(5)}; }},
      {6, "Narayana number and polynomial recurrences, n <= 10", [] { return verify_recurrences(10); }},
      {7, "type A and type B convolutions, 2 <= n <= 10", [] { return verify_convolutions(10); }},
      {8, "generating functions through order 12, grammar series through order 12",
       [] {
         auto out = verify_generating_functions(12);
         out.push_back(series_oracle(12));
         return out;
       }},
      {9, "old-leaf formula against shape counts, n <= 9", [] { return verify_lemma_old_leaves(9); }},
      {10, "Stirling counts, plateau polynomial, equidistribution, glove round trip, second-order link",
       [] {
         return std::vector{check_stirling_count(7),          check_second_order_eulerian(7),
                            check_triple_equidistribution(6), check_glove_roundtrip(7),
                            verify_second_order_link(6)};
       }},
      {11, "real-rootedness on {1/2,1,2,3}^2, operator symbol identity, stability probes",
       [probe] {
         const auto wide = grid({Rational(1, 2), 1, 2, 3});
         const auto narrow = grid({Rational(1, 2), 1, 2});
         return std::vector{real_rooted_grid(TildeFamily::A, 7, wide), real_rooted_grid(TildeFamily::B, 6, wide),
                            operator_symbol_identity(5),           check_probe_refined_a(4, narrow, probe),
                            check_probe_refined_b(4, narrow, probe), check_probe_planted_witness(probe)};
       }},
      {12, "insertion bijectivity: counts n <= 8, no duplicates n <= 7, round trips n <= 6",
       [] { return std::vector{check_tree_count(8), check_insert_delete_roundtrip(6)}; }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<CheckResult> results = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string detail;
    bool pass = true;
    for (const CheckResult& r : results)
      if (!r.pass) {
        pass = false;
        detail += "; " + r.identity + ": " + r.witness.value_or("");
      }
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      pass = false;
      detail += "; took longer than " + std::to_string(static_cast<int>(c.budget_seconds)) + " s";
    }
    failed += !pass;
    std::printf("%s criterion %d: %s (%.1f s)%s\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(), secs,
                detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
