#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "narayana/report.hpp"
#include "narayana/stability.hpp"

namespace narayana {

struct SuiteParams {
  // Upper size for every check; each check clamps it to its own range.
  std::optional<int> n_max;
  std::vector<Rational> grid{Rational(1, 2), Rational(1), Rational(2)};
  ProbeOptions probe;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

// One verifier operation and the identities it reports.
struct CheckSpec {
  std::string suite;
  std::vector<std::string> identities;
  int default_n;
  int min_n;
  int max_n;
  std::function<std::vector<CheckResult>(int n, const SuiteParams&)> run;

  int effective_n(const SuiteParams& params) const;
};

const std::vector<CheckSpec>& check_registry();
// core, grammar, refined, stirling, stability, all.
std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown suite.
std::vector<const CheckSpec*> suite_checks(const std::string& suite);

// Runs the suite on a worker pool. on_result is called once per result,
// never concurrently. Returns all results in registry order.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteParams& params,
                                   const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace narayana
