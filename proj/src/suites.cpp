#include "narayana/suites.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "narayana/narayana.hpp"
#include "narayana/stirling.hpp"

namespace narayana {

int CheckSpec::effective_n(const SuiteParams& params) const {
  return std::clamp(params.n_max.value_or(default_n), min_n, max_n);
}

namespace {

using Results = std::vector<CheckResult>;

CheckSpec single(std::string suite, std::string identity, int def, int lo, int hi,
                 CheckResult (*fn)(int)) {
  return {std::move(suite), {std::move(identity)}, def, lo, hi,
          [fn](int n, const SuiteParams&) { return Results{fn(n)}; }};
}

std::vector<CheckSpec> build_registry() {
  std::vector<CheckSpec> r;
  // core
  r.push_back({"core", {"narayana-number-recurrence", "narayana-poly-recurrence"}, 10, 2, 40,
               [](int n, const SuiteParams&) { return verify_recurrences(n); }});
  r.push_back({"core", {"convolution-a", "convolution-b"}, 10, 2, 30,
               [](int n, const SuiteParams&) { return verify_convolutions(n); }});
  r.push_back({"core", {"closed-form-series-a", "closed-form-series-b", "gen-series-b", "gen-series-a"}, 12, 1, 16,
               [](int n, const SuiteParams&) { return verify_generating_functions(n); }});
  r.push_back({"core", {"old-leaf-formula", "old-leaf-vandermonde"}, 9, 2, 12,
               [](int n, const SuiteParams&) { return verify_lemma_old_leaves(n); }});
  r.push_back(single("core", "tree-count", 8, 1, 8, check_tree_count));
  r.push_back(single("core", "star-tree-count", 5, 0, 6, check_star_tree_count));
  r.push_back(single("core", "insert-delete-roundtrip", 6, 2, 7, check_insert_delete_roundtrip));
  r.push_back(single("core", "leaf-transfer-recurrence", 6, 1, 6, check_leaf_transfer));
  r.push_back(single("core", "tilde-a-specialization", 6, 1, 6, check_tilde_a_specialization));
  r.push_back(single("core", "tilde-b-specialization", 5, 1, 5, check_tilde_b_specialization));
  // grammar
  r.push_back(single("grammar", "tree-grammar-a", 6, 1, 6, check_tree_grammar_a));
  r.push_back(single("grammar", "tree-grammar-b", 5, 1, 5, check_tree_grammar_b));
  r.push_back(single("grammar", "grammar-h-a", 7, 1, 14, check_grammar_h_a));
  r.push_back(single("grammar", "grammar-h-b", 7, 1, 14, check_grammar_h_b));
  r.push_back(single("grammar", "leibniz-convolution-vanishes", 8, 3, 14, check_leibniz_convolution));
  r.push_back(single("grammar", "grammar-h-reciprocal-powers", 8, 2, 14, check_grammar_h_reciprocal_powers));
  r.push_back(single("grammar", "uv-grammar-substitution", 5, 1, 8, check_uv_grammar_substitution));
  r.push_back(single("grammar", "uv-grammar-closed-forms", 8, 1, 12, check_uv_grammar_closed_forms));
  r.push_back(single("grammar", "edge-convention-self-check", 4, 1, 6, check_edge_convention));
  // refined
  r.push_back(single("refined", "refined-tree-chain-a", 5, 1, 6, check_refined_tree_chain_a));
  r.push_back(single("refined", "refined-tree-chain-b", 4, 1, 5, check_refined_tree_chain_b));
  r.push_back(single("refined", "refined-operator-recurrence", 4, 1, 5, check_refined_operator_recurrence));
  r.push_back(single("refined", "refined-specialization-a", 5, 1, 6, check_refined_specialization_a));
  r.push_back(single("refined", "refined-specialization-b", 5, 1, 5, check_refined_specialization_b));
  r.push_back(single("refined", "refined-diagonal-basic", 6, 1, 6, check_refined_diagonal_basic));
  // stirling
  r.push_back(single("stirling", "stirling-count", 7, 1, 8, check_stirling_count));
  r.push_back(single("stirling", "second-order-eulerian", 7, 1, 8, check_second_order_eulerian));
  r.push_back(single("stirling", "triple-equidistribution", 6, 1, 8, check_triple_equidistribution));
  r.push_back(single("stirling", "glove-roundtrip", 7, 2, 7, check_glove_roundtrip));
  r.push_back(single("stirling", "glove-plateau-leaf", 7, 2, 7, check_glove_plateau_leaf));
  r.push_back(single("stirling", "glove-first-appearance", 7, 2, 7, check_glove_first_appearance));
  r.push_back(single("stirling", "fa-display-vs-prose", 7, 1, 8, check_fa_display_vs_prose));
  r.push_back(single("stirling", "second-order-link", 6, 2, 7, verify_second_order_link));
  r.push_back(single("stirling", "increasing-iff-proper", 7, 1, 7, check_increasing_iff_proper));
  // stability
  r.push_back({"stability", {"real-rooted-grid-a"}, 7, 1, 10,
               [](int n, const SuiteParams& p) { return Results{real_rooted_grid(TildeFamily::A, n, p.grid)}; }});
  r.push_back({"stability", {"real-rooted-grid-b"}, 6, 1, 10,
               [](int n, const SuiteParams& p) { return Results{real_rooted_grid(TildeFamily::B, n, p.grid)}; }});
  r.push_back(single("stability", "operator-symbol-identity", 5, 1, 6, operator_symbol_identity));
  r.push_back({"stability", {"probe-refined-a"}, 4, 1, 5,
               [](int n, const SuiteParams& p) { return Results{check_probe_refined_a(n, p.grid, p.probe)}; }});
  r.push_back({"stability", {"probe-refined-b"}, 4, 1, 5,
               [](int n, const SuiteParams& p) { return Results{check_probe_refined_b(n, p.grid, p.probe)}; }});
  r.push_back({"stability", {"probe-planted-witness"}, 2, 2, 2,
               [](int, const SuiteParams& p) { return Results{check_probe_planted_witness(p.probe)}; }});
  r.push_back({"stability", {"reduce-chain-real-rooted"}, 4, 1, 5, [](int n, const SuiteParams& p) {
                 return Results{check_reduce_chain_real_rooted(n, p.grid, p.probe)};
               }});
  return r;
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry = build_registry();
  return registry;
}

std::vector<std::string> suite_names() { return {"core", "grammar", "refined", "stirling", "stability", "all"}; }

std::vector<const CheckSpec*> suite_checks(const std::string& suite) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + suite + "' (expected core, grammar, refined, stirling, stability or all)");
  std::vector<const CheckSpec*> out;
  for (const CheckSpec& spec : check_registry())
    if (suite == "all" || spec.suite == suite) out.push_back(&spec);
  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteParams& params,
                                   const std::function<void(const CheckResult&)>& on_result) {
  const std::vector<const CheckSpec*> specs = suite_checks(suite);
  std::vector<Results> slots(specs.size());
  std::atomic<std::size_t> next{0};
  std::mutex writer;
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      Results results = specs[i]->run(specs[i]->effective_n(params), params);
      std::lock_guard lock(writer);
      if (on_result)
        for (const CheckResult& r : results) on_result(r);
      slots[i] = std::move(results);
    }
  };
  unsigned threads = params.threads ? params.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(specs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<CheckResult> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  return out;
}

}  // namespace narayana
