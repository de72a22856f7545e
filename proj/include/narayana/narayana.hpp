#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "narayana/multipoly.hpp"
#include "narayana/report.hpp"

namespace narayana {

// N_n^A(x,y) = sum_k N(n,k) x^k y^(n-k+1), with N_0^A = y.
MultiPoly narayana_a(int n);
// N_n^B(x,y) = sum_k C(n,k)^2 x^k y^(n-k).
MultiPoly narayana_b(int n);

// How a tree polynomial is computed: by summing weights over enumerated
// trees, or by iterating grammar derivatives.
enum class Route { Trees, Grammar };

// Sum of weight_basic over trees on [n+1], or D^n(y) under grammar G.
MultiPoly tilde_a(int n, Route route = Route::Trees);
// Sum of weight_basic_star over the star trees on [n+2], or D^n(t) under G.
MultiPoly tilde_b(int n, Route route = Route::Trees);
// Sum of weight_refined over trees on [n+1], or D_n ... D_1 (y_1).
MultiPoly F(int n, Route route = Route::Trees);
// Sum of weight_refined_star over the star trees on [n+2], or D_(n+1) ... D_2 (t).
MultiPoly F_star(int n, Route route = Route::Trees);

// T_n = (n-1)(s x_(n+1) + t y_(n+1)) + (s+t) x_(n+1) y_(n+1) sum_(k<=n) (d/dx_k + d/dy_k).
MultiPoly apply_T(int n, const MultiPoly& f);

// Counts of trees on [n+1] (resp. star trees on [n+2]) by leaves k and
// improper edges r, tallied from enumeration only.
struct NarayanaTables {
  using Key = std::tuple<int, int, int>;  // (n, k, r)
  std::map<Key, Integer> tilde_a;
  std::map<Key, Integer> tilde_b;

  static Rational a_number(int n, int k) { return narayana_number(n, k); }
};
NarayanaTables narayana_tables(int n_max_a, int n_max_b);

// r_(n,k,i) = (1/n) C(n,i) C(n-i,k-i) C(n-k,i-1): plane trees on n+1 nodes
// with k leaves and i old leaves.
Rational old_leaf_formula(int n, int k, int i);

// Recurrences for the Narayana numbers and for N_n^A(x).
std::vector<CheckResult> verify_recurrences(int n_max);
// Both convolution identities, 2 <= n <= n_max.
std::vector<CheckResult> verify_convolutions(int n_max);
// Closed-form series against N^A, N^B through `order`, and the grammar
// series Gen(t,u) under H against t C^B(x,y,tu).
std::vector<CheckResult> verify_generating_functions(int order);
// Old-leaf formula against shape counts for n <= n_max, plus its
// Vandermonde collapse.
std::vector<CheckResult> verify_lemma_old_leaves(int n_max);

// Individual checks. Each covers every size up to and including n unless noted.
CheckResult check_tree_count(int n);
CheckResult check_star_tree_count(int n);
CheckResult check_insert_delete_roundtrip(int n);
// Leaf transfer between sizes m+1 and m+2, for 1 <= m <= n.
CheckResult check_leaf_transfer(int n);
CheckResult check_tilde_a_specialization(int n);
CheckResult check_tilde_b_specialization(int n);
CheckResult check_tree_grammar_a(int n);
CheckResult check_tree_grammar_b(int n);
CheckResult check_grammar_h_a(int n);
CheckResult check_grammar_h_b(int n);
CheckResult check_leibniz_convolution(int n);
CheckResult check_grammar_h_reciprocal_powers(int n);
CheckResult check_uv_grammar_substitution(int n);
CheckResult check_uv_grammar_closed_forms(int n);
// D^k(y) equals the sum of basic tree weights for k <= n; guards the
// proper -> s, improper -> t edge convention.
CheckResult check_edge_convention(int n);
CheckResult check_refined_tree_chain_a(int n);
CheckResult check_refined_tree_chain_b(int n);
CheckResult check_refined_operator_recurrence(int n);
CheckResult check_refined_specialization_a(int n);
CheckResult check_refined_specialization_b(int n);
CheckResult check_refined_diagonal_basic(int n);

}  // namespace narayana
