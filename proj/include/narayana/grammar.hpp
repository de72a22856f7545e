#pragma once

#include <map>
#include <string>
#include <string_view>

#include "narayana/multipoly.hpp"
#include "narayana/series.hpp"

namespace narayana {

// A context-free grammar: substitution rules v -> f(v).
// The induced formal derivative is linear, obeys the Leibniz rule, and sends
// variables without a rule to 0.
class Grammar {
 public:
  Grammar() = default;
  explicit Grammar(std::map<VarId, MultiPoly> rules) : rules_(std::move(rules)) {}

  // One rule per line, "var -> polynomial". Blank lines and '#' comments are skipped.
  static Grammar parse(std::string_view text);

  const std::map<VarId, MultiPoly>& rules() const { return rules_; }
  const MultiPoly* rule(VarId v) const;
  std::string to_string() const;

  MultiPoly derive(const MultiPoly& f) const;
  MultiPoly derive_n(const MultiPoly& f, int n) const;

 private:
  std::map<VarId, MultiPoly> rules_;
};

// s -> s(sx+ty), t -> t(sx+ty), x -> (s+t)xy, y -> (s+t)xy.
Grammar grammar_g();
// t -> t^2(x+y), x -> 2txy, y -> 2txy.
Grammar grammar_h();
// Cayley-tree grammar A -> A^3 S, S -> A S^2, written
// over u (for A) and v (for S).
Grammar grammar_cayley();
// u -> u^2 v^3, v -> u^3 v^2.
Grammar grammar_uv();
// The refined step grammar G_k, materialised for indices 1..k:
// x_j, y_j -> (s+t) x_{k+1} y_{k+1}; s -> s(s x_{k+1} + t y_{k+1});
// t -> t(s x_{k+1} + t y_{k+1}).
Grammar refined_grammar(int k);
// G, H, DR, MMY, or G_k. Throws std::invalid_argument for unknown names.
Grammar named_grammar(std::string_view name);

// Applies the refined operators D_start, D_start+1, ..., D_end in that order.
// An empty range (start > end) returns f unchanged.
MultiPoly derive_chain(const MultiPoly& f, int start, int end);

// Sum_{n <= order} D^n(f) var^n / n!. The formal variable must not occur in f
// or in any rule.
TruncatedSeries gen_series(const Grammar& g, const MultiPoly& f, VarId formal_var, int order);

}  // namespace narayana
