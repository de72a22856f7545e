#include "narayana/grammar.hpp"

#include <sstream>
#include <stdexcept>

#include "narayana/errors.hpp"

namespace narayana {

namespace {

// D(c * prod v_i^a_i) = sum_i c a_i v_i^(a_i - 1) rule(v_i) prod_{j != i} v_j^a_j.
template <class RuleLookup>
MultiPoly derive_with(const MultiPoly& f, RuleLookup&& rule_for) {
  MultiPoly out;
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [v, e] : m.factors()) {
      const MultiPoly* rule = rule_for(v);
      if (rule == nullptr) continue;
      const Monomial rest = m.with_exponent(v, e - 1);
      const Rational scale = c * e;
      for (const auto& [rm, rc] : rule->terms()) out.add_term(rest * rm, scale * rc);
    }
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

MultiPoly P(std::string_view text) { return MultiPoly::parse(text); }

}  // namespace

Grammar Grammar::parse(std::string_view text) {
  std::map<VarId, MultiPoly> rules;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError("grammar line " + std::to_string(line_no) + " lacks '->'");
    const VarId lhs = VarId::parse(trim(line.substr(0, arrow)));
    if (rules.count(lhs))
      throw ParseError("grammar line " + std::to_string(line_no) + " repeats a rule for " +
                       lhs.name());
    rules.emplace(lhs, MultiPoly::parse(line.substr(arrow + 2)));
  }
  return Grammar(std::move(rules));
}

const MultiPoly* Grammar::rule(VarId v) const {
  auto it = rules_.find(v);
  return it == rules_.end() ? nullptr : &it->second;
}

std::string Grammar::to_string() const {
  std::ostringstream out;
  for (const auto& [v, p] : rules_) out << v.name() << " -> " << p.to_string() << '\n';
  return out.str();
}

MultiPoly Grammar::derive(const MultiPoly& f) const {
  return derive_with(f, [this](VarId v) { return rule(v); });
}

MultiPoly Grammar::derive_n(const MultiPoly& f, int n) const {
  if (n < 0) throw std::invalid_argument("derive_n needs n >= 0");
  MultiPoly cur = f;
  for (int i = 0; i < n && !cur.is_zero(); ++i) cur = derive(cur);
  return cur;
}

Grammar grammar_g() {
  return Grammar({{var::s, P("s*(s*x + t*y)")},
                  {var::t, P("t*(s*x + t*y)")},
                  {var::x, P("(s + t)*x*y")},
                  {var::y, P("(s + t)*x*y")}});
}

Grammar grammar_h() {
  return Grammar({{var::t, P("t^2*(x + y)")}, {var::x, P("2*t*x*y")}, {var::y, P("2*t*x*y")}});
}

Grammar grammar_cayley() { return Grammar({{var::u, P("u^3*v")}, {var::v, P("u*v^2")}}); }

Grammar grammar_uv() { return Grammar({{var::u, P("u^2*v^3")}, {var::v, P("u^3*v^2")}}); }

namespace {

struct RefinedRules {
  explicit RefinedRules(int k) : step(k) {
    const auto next = static_cast<std::uint32_t>(k + 1);
    const MultiPoly s(var::s), t(var::t), xn(var::xi(next)), yn(var::yi(next));
    node = (s + t) * xn * yn;
    const MultiPoly edge_factor = s * xn + t * yn;
    s_rule = s * edge_factor;
    t_rule = t * edge_factor;
  }

  const MultiPoly* operator()(VarId v) const {
    switch (v.kind) {
      case VarKind::S:
        return &s_rule;
      case VarKind::T:
        return &t_rule;
      case VarKind::Xi:
      case VarKind::Yi:
        return static_cast<int>(v.index) <= step ? &node : nullptr;
      default:
        return nullptr;
    }
  }

  int step;
  MultiPoly node, s_rule, t_rule;
};

}  // namespace

Grammar refined_grammar(int k) {
  if (k < 1) throw std::invalid_argument("refined grammar index must be >= 1");
  const RefinedRules rules(k);
  std::map<VarId, MultiPoly> out{{var::s, rules.s_rule}, {var::t, rules.t_rule}};
  for (int j = 1; j <= k; ++j) {
    out.emplace(var::xi(j), rules.node);
    out.emplace(var::yi(j), rules.node);
  }
  return Grammar(std::move(out));
}

Grammar named_grammar(std::string_view name) {
  if (name == "G") return grammar_g();
  if (name == "H") return grammar_h();
  if (name == "DR") return grammar_cayley();
  if (name == "MMY") return grammar_uv();
  if (name.starts_with("G_")) {
    const std::string digits(name.substr(2));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
      return refined_grammar(std::stoi(digits));
  }
  throw std::invalid_argument("unknown grammar '" + std::string(name) +
                              "' (expected G, H, DR, MMY or G_k)");
}

MultiPoly derive_chain(const MultiPoly& f, int start, int end) {
  if (start < 1 && start <= end) throw std::invalid_argument("refined operators start at D_1");
  MultiPoly cur = f;
  for (int k = start; k <= end; ++k) cur = derive_with(cur, RefinedRules(k));
  return cur;
}

TruncatedSeries gen_series(const Grammar& g, const MultiPoly& f, VarId formal_var, int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  if (f.contains(formal_var))
    throw std::invalid_argument("formal variable " + formal_var.name() + " occurs in f");
  for (const auto& [v, rule] : g.rules())
    if (v == formal_var || rule.contains(formal_var))
      throw std::invalid_argument("formal variable " + formal_var.name() +
                                  " occurs in the grammar");
  TruncatedSeries out(formal_var, order);
  MultiPoly cur = f;
  Integer fact = 1;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      cur = g.derive(cur);
      fact *= n;
    }
    out.set_coeff(n, cur * Rational(Integer(1), fact));
  }
  return out;
}

}  // namespace narayana
