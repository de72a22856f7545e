#include "narayana/stirling.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "narayana/errors.hpp"
#include "narayana/narayana.hpp"

namespace narayana {

bool is_stirling(const std::vector<int>& word) {
  if (word.size() % 2 != 0) return false;
  const int n = static_cast<int>(word.size()) / 2;
  std::vector<int> first(static_cast<std::size_t>(n) + 1, -1), seen(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < 2 * n; ++i) {
    const int a = word[i];
    if (a < 1 || a > n || ++seen[a] > 2) return false;
    if (seen[a] == 1) {
      first[a] = i;
      continue;
    }
    for (int k = first[a] + 1; k < i; ++k)
      if (word[k] <= a) return false;
  }
  return true;
}

StirlingPermutation::StirlingPermutation(std::vector<int> word) : word_(std::move(word)) {
  if (word_.empty() || !is_stirling(word_))
    throw std::invalid_argument("not a Stirling permutation");
}

std::string StirlingPermutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (n() > 9 && i > 0) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

StirlingPermutation StirlingPermutation::parse(std::string_view text) {
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      const std::string item(text.substr(pos, comma - pos));
      if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos)
        throw ParseError("bad Stirling letter '" + item + "'");
      word.push_back(std::stoi(item));
      pos = comma + 1;
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad Stirling letter");
      word.push_back(c - '0');
    }
  }
  return StirlingPermutation(std::move(word));
}

StirlingStats stats(const StirlingPermutation& p) {
  StirlingStats out;
  const int len = 2 * p.n();
  for (int i = 0; i <= len; ++i) {
    const int a = p.at(i), b = p.at(i + 1);
    if (a == b) {
      out.plateaux.push_back(i);
    } else if (a < b) {
      ++out.ascents;
      bool first = true;
      for (int j = 1; j < i && first; ++j) first = p.at(j) != a;
      if (first) out.fa.push_back(i);
    } else {
      ++out.descents;
    }
  }
  return out;
}

std::vector<int> fa_positions_prose(const StirlingPermutation& p) {
  const int len = 2 * p.n();
  std::vector<int> first_at(static_cast<std::size_t>(p.n()) + 1, -1);
  first_at[0] = 0;
  for (int i = len; i >= 1; --i) first_at[p.at(i)] = i;
  std::vector<int> out;
  for (int i = 0; i < len; ++i)
    if (p.at(i) < p.at(i + 1) && first_at[p.at(i)] == i) out.push_back(i);
  return out;
}

void enumerate_stirling(int n, const std::function<void(const StirlingPermutation&)>& visit) {
  if (n < 1) return;
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(2 * n));
  std::function<void(int)> grow = [&](int m) {
    if (m == n) {
      visit(StirlingPermutation(word));
      return;
    }
    const int next = m + 1;
    for (std::size_t back = 0; back <= word.size(); ++back) {
      const std::size_t gap = word.size() - back;
      word.insert(word.begin() + static_cast<std::ptrdiff_t>(gap), {next, next});
      grow(next);
      word.erase(word.begin() + static_cast<std::ptrdiff_t>(gap),
                 word.begin() + static_cast<std::ptrdiff_t>(gap) + 2);
    }
  };
  grow(0);
}

std::vector<StirlingPermutation> all_stirling(int n) {
  std::vector<StirlingPermutation> out;
  enumerate_stirling(n, [&](const StirlingPermutation& p) { out.push_back(p); });
  return out;
}

MultiPoly q_poly(int n) {
  std::map<Monomial, long, TermOrder> tally;
  enumerate_stirling(n, [&](const StirlingPermutation& p) {
    const StirlingStats st = stats(p);
    std::vector<Monomial::Factor> f;
    for (int i : st.plateaux) f.push_back({var::xi(static_cast<std::uint32_t>(p.at(i))), 1});
    for (int j : st.fa) f.push_back({var::yi(static_cast<std::uint32_t>(p.at(j + 1))), 1});
    ++tally[Monomial::from_factors(std::move(f))];
  });
  MultiPoly out;
  for (const auto& [m, c] : tally) out.add_term(m, Rational(c));
  return out;
}

MultiPoly plateau_poly(int n) {
  std::map<int, long> tally;
  enumerate_stirling(n, [&](const StirlingPermutation& p) { ++tally[stats(p).plateau_count()]; });
  MultiPoly out;
  for (const auto& [k, c] : tally) out.add_term(Monomial(var::x, k), Rational(c));
  return out;
}

MultiPoly second_order_eulerian(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<Integer> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<Integer> next(static_cast<std::size_t>(m) + 1, 0);
    for (int k = 0; k <= m; ++k) {
      if (k < static_cast<int>(row.size())) next[k] += Integer(k + 1) * row[k];
      if (k >= 1 && k - 1 < static_cast<int>(row.size())) next[k] += Integer(2 * m - 1 - k) * row[k - 1];
    }
    row = std::move(next);
  }
  MultiPoly out;
  for (std::size_t k = 0; k < row.size(); ++k)
    out.add_term(Monomial(var::x, static_cast<int>(k) + 1), Rational(row[k]));
  return out;
}

namespace {

void contour(const LabeledPlaneTree& tree, Label v, std::vector<int>& out) {
  for (Label c : tree.children(v)) {
    out.push_back(c - 1);
    contour(tree, c, out);
    out.push_back(c - 1);
  }
}

}  // namespace

StirlingPermutation glove(const LabeledPlaneTree& tree) {
  if (tree.size() < 2) throw std::invalid_argument("glove needs at least two nodes");
  if (!is_increasing(tree)) throw NotIncreasing("tree " + tree.to_string() + " is not increasing");
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(2 * (tree.size() - 1)));
  contour(tree, tree.root(), word);
  return StirlingPermutation(std::move(word));
}

LabeledPlaneTree unglove(const StirlingPermutation& p) {
  const int nodes = p.n() + 1;
  std::vector<std::vector<Label>> children(static_cast<std::size_t>(nodes) + 1);
  std::vector<Label> path{1};
  for (int letter : p.word()) {
    const Label v = letter + 1;
    if (v == path.back()) {
      path.pop_back();
    } else {
      children[path.back()].push_back(v);
      path.push_back(v);
    }
  }
  return LabeledPlaneTree(1, std::move(children));
}

// ------------------------------------------------------------------ checks

namespace {

std::string clip(std::string s) {
  if (s.size() > 400) s = s.substr(0, 400) + "...";
  return s;
}

template <class Fn>
void for_increasing(int m, Fn&& fn) {
  enumerate(m, [&](const LabeledPlaneTree& t) {
    if (is_increasing(t)) fn(t);
  });
}

}  // namespace

CheckResult verify_second_order_link(int n_max) {
  return run_check("second-order-link", n_max, [n_max]() -> std::optional<std::string> {
    for (int n = 2; n <= n_max; ++n) {
      const MultiPoly lhs = substitute(F(n - 1), {{var::t, MultiPoly()}});
      const MultiPoly q = q_poly(n - 1);
      Substitution shift;
      for (VarId v : q.variables()) shift.emplace(v, MultiPoly(VarId{v.kind, v.index + 1}));
      const MultiPoly shifted = substitute(q, shift);
      const MultiPoly with_s = shifted * Monomial(var::s, n - 1);
      if (lhs == with_s) continue;
      const MultiPoly with_t = shifted * Monomial(var::t, n - 1);
      return "n=" + std::to_string(n) + ": F_(n-1)(s,0) = " + clip(lhs.to_string()) +
             "; neither s^(n-1) nor t^(n-1) prefactor matches (" +
             (lhs == with_t ? "t prefactor matches" : "t prefactor fails") + ")";
    }
    return std::nullopt;
  });
}

CheckResult check_stirling_count(int n) {
  return run_check("stirling-count", n, [n]() -> std::optional<std::string> {
    for (int m = 1; m <= n; ++m) {
      std::set<std::vector<int>> seen;
      long count = 0;
      enumerate_stirling(m, [&](const StirlingPermutation& p) {
        ++count;
        seen.insert(p.word());
      });
      const Integer expected = double_factorial_odd(m);
      if (Integer(count) != expected || static_cast<long>(seen.size()) != count)
        return "m=" + std::to_string(m) + ": " + std::to_string(seen.size()) + " distinct of " +
               std::to_string(count) + ", expected " + expected.get_str();
    }
    return std::nullopt;
  });
}

CheckResult check_second_order_eulerian(int n) {
  return run_check("second-order-eulerian", n, [n]() -> std::optional<std::string> {
    for (int m = 1; m <= n; ++m) {
      const MultiPoly plateaux = plateau_poly(m), oracle = second_order_eulerian(m);
      if (plateaux != oracle)
        return "m=" + std::to_string(m) + ": plateau polynomial " + plateaux.to_string() +
               " != " + oracle.to_string();
      const MultiPoly q = q_poly(m);
      Substitution diag;
      for (VarId v : q.variables()) diag.emplace(v, v.kind == VarKind::Xi ? MultiPoly(var::x) : MultiPoly(Rational(1)));
      if (substitute(q, diag) != plateaux)
        return "m=" + std::to_string(m) + ": q_poly at x_i=x, y_i=1 is " + substitute(q, diag).to_string();
    }
    return std::nullopt;
  });
}

CheckResult check_triple_equidistribution(int n) {
  return run_check("triple-equidistribution", n, [n]() -> std::optional<std::string> {
    for (int m = 1; m <= n; ++m) {
      std::map<int, long> asc, plat, desc;
      long total = 0;
      enumerate_stirling(m, [&](const StirlingPermutation& p) {
        const StirlingStats st = stats(p);
        if (st.ascents + st.descents + st.plateau_count() != 2 * m + 1) total = -1'000'000'000;
        ++asc[st.ascents];
        ++plat[st.plateau_count()];
        ++desc[st.descents];
        ++total;
      });
      if (total < 0) return "m=" + std::to_string(m) + ": ascents + descents + plateaux != 2n+1";
      if (asc != plat || plat != desc) return "m=" + std::to_string(m) + ": distributions differ";
    }
    return std::nullopt;
  });
}

CheckResult check_glove_roundtrip(int n) {
  return run_check("glove-roundtrip", n, [n]() -> std::optional<std::string> {
    std::optional<std::string> failure;
    for (int m = 2; m <= n && !failure; ++m) {
      long increasing = 0;
      for_increasing(m, [&](const LabeledPlaneTree& t) {
        ++increasing;
        if (!failure && unglove(glove(t)) != t) failure = "unglove(glove(T)) != T for T=" + t.to_string();
      });
      if (failure) break;
      if (Integer(increasing) != double_factorial_odd(m - 1))
        return "m=" + std::to_string(m) + ": " + std::to_string(increasing) + " increasing trees, expected " +
               double_factorial_odd(m - 1).get_str();
      enumerate_stirling(m - 1, [&](const StirlingPermutation& p) {
        if (!failure && glove(unglove(p)) != p) failure = "glove(unglove(p)) != p for p=" + p.to_string();
      });
    }
    return failure;
  });
}

CheckResult check_glove_plateau_leaf(int n) {
  return run_check("glove-plateau-leaf", n, [n]() -> std::optional<std::string> {
    std::optional<std::string> failure;
    for (int m = 2; m <= n && !failure; ++m)
      for_increasing(m, [&](const LabeledPlaneTree& t) {
        if (failure) return;
        const StirlingPermutation p = glove(t);
        const StirlingStats st = stats(p);
        std::set<Label> leaves, plateau_letters;
        for (Label v = 1; v <= t.size(); ++v)
          if (t.is_leaf(v)) leaves.insert(v);
        for (int i : st.plateaux) plateau_letters.insert(p.at(i) + 1);
        if (leaves != plateau_letters || st.plateau_count() != t.leaf_count())
          failure = "leaves and plateaux disagree for T=" + t.to_string() + ", glove " + p.to_string();
      });
    return failure;
  });
}

CheckResult check_glove_first_appearance(int n) {
  return run_check("glove-first-appearance", n, [n]() -> std::optional<std::string> {
    std::optional<std::string> failure;
    for (int m = 2; m <= n && !failure; ++m)
      for_increasing(m, [&](const LabeledPlaneTree& t) {
        if (failure) return;
        const StirlingPermutation p = glove(t);
        std::set<std::pair<Label, Label>> old_children, fa_pairs;
        for (Label v = 1; v <= t.size(); ++v)
          if (!t.is_leaf(v)) old_children.insert({v, t.children(v).front()});
        for (int j : stats(p).fa) fa_pairs.insert({p.at(j) + 1, p.at(j + 1) + 1});
        if (old_children != fa_pairs)
          failure = "old children and FA ascents disagree for T=" + t.to_string() + ", glove " + p.to_string();
      });
    return failure;
  });
}

CheckResult check_fa_display_vs_prose(int n) {
  return run_check("fa-display-vs-prose", n, [n]() -> std::optional<std::string> {
    std::optional<std::string> failure;
    for (int m = 1; m <= n && !failure; ++m)
      enumerate_stirling(m, [&](const StirlingPermutation& p) {
        if (!failure && stats(p).fa != fa_positions_prose(p))
          failure = "FA readings differ on " + p.to_string();
      });
    return failure;
  });
}

CheckResult check_increasing_iff_proper(int n) {
  return run_check("increasing-iff-proper", n, [n]() -> std::optional<std::string> {
    std::optional<std::string> failure;
    for (int m = 1; m <= n && !failure; ++m)
      enumerate(m, [&](const LabeledPlaneTree& t) {
        if (!failure && (improper_edge_count(t) == 0) != is_increasing(t))
          failure = "all-proper and increasing disagree on " + t.to_string();
      });
    return failure;
  });
}

}  // namespace narayana
