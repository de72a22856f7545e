#include "narayana/narayana.hpp"

#include <mutex>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "narayana/grammar.hpp"
#include "narayana/series.hpp"
#include "narayana/tree.hpp"

namespace narayana {

namespace {

std::string clip(std::string s) {
  constexpr std::size_t limit = 400;
  if (s.size() > limit) s = s.substr(0, limit) + "...";
  return s;
}

std::string mismatch(const std::string& what, int n, const MultiPoly& lhs, const MultiPoly& rhs) {
  return what + " at n=" + std::to_string(n) + ": " + clip(lhs.to_string()) +
         " != " + clip(rhs.to_string());
}

MultiPoly term(const Rational& c, std::vector<Monomial::Factor> factors) {
  return MultiPoly(Monomial::from_factors(std::move(factors)), c);
}

Rational to_rational(const Integer& z) { return Rational(z); }

// Sends every x_k to x_image and every y_k to y_image.
Substitution diagonal(const MultiPoly& p, const MultiPoly& x_image, const MultiPoly& y_image) {
  Substitution sub;
  for (VarId v : p.variables()) {
    if (v.kind == VarKind::Xi) sub.emplace(v, x_image);
    if (v.kind == VarKind::Yi) sub.emplace(v, y_image);
  }
  return sub;
}

const MultiPoly kX(var::x), kY(var::y), kS(var::s), kT(var::t), kOne(Rational(1));

template <class Enumerate, class Weigh>
MultiPoly sum_weights(Enumerate&& enumerate_fn, Weigh&& weigh) {
  std::map<Monomial, long long, TermOrder> tally;
  enumerate_fn([&](const LabeledPlaneTree& t) { ++tally[weigh(t)]; });
  MultiPoly out;
  for (const auto& [m, c] : tally) out.add_term(m, Rational(static_cast<long>(c)));
  return out;
}

enum class Family { TildeA, TildeB, Refined, RefinedStar };

// Tree sums are reused across checks; each (family, n) is computed once.
MultiPoly tree_sum(Family family, int n) {
  static std::mutex mu;
  static std::map<std::pair<Family, int>, MultiPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({family, n}); it != cache.end()) return it->second;
  }
  MultiPoly out;
  switch (family) {
    case Family::TildeA:
      out = sum_weights([n](auto&& f) { enumerate(n + 1, f); }, weight_basic);
      break;
    case Family::TildeB:
      out = sum_weights([n](auto&& f) { enumerate_star(n, f); }, weight_basic_star);
      break;
    case Family::Refined:
      out = sum_weights([n](auto&& f) { enumerate(n + 1, f); }, weight_refined);
      break;
    case Family::RefinedStar:
      out = sum_weights([n](auto&& f) { enumerate_star(n, f); }, weight_refined_star);
      break;
  }
  std::lock_guard lock(mu);
  cache.emplace(std::pair{family, n}, out);
  return out;
}

void require_nonneg(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
}

}  // namespace

MultiPoly narayana_a(int n) {
  require_nonneg(n);
  if (n == 0) return kY;
  MultiPoly out;
  for (int k = 1; k <= n; ++k)
    out += term(narayana_number(n, k), {{var::x, k}, {var::y, n - k + 1}});
  return out;
}

MultiPoly narayana_b(int n) {
  require_nonneg(n);
  MultiPoly out;
  for (int k = 0; k <= n; ++k) {
    const Integer c = binomial(n, k);
    out += term(to_rational(c * c), {{var::x, k}, {var::y, n - k}});
  }
  return out;
}

MultiPoly tilde_a(int n, Route route) {
  require_nonneg(n);
  if (route == Route::Grammar) return grammar_g().derive_n(kY, n);
  return tree_sum(Family::TildeA, n);
}

MultiPoly tilde_b(int n, Route route) {
  require_nonneg(n);
  if (route == Route::Grammar) return grammar_g().derive_n(kT, n);
  return tree_sum(Family::TildeB, n);
}

MultiPoly F(int n, Route route) {
  require_nonneg(n);
  if (route == Route::Grammar) return derive_chain(MultiPoly(var::yi(1)), 1, n);
  return tree_sum(Family::Refined, n);
}

MultiPoly F_star(int n, Route route) {
  require_nonneg(n);
  if (route == Route::Grammar) return derive_chain(kT, 2, n + 1);
  return tree_sum(Family::RefinedStar, n);
}

MultiPoly apply_T(int n, const MultiPoly& f) {
  if (n < 1) throw std::invalid_argument("T_n needs n >= 1");
  const auto next = static_cast<std::uint32_t>(n + 1);
  const MultiPoly xn(var::xi(next)), yn(var::yi(next));
  MultiPoly sum;
  for (int k = 1; k <= n; ++k) {
    sum += partial_deriv(f, var::xi(k));
    sum += partial_deriv(f, var::yi(k));
  }
  return Rational(n - 1) * (kS * xn + kT * yn) * f + (kS + kT) * xn * yn * sum;
}

NarayanaTables narayana_tables(int n_max_a, int n_max_b) {
  NarayanaTables out;
  for (int n = 0; n <= n_max_a; ++n)
    enumerate(n + 1, [&](const LabeledPlaneTree& t) {
      ++out.tilde_a[{n, t.leaf_count(), improper_edge_count(t)}];
    });
  for (int n = 0; n <= n_max_b; ++n)
    enumerate_star(n, [&](const LabeledPlaneTree& t) {
      ++out.tilde_b[{n, t.leaf_count(), improper_edge_count(t)}];
    });
  return out;
}

Rational old_leaf_formula(int n, int k, int i) {
  if (n < 1) return Rational(0);
  Rational r(binomial(n, i) * binomial(n - i, k - i) * binomial(n - k, i - 1), Integer(n));
  r.canonicalize();
  return r;
}

// ------------------------------------------------------------- identities

std::vector<CheckResult> verify_recurrences(int n_max) {
  std::vector<CheckResult> out;
  out.push_back(run_check("narayana-number-recurrence", n_max, [&]() -> std::optional<std::string> {
    for (int n = 1; n <= n_max; ++n)
      for (int k = 0; k <= n + 2; ++k) {
        const Rational lhs = Rational(n + 2) * narayana_number(n + 1, k);
        const Rational rhs = Rational(n + 2 * k) * narayana_number(n, k) +
                             Rational(3 * n + 4 - 2 * k) * narayana_number(n, k - 1);
        if (lhs != rhs)
          return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + lhs.get_str() +
                 " != " + rhs.get_str();
      }
    return std::nullopt;
  }));
  out.push_back(run_check("narayana-poly-recurrence", n_max, [&]() -> std::optional<std::string> {
    const Substitution y_one{{var::y, kOne}};
    MultiPoly cur = substitute(narayana_a(1), y_one);
    for (int n = 1; n <= n_max; ++n) {
      const MultiPoly next = substitute(narayana_a(n + 1), y_one);
      const MultiPoly lhs = Rational(n + 2) * next;
      const MultiPoly rhs = (Rational(3 * n + 2) * kX + MultiPoly::constant(n)) * cur +
                            Rational(2) * (kX - kX * kX) * partial_deriv(cur, var::x);
      if (lhs != rhs) return mismatch("polynomial recurrence", n, lhs, rhs);
      cur = next;
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<CheckResult> verify_convolutions(int n_max) {
  std::vector<MultiPoly> a, b;
  for (int n = 0; n <= std::max(n_max, 0); ++n) {
    a.push_back(narayana_a(n));
    b.push_back(narayana_b(n));
  }
  std::vector<CheckResult> out;
  out.push_back(run_check("convolution-a", n_max, [&]() -> std::optional<std::string> {
    for (int n = 2; n <= n_max; ++n) {
      MultiPoly rhs = (kX + kY) * a[n - 1];
      for (int k = 2; k <= n - 1; ++k) rhs += a[k - 1] * a[n - k];
      if (rhs != a[n]) return mismatch("type A convolution", n, a[n], rhs);
    }
    return std::nullopt;
  }));
  out.push_back(run_check("convolution-b", n_max, [&]() -> std::optional<std::string> {
    for (int n = 2; n <= n_max; ++n) {
      MultiPoly acc;
      for (int k = 0; k <= n - 2; ++k) acc += b[k] * a[n - k - 1];
      const MultiPoly rhs = (kX + kY) * b[n - 1] + Rational(2) * acc;
      if (rhs != b[n]) return mismatch("type B convolution", n, b[n], rhs);
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<CheckResult> verify_generating_functions(int order) {
  std::vector<CheckResult> out;
  const auto [ca, cb] = series_from_closed_forms(order);
  out.push_back(run_check("closed-form-series-a", order, [&]() -> std::optional<std::string> {
    for (int k = 0; k <= order; ++k)
      if (ca.coeff(k) != narayana_a(k)) return mismatch("C^A coefficient", k, ca.coeff(k), narayana_a(k));
    return std::nullopt;
  }));
  out.push_back(run_check("closed-form-series-b", order, [&]() -> std::optional<std::string> {
    for (int k = 0; k <= order; ++k)
      if (cb.coeff(k) != narayana_b(k)) return mismatch("C^B coefficient", k, cb.coeff(k), narayana_b(k));
    return std::nullopt;
  }));
  // Gen(t,u) = t C^B(x,y,tu): the u^k coefficient is t^(k+1) [z^k] C^B.
  out.push_back(run_check("gen-series-b", order, [&]() -> std::optional<std::string> {
    const TruncatedSeries gen = gen_series(grammar_h(), kT, var::u, order);
    for (int k = 0; k <= order; ++k) {
      const MultiPoly expected = cb.coeff(k) * Monomial(var::t, k + 1);
      if (gen.coeff(k) != expected) return mismatch("Gen(t,u) coefficient", k, gen.coeff(k), expected);
    }
    return std::nullopt;
  }));
  // Gen(-1/t,u) = -1/t + (x+y)u + 2u(C^A(x,y,tu) - y).
  out.push_back(run_check("gen-series-a", order, [&]() -> std::optional<std::string> {
    const TruncatedSeries gen = gen_series(grammar_h(), -MultiPoly(var::t, -1), var::u, order);
    for (int k = 0; k <= order; ++k) {
      MultiPoly expected;
      if (k == 0) expected = -MultiPoly(var::t, -1);
      if (k == 1) expected = kX + kY + Rational(2) * (ca.coeff(0) - kY);
      if (k >= 2) expected = Rational(2) * ca.coeff(k - 1) * Monomial(var::t, k - 1);
      if (gen.coeff(k) != expected) return mismatch("Gen(-1/t,u) coefficient", k, gen.coeff(k), expected);
    }
    return std::nullopt;
  }));
  return out;
}

std::vector<CheckResult> verify_lemma_old_leaves(int n_max) {
  std::vector<CheckResult> out;
  out.push_back(run_check("old-leaf-formula", n_max, [&]() -> std::optional<std::string> {
    for (int n = 1; n <= n_max; ++n) {
      std::map<std::pair<int, int>, long> counts;
      long total = 0;
      enumerate_shapes(n + 1, [&](const PlaneShape& s) {
        ++counts[{s.leaves, s.old_leaves}];
        ++total;
      });
      if (Integer(total) != catalan(n))
        return "n=" + std::to_string(n) + ": " + std::to_string(total) + " shapes, expected " +
               catalan(n).get_str();
      for (int k = 0; k <= n + 1; ++k)
        for (int i = 0; i <= n + 1; ++i) {
          const auto it = counts.find({k, i});
          const Rational brute(it == counts.end() ? 0L : it->second);
          const Rational formula = old_leaf_formula(n, k, i);
          if (brute != formula)
            return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " i=" + std::to_string(i) +
                   ": counted " + brute.get_str() + ", formula " + formula.get_str();
        }
    }
    return std::nullopt;
  }));
  out.push_back(run_check("old-leaf-vandermonde", n_max, [&]() -> std::optional<std::string> {
    for (int n = 0; n + 1 <= n_max; ++n)
      for (int k = 0; k <= n + 2; ++k) {
        Rational acc = 0;
        for (int i = 0; i <= k; ++i) acc += Rational(i) * old_leaf_formula(n + 1, k, i);
        const Integer c = binomial(n, k - 1);
        if (acc != Rational(c * c))
          return "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + acc.get_str() +
                 " != " + Integer(c * c).get_str();
      }
    return std::nullopt;
  }));
  return out;
}

CheckResult check_tree_count(int n) {
  return run_check("tree-count", n, [n]() -> std::optional<std::string> {
    for (int m = 1; m <= n; ++m) {
      const Integer expected = factorial(m) * catalan(m - 1);
      long count = 0;
      if (m <= 7) {
        std::unordered_set<std::string> seen;
        enumerate(m, [&](const LabeledPlaneTree& t) {
          ++count;
          seen.insert(t.to_string());
        });
        if (static_cast<long>(seen.size()) != count)
          return "m=" + std::to_string(m) + ": " + std::to_string(count - static_cast<long>(seen.size())) +
                 " duplicate trees";
      } else {
        enumerate(m, [&](const LabeledPlaneTree&) { ++count; });
      }
      if (Integer(count) != expected)
        return "m=" + std::to_string(m) + ": " + std::to_string(count) + " trees, expected " +
               expected.get_str();
    }
    return std::nullopt;
  });
}

CheckResult check_star_tree_count(int n) {
  return run_check("star-tree-count", n, [n]() -> std::optional<std::string> {
    for (int m = 0; m <= n; ++m) {
      const Integer expected = factorial(m) * binomial(2 * m, m);
      std::unordered_set<std::string> seen;
      long count = 0;
      bool shaped = true;
      enumerate_star(m, [&](const LabeledPlaneTree& t) {
        ++count;
        seen.insert(t.to_string());
        shaped = shaped && t.is_leaf(1) && t.parent(1) == 2 && t.children(2).front() == 1;
      });
      if (!shaped) return "m=" + std::to_string(m) + ": node 1 is not always the old leaf of node 2";
      if (static_cast<long>(seen.size()) != count || Integer(count) != expected)
        return "m=" + std::to_string(m) + ": " + std::to_string(seen.size()) + " distinct of " +
               std::to_string(count) + ", expected " + expected.get_str();
    }
    return std::nullopt;
  });
}

CheckResult check_insert_delete_roundtrip(int n) {
  return run_check("insert-delete-roundtrip", n, [n]() -> std::optional<std::string> {
    std::optional<std::string> failure;
    for (int m = 1; m <= n && !failure; ++m) {
      enumerate(m, [&](const LabeledPlaneTree& t) {
        if (failure) return;
        if (m >= 2) {
          const auto [smaller, step] = delete_max(t);
          if (insert(smaller, step) != t) failure = "insert(delete_max(T)) != T for T=" + t.to_string();
        }
        if (m == n) return;
        for (const InsertionStep& step : insertion_steps(t)) {
          const auto back = delete_max(insert(t, step));
          if (back.first != t || back.second != step) {
            failure = "delete_max(insert(" + t.to_string() + ", " + step.to_string() + ")) gave (" +
                      back.first.to_string() + ", " + back.second.to_string() + ")";
            return;
          }
        }
      });
    }
    return failure;
  });
}

CheckResult check_leaf_transfer(int n) {
  return run_check("leaf-transfer-recurrence", n, [n]() -> std::optional<std::string> {
    auto histogram = [](int nodes) {
      std::vector<long> h(static_cast<std::size_t>(nodes) + 2, 0);
      enumerate(nodes, [&](const LabeledPlaneTree& t) { ++h[t.leaf_count()]; });
      return h;
    };
    std::vector<long> small = histogram(2);
    for (int m = 1; m <= n; ++m) {
      const std::vector<long> big = histogram(m + 2);
      for (int k = 1; k <= m + 1; ++k) {
        const long rhs = (m + 2 * k) * small[k] + (3 * m + 4 - 2 * k) * small[k - 1];
        if (big[k] != rhs)
          return "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + std::to_string(big[k]) +
                 " != " + std::to_string(rhs);
      }
      small = big;
    }
    return std::nullopt;
  });
}

CheckResult check_tilde_a_specialization(int n) {
  return run_check("tilde-a-specialization", n, [n]() -> std::optional<std::string> {
    const Substitution st_one{{var::s, kOne}, {var::t, kOne}};
    for (int m = 0; m <= n; ++m) {
      const MultiPoly lhs = substitute(tilde_a(m), st_one);
      const MultiPoly rhs = Rational(factorial(m + 1)) * narayana_a(m);
      if (lhs != rhs) return mismatch("tilde A at s=t=1", m, lhs, rhs);
    }
    return std::nullopt;
  });
}

CheckResult check_tilde_b_specialization(int n) {
  return run_check("tilde-b-specialization", n, [n]() -> std::optional<std::string> {
    const Substitution s_is_t{{var::s, kT}};
    for (int m = 0; m <= n; ++m) {
      const MultiPoly lhs = substitute(tilde_b(m), s_is_t);
      const MultiPoly rhs = Rational(factorial(m)) * narayana_b(m) * Monomial(var::t, m + 1);
      if (lhs != rhs) return mismatch("tilde B at s=t", m, lhs, rhs);
    }
    return std::nullopt;
  });
}

CheckResult check_tree_grammar_a(int n) {
  return run_check("tree-grammar-a", n, [n]() -> std::optional<std::string> {
    for (int m = 0; m <= n; ++m) {
      const MultiPoly trees = tilde_a(m, Route::Trees), grammar = tilde_a(m, Route::Grammar);
      if (trees != grammar) return mismatch("trees vs D^n(y)", m, trees, grammar);
    }
    return std::nullopt;
  });
}

CheckResult check_tree_grammar_b(int n) {
  return run_check("tree-grammar-b", n, [n]() -> std::optional<std::string> {
    for (int m = 0; m <= n; ++m) {
      const MultiPoly trees = tilde_b(m, Route::Trees), grammar = tilde_b(m, Route::Grammar);
      if (trees != grammar) return mismatch("star trees vs D^n(t)", m, trees, grammar);
    }
    return std::nullopt;
  });
}

CheckResult check_grammar_h_a(int n) {
  return run_check("grammar-h-a", n, [n]() -> std::optional<std::string> {
    const Grammar h = grammar_h();
    const Substitution y_one{{var::y, kOne}};
    MultiPoly cur = kY;
    for (int m = 0; m <= n; ++m) {
      if (m > 0) cur = h.derive(cur);
      const MultiPoly rhs = Rational(factorial(m + 1)) * narayana_a(m) * Monomial(var::t, m);
      if (cur != rhs) return mismatch("D_H^n(y)", m, cur, rhs);
      if (substitute(cur, y_one) != substitute(rhs, y_one))
        return mismatch("D_H^n(y) at y=1", m, substitute(cur, y_one), substitute(rhs, y_one));
    }
    return std::nullopt;
  });
}

CheckResult check_grammar_h_b(int n) {
  return run_check("grammar-h-b", n, [n]() -> std::optional<std::string> {
    const Grammar h = grammar_h();
    const Substitution y_one{{var::y, kOne}};
    MultiPoly cur = kT;
    for (int m = 0; m <= n; ++m) {
      if (m > 0) cur = h.derive(cur);
      const MultiPoly rhs = Rational(factorial(m)) * narayana_b(m) * Monomial(var::t, m + 1);
      if (cur != rhs) return mismatch("D_H^n(t)", m, cur, rhs);
      if (substitute(cur, y_one) != substitute(rhs, y_one))
        return mismatch("D_H^n(t) at y=1", m, substitute(cur, y_one), substitute(rhs, y_one));
    }
    return std::nullopt;
  });
}

CheckResult check_leibniz_convolution(int n) {
  return run_check("leibniz-convolution-vanishes", n, [n]() -> std::optional<std::string> {
    const Grammar h = grammar_h();
    std::vector<MultiPoly> inv{MultiPoly(var::t, -1)}, lin{kT};
    MultiPoly inv2(var::t, -2);
    for (int k = 1; k <= n; ++k) {
      inv.push_back(h.derive(inv.back()));
      lin.push_back(h.derive(lin.back()));
    }
    for (int m = 1; m <= n; ++m) {
      inv2 = h.derive(inv2);
      MultiPoly square, product;
      for (int k = 0; k <= m; ++k) {
        const Rational c(binomial(m, k));
        square += c * inv[k] * inv[m - k];
        product += c * lin[k] * inv[m - k];
      }
      if (square != inv2) return mismatch("Leibniz expansion of D_H^n(t^-2)", m, square, inv2);
      if (m >= 3 && !inv2.is_zero()) return mismatch("D_H^n(t^-2)", m, inv2, MultiPoly());
      if (!product.is_zero()) return mismatch("Leibniz expansion of D_H^n(1)", m, product, MultiPoly());
    }
    return std::nullopt;
  });
}

CheckResult check_grammar_h_reciprocal_powers(int n) {
  return run_check("grammar-h-reciprocal-powers", n, [n]() -> std::optional<std::string> {
    const Grammar h = grammar_h();
    const MultiPoly inv(var::t, -1), inv2(var::t, -2);
    const std::vector<std::pair<MultiPoly, MultiPoly>> fixed{
        {h.derive(inv), -(kX + kY)},
        {h.derive(inv2), Rational(-2) * inv * (kX + kY)},
        {h.derive_n(inv2, 2), Rational(2) * (kY - kX) * (kY - kX)}};
    for (std::size_t i = 0; i < fixed.size(); ++i)
      if (fixed[i].first != fixed[i].second)
        return mismatch("low-order derivative #" + std::to_string(i), 1, fixed[i].first, fixed[i].second);
    MultiPoly cur = h.derive(inv);
    for (int m = 2; m <= n; ++m) {
      cur = h.derive(cur);
      const MultiPoly rhs = Rational(-2 * factorial(m)) * narayana_a(m - 1) * Monomial(var::t, m - 1);
      if (cur != rhs) return mismatch("D_H^n(t^-1)", m, cur, rhs);
    }
    return std::nullopt;
  });
}

CheckResult check_uv_grammar_substitution(int n) {
  return run_check("uv-grammar-substitution", n, [n]() -> std::optional<std::string> {
    const Grammar h = grammar_h(), uv = grammar_uv();
    const MultiPoly u(var::u), v(var::v);
    const Substitution phi{{var::t, u * v}, {var::x, u * u}, {var::y, v * v}};
    std::vector<MultiPoly> inputs{kT,  kT * kT, kY * kT, kX, kY, MultiPoly(var::t, -1),
                                  MultiPoly(var::t, -2)};
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> t_exp(-2, 3), xy_exp(0, 3), coef(-3, 3);
    for (int i = 0; i < 4; ++i) {
      MultiPoly f;
      for (int j = 0; j < 2; ++j)
        f += term(Rational(coef(rng)), {{var::t, t_exp(rng)}, {var::x, xy_exp(rng)}, {var::y, xy_exp(rng)}});
      inputs.push_back(f);
    }
    for (const MultiPoly& f : inputs) {
      MultiPoly lhs = f, rhs = substitute(f, phi);
      for (int m = 1; m <= n; ++m) {
        lhs = h.derive(lhs);
        rhs = uv.derive(rhs);
        if (substitute(lhs, phi) != rhs)
          return "f=" + f.to_string() + ", " + mismatch("substituted D_H^n(f) vs the u,v grammar", m, substitute(lhs, phi), rhs);
      }
    }
    return std::nullopt;
  });
}

CheckResult check_uv_grammar_closed_forms(int n) {
  return run_check("uv-grammar-closed-forms", n, [n]() -> std::optional<std::string> {
    const Grammar uv = grammar_uv();
    const MultiPoly u(var::u), v(var::v);
    MultiPoly square = u * u, product = u * v;
    for (int m = 1; m <= n; ++m) {
      square = uv.derive(square);
      product = uv.derive(product);
      MultiPoly square_rhs, product_rhs;
      for (int k = 0; k <= m; ++k) {
        square_rhs += term(Rational(factorial(m + 1)) * narayana_number(m, k),
                           {{var::u, 3 * m - 2 * k + 2}, {var::v, m + 2 * k}});
        const Integer c = binomial(m, k);
        product_rhs += term(Rational(factorial(m) * c * c),
                            {{var::u, 3 * m - 2 * k + 1}, {var::v, m + 2 * k + 1}});
      }
      if (square != square_rhs) return mismatch("D^n(u^2)", m, square, square_rhs);
      if (product != product_rhs) return mismatch("D^n(uv)", m, product, product_rhs);
    }
    return std::nullopt;
  });
}

CheckResult check_edge_convention(int n) {
  return run_check("edge-convention-self-check", n, [n]() -> std::optional<std::string> {
    // The two trees on [2]: 1(2) has a proper edge, 2(1) an improper one.
    if (weight_basic(LabeledPlaneTree::parse("1(2)")) != Monomial::from_factors({{var::s, 1}, {var::x, 1}, {var::y, 1}}) ||
        weight_basic(LabeledPlaneTree::parse("2(1)")) != Monomial::from_factors({{var::t, 1}, {var::x, 1}, {var::y, 1}}))
      return std::string("single-edge trees are not weighted s*x*y (proper) and t*x*y (improper)");
    const Grammar g = grammar_g();
    MultiPoly cur = kY;
    for (int m = 0; m <= n; ++m) {
      if (m > 0) cur = g.derive(cur);
      const MultiPoly trees = sum_weights([m](auto&& f) { enumerate(m + 1, f); }, weight_basic);
      if (cur != trees) return mismatch("D^n(y) vs tree weights", m, cur, trees);
    }
    return std::nullopt;
  });
}

CheckResult check_refined_tree_chain_a(int n) {
  return run_check("refined-tree-chain-a", n, [n]() -> std::optional<std::string> {
    for (int m = 0; m <= n; ++m) {
      const MultiPoly trees = F(m, Route::Trees), chain = F(m, Route::Grammar);
      if (trees != chain) return mismatch("refined trees vs D_n...D_1(y_1)", m, trees, chain);
    }
    return std::nullopt;
  });
}

CheckResult check_refined_tree_chain_b(int n) {
  return run_check("refined-tree-chain-b", n, [n]() -> std::optional<std::string> {
    for (int m = 0; m <= n; ++m) {
      const MultiPoly trees = F_star(m, Route::Trees), chain = F_star(m, Route::Grammar);
      if (trees != chain) return mismatch("refined star trees vs D_(n+1)...D_2(t)", m, trees, chain);
    }
    return std::nullopt;
  });
}

CheckResult check_refined_operator_recurrence(int n) {
  return run_check("refined-operator-recurrence", n, [n]() -> std::optional<std::string> {
    for (int m = 1; m <= n; ++m) {
      const MultiPoly a = apply_T(m, F(m - 1, Route::Grammar)), a_trees = F(m, Route::Trees);
      if (a != a_trees) return mismatch("T_n(F_(n-1)) vs F_n", m, a, a_trees);
      const MultiPoly b = apply_T(m + 1, F_star(m - 1, Route::Grammar)), b_trees = F_star(m, Route::Trees);
      if (b != b_trees) return mismatch("T_(n+1)(F*_(n-1)) vs F*_n", m, b, b_trees);
    }
    return std::nullopt;
  });
}

CheckResult check_refined_specialization_a(int n) {
  return run_check("refined-specialization-a", n, [n]() -> std::optional<std::string> {
    for (int m = 1; m <= n; ++m) {
      const MultiPoly f = F(m);
      Substitution sub = diagonal(f, kX, kOne);
      sub.emplace(var::s, kT);
      const MultiPoly lhs = substitute(f, sub);
      const MultiPoly rhs = Rational(factorial(m + 1)) * substitute(narayana_a(m), {{var::y, kOne}}) *
                            Monomial(var::t, m);
      if (lhs != rhs) return mismatch("F_n(x,...,x,1,...,1,t,t)", m, lhs, rhs);
    }
    return std::nullopt;
  });
}

CheckResult check_refined_specialization_b(int n) {
  return run_check("refined-specialization-b", n, [n]() -> std::optional<std::string> {
    for (int m = 1; m <= n; ++m) {
      const MultiPoly f = F_star(m);
      Substitution sub = diagonal(f, kX, kOne);
      sub.emplace(var::s, kT);
      const MultiPoly lhs = substitute(f, sub);
      const MultiPoly rhs = Rational(factorial(m)) * substitute(narayana_b(m), {{var::y, kOne}}) *
                            Monomial(var::t, m + 1);
      if (lhs != rhs) return mismatch("F*_n(x,...,x,1,...,1,t,t)", m, lhs, rhs);
    }
    return std::nullopt;
  });
}

CheckResult check_refined_diagonal_basic(int n) {
  return run_check("refined-diagonal-basic", n, [n]() -> std::optional<std::string> {
    std::optional<std::string> failure;
    auto compare = [&](const LabeledPlaneTree& t, const Monomial& refined, const Monomial& basic) {
      const MultiPoly r(refined, Rational(1));
      const MultiPoly diag = substitute(r, diagonal(r, kX, kY));
      if (diag != MultiPoly(basic, Rational(1)))
        failure = "tree " + t.to_string() + ": " + diag.to_string() + " != " + basic.to_string();
    };
    for (int m = 0; m <= n && !failure; ++m) {
      enumerate(m + 1, [&](const LabeledPlaneTree& t) {
        if (!failure) compare(t, weight_refined(t), weight_basic(t));
      });
      enumerate_star(m, [&](const LabeledPlaneTree& t) {
        if (!failure) compare(t, weight_refined_star(t), weight_basic_star(t));
      });
      const MultiPoly f = F(m);
      if (!failure && substitute(f, diagonal(f, kX, kY)) != tilde_a(m))
        failure = mismatch("diagonal of F_n vs tilde A", m, substitute(f, diagonal(f, kX, kY)), tilde_a(m));
    }
    return failure;
  });
}

}  // namespace narayana
