#include "narayana/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "narayana/errors.hpp"
#include "narayana/grammar.hpp"
#include "narayana/narayana.hpp"

namespace narayana {

// ------------------------------------------------------------------ UPoly

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_multipoly(const MultiPoly& p) {
  const std::set<VarId> vars = p.variables();
  if (vars.size() > 1) throw std::invalid_argument("expected a univariate polynomial, got " + p.to_string());
  if (vars.empty()) return UPoly({p.constant_term()});
  const VarId v = *vars.begin();
  if (p.min_exponent(v) < 0) throw std::invalid_argument("expected a polynomial, got Laurent " + p.to_string());
  std::vector<Rational> c(static_cast<std::size_t>(p.max_exponent(v)) + 1, Rational(0));
  for (const auto& [m, coef] : p.terms()) c[m.exponent(v)] = coef;
  return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
  std::vector<Rational> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = c_;
  const Rational l = lead();
  for (auto& x : c) x /= l;
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  std::vector<Rational> quo(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db) + 1 : 0, Rational(0));
  for (int k = a.degree(); k >= db; --k) {
    const Rational q = rem[k] / b.lead();
    if (q == 0) continue;
    quo[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.c_[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<UPoly> square_free_decomposition(const UPoly& p) {
  std::vector<UPoly> out;
  if (p.degree() <= 0) return out;
  const UPoly dp = p.derivative();
  const UPoly b = UPoly::gcd(p, dp);
  UPoly c = UPoly::divmod(p, b).first;
  UPoly d = UPoly::divmod(dp, b).first - c.derivative();
  while (c.degree() > 0) {
    const UPoly a = UPoly::gcd(c, d);
    out.push_back(a);
    c = UPoly::divmod(c, a).first;
    d = UPoly::divmod(d, a).first - c.derivative();
  }
  return out;
}

int sturm_distinct_real_roots(const UPoly& squarefree) {
  if (squarefree.degree() <= 0) return 0;
  std::vector<UPoly> seq{squarefree, squarefree.derivative()};
  while (!seq.back().is_zero()) {
    const UPoly r = UPoly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(UPoly() - r);
  }
  auto variations = [&](bool at_plus_infinity) {
    int count = 0, prev = 0;
    for (const UPoly& q : seq) {
      int sign = sgn(q.lead());
      if (!at_plus_infinity && q.degree() % 2 == 1) sign = -sign;
      if (sign == 0) continue;
      if (prev != 0 && sign != prev) ++count;
      prev = sign;
    }
    return count;
  };
  return variations(false) - variations(true);
}

SturmResult real_rooted(const MultiPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("real_rooted of the zero polynomial");
  const UPoly u = UPoly::from_multipoly(p);
  SturmResult out;
  out.degree = u.degree();
  const std::vector<UPoly> factors = square_free_decomposition(u);
  for (std::size_t i = 0; i < factors.size(); ++i)
    out.real_root_count += static_cast<int>(i + 1) * sturm_distinct_real_roots(factors[i]);
  out.real_rooted = out.real_root_count == out.degree;
  return out;
}

MultiPoly reduce(const MultiPoly& p, const std::vector<ReduceOp>& ops) {
  MultiPoly cur = p;
  for (const ReduceOp& op : ops) {
    switch (op.kind) {
      case ReduceOp::Kind::Diagonalize:
        cur = substitute(cur, {{op.v, MultiPoly(op.w)}});
        break;
      case ReduceOp::Kind::Specialize:
        cur = substitute(cur, {{op.v, MultiPoly(op.a)}});
        break;
      case ReduceOp::Kind::Differentiate:
        cur = partial_deriv(cur, op.v);
        break;
    }
  }
  return cur;
}

CheckResult operator_symbol_identity(int n) {
  return run_check("operator-symbol-identity", n, [n]() -> std::optional<std::string> {
    const MultiPoly s(var::s), t(var::t);
    for (int m = 1; m <= n; ++m) {
      std::vector<MultiPoly> factors;
      for (int k = 1; k <= m; ++k) {
        factors.push_back(MultiPoly(var::xi(k)) + MultiPoly(var::xh(k)));
        factors.push_back(MultiPoly(var::yi(k)) + MultiPoly(var::yh(k)));
      }
      auto product_without = [&](std::size_t skip) {
        MultiPoly acc(Rational(1));
        for (std::size_t i = 0; i < factors.size(); ++i)
          if (i != skip) acc *= factors[i];
        return acc;
      };
      const MultiPoly symbol_input = product_without(factors.size());
      const MultiPoly lhs = apply_T(m, symbol_input);

      const auto next = static_cast<std::uint32_t>(m + 1);
      const MultiPoly xn(var::xi(next)), yn(var::yi(next));
      MultiPoly sum;
      for (std::size_t i = 0; i < factors.size(); ++i) sum += product_without(i);
      const MultiPoly rhs =
          Rational(m - 1) * (s * xn + t * yn) * symbol_input + (s + t) * xn * yn * sum;
      if (lhs != rhs) {
        const std::string diff = (lhs - rhs).to_string();
        return "n=" + std::to_string(m) + ": difference " + diff.substr(0, 400);
      }
    }
    return std::nullopt;
  });
}

// ------------------------------------------------------------------ probe

namespace {

using Cplx = std::complex<double>;

// Exact complex number with rational parts.
struct GaussQ {
  Rational re = 0, im = 0;
  friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussQ inverse() const {
    const Rational norm = re * re + im * im;
    if (norm == 0) throw std::domain_error("division by zero in exact probe check");
    return {re / norm, -im / norm};
  }
  bool is_zero() const { return re == 0 && im == 0; }
};

GaussQ gq_pow(const GaussQ& z, int e) {
  GaussQ base = e < 0 ? z.inverse() : z, acc{1, 0};
  for (int k = 0; k < std::abs(e); ++k) acc = acc * base;
  return acc;
}

struct CompiledPoly {
  std::vector<Rational> exact_coef;
  std::vector<double> coef;
  std::vector<std::vector<std::pair<int, int>>> factors;  // (var slot, exponent)
  std::vector<int> max_exp, min_exp;
};

CompiledPoly compile(const MultiPoly& p, const std::vector<VarId>& vars) {
  CompiledPoly out;
  out.max_exp.assign(vars.size(), 0);
  out.min_exp.assign(vars.size(), 0);
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::pair<int, int>> f;
    for (const auto& [v, e] : m.factors()) {
      const auto it = std::find(vars.begin(), vars.end(), v);
      if (it == vars.end())
        throw UnspecializedVariable("variable " + v.name() + " is neither sampled nor specialised");
      const int slot = static_cast<int>(it - vars.begin());
      f.push_back({slot, e});
      out.max_exp[slot] = std::max(out.max_exp[slot], e);
      out.min_exp[slot] = std::min(out.min_exp[slot], e);
    }
    out.exact_coef.push_back(c);
    out.coef.push_back(c.get_d());
    out.factors.push_back(std::move(f));
  }
  return out;
}

Cplx ipow(Cplx z, int e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  Cplx acc = 1.0;
  for (int k = 0; k < e; ++k) acc *= z;
  return acc;
}

Cplx evaluate(const CompiledPoly& p, const std::vector<Cplx>& z) {
  Cplx sum = 0.0;
  for (std::size_t i = 0; i < p.coef.size(); ++i) {
    Cplx term = p.coef[i];
    for (const auto& [slot, e] : p.factors[i]) term *= ipow(z[slot], e);
    sum += term;
  }
  return sum;
}

// Coefficients of p as a polynomial in coordinate `slot`, others fixed.
template <class Num, class Pow, class Coef>
std::vector<Num> line_coeffs(const CompiledPoly& p, const std::vector<Num>& z, int slot, Pow&& power,
                             Coef&& coef_of) {
  std::vector<Num> out(static_cast<std::size_t>(p.max_exp[slot]) + 1, Num{});
  for (std::size_t i = 0; i < p.coef.size(); ++i) {
    Num term = coef_of(i);
    int degree = 0;
    for (const auto& [s, e] : p.factors[i]) {
      if (s == slot) degree = e;
      else term = term * power(z[s], e);
    }
    out[degree] = out[degree] + term;
  }
  return out;
}

std::vector<Cplx> roots_of(const std::vector<Cplx>& c) {
  int d = static_cast<int>(c.size()) - 1;
  while (d > 0 && std::abs(c[d]) < 1e-300) --d;
  if (d <= 0) return {};
  if (d == 1) return {-c[0] / c[1]};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[i] / c[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Cplx> out;
  for (int i = 0; i < d; ++i) out.push_back(solver.eigenvalues()[i]);
  return out;
}

std::string format_point(const std::vector<VarId>& vars, const std::vector<Cplx>& z) {
  std::ostringstream out;
  out.precision(6);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out << ", ";
    out << vars[i].name() << "=" << z[i].real() << (z[i].imag() < 0 ? "" : "+") << z[i].imag() << "i";
  }
  return out.str();
}

// Exact confirmation for a candidate whose coordinate `slot` is a numerical
// root: other coordinates are taken as the exact rationals of their doubles
// and, when p is affine in `slot`, the root is solved exactly.
bool confirm_exact(const CompiledPoly& p, std::vector<Cplx>& z, int slot) {
  if (p.max_exp[slot] != 1 || p.min_exp[slot] < 0) return false;
  std::vector<GaussQ> q(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) q[i] = {Rational(z[i].real()), Rational(z[i].imag())};
  for (std::size_t i = 0; i < z.size(); ++i)
    if (static_cast<int>(i) != slot && q[i].im <= 0) return false;
  const auto c = line_coeffs<GaussQ>(p, q, slot, gq_pow, [&](std::size_t i) { return GaussQ{p.exact_coef[i], 0}; });
  if (c[1].is_zero()) return false;
  GaussQ root = c[0] * c[1].inverse();
  root = {-root.re, -root.im};
  if (root.im <= 0) return false;
  q[slot] = root;
  GaussQ value;
  for (std::size_t i = 0; i < p.exact_coef.size(); ++i) {
    GaussQ term{p.exact_coef[i], 0};
    for (const auto& [s, e] : p.factors[i]) term = term * gq_pow(q[s], e);
    value = value + term;
  }
  if (!value.is_zero()) return false;
  z[slot] = {root.re.get_d(), root.im.get_d()};
  return true;
}

}  // namespace

ProbeReport stability_probe(const MultiPoly& p, const std::vector<VarId>& vars, const ProbeOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("probe needs at least one sample");
  if (!(options.radius > 0)) throw std::invalid_argument("probe radius must be positive");
  const CompiledPoly compiled = compile(p, vars);
  ProbeReport report;
  report.min_abs_value = std::numeric_limits<double>::infinity();
  report.note = "falsifier only: absence of a witness is evidence, not proof";
  if (vars.empty()) {
    report.samples = options.samples;
    report.min_abs_value = std::abs(evaluate(compiled, {}));
    return report;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> real_part(-options.radius, options.radius);
  std::uniform_real_distribution<double> imag_part(0.0, options.radius);
  std::vector<Cplx> z(vars.size());
  auto sample_imag = [&] {
    double v = 0;
    while (v <= 0) v = imag_part(rng);
    return v;
  };

  for (int sample = 0; sample < options.samples; ++sample) {
    report.samples = sample + 1;
    for (auto& c : z) c = {real_part(rng), sample_imag()};
    const double value = std::abs(evaluate(compiled, z));
    report.min_abs_value = std::min(report.min_abs_value, value);
    if (value < options.threshold) {
      report.witness = z;
      report.note = "numerical near-zero, unconfirmed";
      return report;
    }
    const int slot = sample % static_cast<int>(vars.size());
    if (compiled.min_exp[slot] < 0 || compiled.max_exp[slot] == 0) continue;
    const auto coeffs = line_coeffs<Cplx>(
        compiled, z, slot, [](Cplx b, int e) { return ipow(b, e); },
        [&](std::size_t i) { return Cplx(compiled.coef[i]); });
    for (const Cplx& root : roots_of(coeffs)) {
      if (!(root.imag() > 1e-9) || !std::isfinite(root.real()) || !std::isfinite(root.imag())) continue;
      std::vector<Cplx> candidate = z;
      candidate[slot] = root;
      const double at_root = std::abs(evaluate(compiled, candidate));
      report.min_abs_value = std::min(report.min_abs_value, at_root);
      if (at_root >= options.threshold) continue;
      report.confirmed = confirm_exact(compiled, candidate, slot);
      report.witness = candidate;
      report.note = report.confirmed ? "exact zero in the upper half-plane product"
                                     : "numerical near-zero, unconfirmed";
      report.min_abs_value = report.confirmed ? 0.0 : report.min_abs_value;
      return report;
    }
  }
  return report;
}

// ----------------------------------------------------------------- checks

namespace {

void require_positive(const std::vector<Rational>& grid) {
  if (grid.empty()) throw std::invalid_argument("grid is empty");
  for (const Rational& g : grid)
    if (g <= 0) throw std::invalid_argument("grid values must be positive, got " + g.get_str());
}

std::vector<VarId> sorted_vars(const MultiPoly& p) {
  const std::set<VarId> v = p.variables();
  return {v.begin(), v.end()};
}

Substitution st_point(const Rational& s, const Rational& t) {
  return {{var::s, MultiPoly(s)}, {var::t, MultiPoly(t)}};
}

std::string st_label(const Rational& s, const Rational& t) {
  return "(s,t)=(" + s.get_str() + "," + t.get_str() + ")";
}

std::vector<ReduceOp> diagonal_ops(const MultiPoly& p) {
  std::vector<ReduceOp> ops;
  for (VarId v : p.variables()) {
    if (v.kind == VarKind::Xi) ops.push_back(ReduceOp::diagonalize(v, var::x));
    if (v.kind == VarKind::Yi) ops.push_back(ReduceOp::diagonalize(v, var::y));
  }
  return ops;
}

CheckResult probe_family(const char* identity, bool star, int n, const std::vector<Rational>& grid,
                         const ProbeOptions& options) {
  return run_check(identity, n, [=]() -> std::optional<std::string> {
    require_positive(grid);
    for (int m = 1; m <= n; ++m) {
      const MultiPoly base = star ? F_star(m, Route::Grammar) : F(m, Route::Grammar);
      for (const Rational& s : grid)
        for (const Rational& t : grid) {
          const MultiPoly p = substitute(base, st_point(s, t));
          const std::vector<VarId> vars = sorted_vars(p);
          const ProbeReport r = stability_probe(p, vars, options);
          if (r.witness)
            return "n=" + std::to_string(m) + " " + st_label(s, t) + ": " + r.note + " at " +
                   format_point(vars, *r.witness);
        }
    }
    return std::nullopt;
  });
}

}  // namespace

CheckResult real_rooted_grid(TildeFamily family, int n, const std::vector<Rational>& grid) {
  const char* identity = family == TildeFamily::A ? "real-rooted-grid-a" : "real-rooted-grid-b";
  return run_check(identity, n, [=]() -> std::optional<std::string> {
    require_positive(grid);
    const Substitution y_one{{var::y, MultiPoly(Rational(1))}};
    for (int m = 1; m <= n; ++m) {
      const MultiPoly base =
          substitute(family == TildeFamily::A ? tilde_a(m, Route::Grammar) : tilde_b(m, Route::Grammar), y_one);
      for (const Rational& s : grid)
        for (const Rational& t : grid) {
          const MultiPoly p = substitute(base, st_point(s, t));
          const SturmResult r = real_rooted(p);
          if (!r.real_rooted)
            return "n=" + std::to_string(m) + " " + st_label(s, t) + ": " + std::to_string(r.real_root_count) +
                   " real roots of degree " + std::to_string(r.degree) + " polynomial " + p.to_string();
        }
    }
    return std::nullopt;
  });
}

CheckResult check_probe_refined_a(int n, const std::vector<Rational>& grid, const ProbeOptions& options) {
  return probe_family("probe-refined-a", false, n, grid, options);
}

CheckResult check_probe_refined_b(int n, const std::vector<Rational>& grid, const ProbeOptions& options) {
  return probe_family("probe-refined-b", true, n, grid, options);
}

CheckResult check_probe_planted_witness(const ProbeOptions& options) {
  return run_check("probe-planted-witness", 2, [=]() -> std::optional<std::string> {
    const MultiPoly x(var::x), y(var::y);
    const ProbeReport planted = stability_probe(MultiPoly(Rational(1)) + x * y, {var::x, var::y}, options);
    if (!planted.witness) return std::string("no witness found for 1 + x*y");
    if (!planted.confirmed) return "witness for 1 + x*y not confirmed exactly: " + planted.note;
    for (const Cplx& c : *planted.witness)
      if (!(c.imag() > 0)) return std::string("witness coordinate outside the upper half-plane");
    const ProbeReport clean = stability_probe(x + y, {var::x, var::y}, options);
    if (clean.witness) return "false witness for x + y: " + format_point({var::x, var::y}, *clean.witness);
    return std::nullopt;
  });
}

CheckResult check_reduce_chain_real_rooted(int n, const std::vector<Rational>& grid, const ProbeOptions& options) {
  return run_check("reduce-chain-real-rooted", n, [=]() -> std::optional<std::string> {
    require_positive(grid);
    ProbeOptions light = options;
    light.samples = std::min(options.samples, 2000);
    for (int m = 1; m <= n; ++m) {
      const MultiPoly f = F(m, Route::Grammar);
      const std::vector<ReduceOp> diag = diagonal_ops(f);
      for (const Rational& s : grid)
        for (const Rational& t : grid) {
          std::vector<ReduceOp> chain = diag;
          chain.push_back(ReduceOp::specialize(var::s, s));
          chain.push_back(ReduceOp::specialize(var::t, t));
          const MultiPoly bivariate = reduce(f, chain);
          for (const MultiPoly& q : {bivariate, reduce(bivariate, {ReduceOp::differentiate(var::y)})}) {
            const ProbeReport r = stability_probe(q, sorted_vars(q), light);
            if (r.witness) return "n=" + std::to_string(m) + " " + st_label(s, t) + ": reduced form " + q.to_string() + " lost stability";
          }
          const MultiPoly uni = reduce(bivariate, {ReduceOp::specialize(var::y, Rational(1))});
          for (const MultiPoly& q : {uni, reduce(uni, {ReduceOp::differentiate(var::x)})}) {
            const SturmResult r = real_rooted(q);
            if (!r.real_rooted)
              return "n=" + std::to_string(m) + " " + st_label(s, t) + ": " + q.to_string() + " is not real-rooted";
          }
        }
    }
    return std::nullopt;
  });
}

}  // namespace narayana
