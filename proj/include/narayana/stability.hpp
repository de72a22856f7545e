#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "narayana/multipoly.hpp"
#include "narayana/report.hpp"

namespace narayana {

// Dense univariate polynomial over Q; coeffs()[i] multiplies x^i. The
// leading coefficient is nonzero unless the polynomial is zero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  // Requires p to be a polynomial (no negative powers) in at most one variable.
  static UPoly from_multipoly(const MultiPoly& p);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }

  UPoly derivative() const;
  UPoly monic() const;
  friend bool operator==(const UPoly&, const UPoly&) = default;

  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  // Quotient and remainder; b must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  // Monic greatest common divisor (zero if both are zero).
  static UPoly gcd(UPoly a, UPoly b);

 private:
  void trim();
  std::vector<Rational> c_;
};

struct SturmResult {
  int degree = 0;
  int real_root_count = 0;  // with multiplicity
  bool real_rooted = false;
};

// Square-free factors a_1, a_2, ... with p = lead * prod a_i^i (Yun).
std::vector<UPoly> square_free_decomposition(const UPoly& p);
// Distinct real roots of a square-free polynomial, by Sturm sequence sign
// variations at minus and plus infinity.
int sturm_distinct_real_roots(const UPoly& squarefree);

// Exact real-root count of a univariate polynomial. Throws ZeroPolynomial
// for 0 and std::invalid_argument for Laurent or multivariate input.
SturmResult real_rooted(const MultiPoly& p);

// Stability-preserving operations.
struct ReduceOp {
  enum class Kind { Diagonalize, Specialize, Differentiate };
  Kind kind;
  VarId v;
  VarId w{};       // Diagonalize: v -> w
  Rational a = 0;  // Specialize: v -> a

  static ReduceOp diagonalize(VarId v, VarId w) { return {Kind::Diagonalize, v, w, 0}; }
  static ReduceOp specialize(VarId v, Rational a) { return {Kind::Specialize, v, {}, std::move(a)}; }
  static ReduceOp differentiate(VarId v) { return {Kind::Differentiate, v, {}, 0}; }
};
MultiPoly reduce(const MultiPoly& p, const std::vector<ReduceOp>& ops);

// G_(T_m) = T_m(prod_(k<=m) (x_k + xh_k)(y_k + yh_k)) against its expansion
// with cleared denominators, for 1 <= m <= n.
CheckResult operator_symbol_identity(int n);

struct ProbeOptions {
  int samples = 10000;
  std::uint64_t seed = 20240601;
  double radius = 4.0;
  double threshold = 1e-9;
};

struct ProbeReport {
  int samples = 0;
  double min_abs_value = 0;
  // A point of the open upper half-plane product where |p| fell below the
  // threshold, in the order of `vars`.
  std::optional<std::vector<std::complex<double>>> witness;
  // True once exact Gaussian-rational evaluation gives p = 0 at the witness.
  bool confirmed = false;
  std::string note;
};

// Falsification probe for stability in `vars`: uniform random points with
// real parts in [-R, R] and imaginary parts in (0, R], plus, for each sample,
// the roots of p restricted to a line through the sample in one coordinate.
// Every other variable must already be specialised; otherwise throws
// UnspecializedVariable.
ProbeReport stability_probe(const MultiPoly& p, const std::vector<VarId>& vars,
                            const ProbeOptions& options = {});

enum class TildeFamily { A, B };

// Real-rootedness of tilde A (or B) at y = 1 for every (s,t) in grid x grid,
// for 1 <= m <= n. Grid values must be positive (std::invalid_argument).
CheckResult real_rooted_grid(TildeFamily family, int n, const std::vector<Rational>& grid);

// Probe F(m) (resp. F_star(m)) for 1 <= m <= n at every (s,t) in grid x grid.
CheckResult check_probe_refined_a(int n, const std::vector<Rational>& grid, const ProbeOptions& options);
CheckResult check_probe_refined_b(int n, const std::vector<Rational>& grid, const ProbeOptions& options);
// The probe must find and confirm the zero of 1 + x y in the upper half-planes.
CheckResult check_probe_planted_witness(const ProbeOptions& options);
// Diagonalise and specialise F(m) to univariate polynomials that must be
// real-rooted, with and without a derivative, for 1 <= m <= n; partially
// reduced bivariate forms must stay probe-clean.
CheckResult check_reduce_chain_real_rooted(int n, const std::vector<Rational>& grid,
                                           const ProbeOptions& options);

}  // namespace narayana
