#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "narayana/combinatorics.hpp"

namespace narayana {

// Variable kinds, in canonical order. Indexed kinds carry an index >= 1.
enum class VarKind : std::uint8_t { S, T, X, Y, U, V, Z, Xi, Yi, XiHat, YiHat };

// A polynomial variable. Ordered by kind, then index.
struct VarId {
  VarKind kind = VarKind::S;
  std::uint32_t index = 0;

  constexpr auto operator<=>(const VarId&) const = default;

  bool indexed() const { return kind >= VarKind::Xi; }
  // Printed form: s t x y u v z x_3 y_4 xh_3 yh_4.
  std::string name() const;
  // Inverse of name(); throws ParseError.
  static VarId parse(std::string_view text);
};

namespace var {
inline constexpr VarId s{VarKind::S, 0};
inline constexpr VarId t{VarKind::T, 0};
inline constexpr VarId x{VarKind::X, 0};
inline constexpr VarId y{VarKind::Y, 0};
inline constexpr VarId u{VarKind::U, 0};
inline constexpr VarId v{VarKind::V, 0};
inline constexpr VarId z{VarKind::Z, 0};
VarId xi(std::uint32_t k);
VarId yi(std::uint32_t k);
VarId xh(std::uint32_t k);
VarId yh(std::uint32_t k);
}  // namespace var

// Laurent monomial: sorted (variable, nonzero exponent) pairs.
class Monomial {
 public:
  using Factor = std::pair<VarId, int>;

  Monomial() = default;
  explicit Monomial(VarId v, int exponent = 1);
  // Merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int exponent(VarId v) const;
  int degree() const;

  Monomial with_exponent(VarId v, int exponent) const;
  Monomial pow(int e) const;
  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

// Canonical term order: ascending total degree; within a degree, the term
// with the larger exponent on the earliest differing variable comes first.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse Laurent polynomial with exact rational coefficients. Zero
// coefficients are never stored; the empty map is the zero polynomial.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, TermOrder>;

  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  explicit MultiPoly(VarId v, int exponent = 1);
  MultiPoly(const Monomial& m, const Rational& c);

  static MultiPoly constant(long c) { return MultiPoly(Rational(c)); }
  // Accepts the canonical text format plus parentheses and integer powers of
  // parenthesised groups. Throws ParseError.
  static MultiPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;
  // Coefficient of the empty monomial.
  Rational constant_term() const { return coefficient(Monomial{}); }
  std::set<VarId> variables() const;
  bool contains(VarId v) const;
  // Largest / smallest exponent of v over all terms (0 for the zero polynomial).
  int max_exponent(VarId v) const;
  int min_exponent(VarId v) const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly& operator*=(const Monomial& m);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(MultiPoly a, const Monomial& m) { return a *= m; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  // Nonnegative powers of anything; negative powers of single terms only.
  MultiPoly pow(int e) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

using Substitution = std::map<VarId, MultiPoly>;

// d/dv with the Laurent rule d(v^a)/dv = a v^(a-1).
MultiPoly partial_deriv(const MultiPoly& p, VarId v);

// Simultaneous substitution. A variable occurring with a negative exponent
// must map to a single term; otherwise throws SubstitutionUndefined.
MultiPoly substitute(const MultiPoly& p, const Substitution& map);

// Parses "k=v,k=v" where each value is a polynomial, e.g. "x=1,y=1/2".
Substitution parse_substitution(std::string_view text);

}  // namespace narayana
