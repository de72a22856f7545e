#pragma once

#include <string>
#include <utility>
#include <vector>

#include "narayana/multipoly.hpp"

namespace narayana {

// Power series in one formal variable, cut after `order`. Coefficients are
// MultiPolys free of the formal variable. Results are exact through `order`.
class TruncatedSeries {
 public:
  TruncatedSeries(VarId formal_var, int order);
  TruncatedSeries(VarId formal_var, int order, std::vector<MultiPoly> coeffs);
  // Splits p by powers of the formal variable; p must have no negative powers of it.
  static TruncatedSeries from_poly(const MultiPoly& p, VarId formal_var, int order);

  VarId formal_var() const { return formal_var_; }
  int order() const { return order_; }
  const MultiPoly& coeff(int k) const;
  void set_coeff(int k, MultiPoly c);
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }

  TruncatedSeries truncated(int order) const;
  // Termwise d/d(formal var); order drops by one (to a minimum of 0).
  TruncatedSeries derivative() const;
  // Requires a single-term constant coefficient.
  TruncatedSeries reciprocal() const;
  // Requires constant coefficient exactly 1; returns the branch with constant term +1.
  TruncatedSeries sqrt() const;
  TruncatedSeries map_coeffs(const Substitution& sub) const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  // Sum of coeff(k) * var^k as a polynomial.
  MultiPoly to_poly() const;
  std::string to_string() const { return to_poly().to_string(); }

 private:
  void check_compatible(const TruncatedSeries& other) const;

  VarId formal_var_;
  int order_;
  std::vector<MultiPoly> coeffs_;
};

// Expands the closed forms of the type A and type B Narayana generating
// functions in z through `order`:
//   C^A = (1 + (y-x) z - sqrt(R)) / (2z),  C^B = 1 / sqrt(R),
//   R = 1 - 2 (x+y) z + (y-x)^2 z^2.
std::pair<TruncatedSeries, TruncatedSeries> series_from_closed_forms(int order);

}  // namespace narayana
