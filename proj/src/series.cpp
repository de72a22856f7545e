#include "narayana/series.hpp"

#include <stdexcept>

namespace narayana {

TruncatedSeries::TruncatedSeries(VarId formal_var, int order)
    : formal_var_(formal_var), order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(VarId formal_var, int order, std::vector<MultiPoly> coeffs)
    : TruncatedSeries(formal_var, order) {
  if (coeffs.size() > coeffs_.size()) coeffs.resize(coeffs_.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) set_coeff(static_cast<int>(k), std::move(coeffs[k]));
}

TruncatedSeries TruncatedSeries::from_poly(const MultiPoly& p, VarId formal_var, int order) {
  if (p.min_exponent(formal_var) < 0)
    throw std::invalid_argument("negative power of the formal variable " + formal_var.name());
  TruncatedSeries out(formal_var, order);
  for (const auto& [m, c] : p.terms()) {
    const int k = m.exponent(formal_var);
    if (k > order) continue;
    out.coeffs_[k].add_term(m.with_exponent(formal_var, 0), c);
  }
  return out;
}

const MultiPoly& TruncatedSeries::coeff(int k) const {
  if (k < 0 || k > order_) throw std::out_of_range("series coefficient index out of range");
  return coeffs_[k];
}

void TruncatedSeries::set_coeff(int k, MultiPoly c) {
  if (k < 0 || k > order_) throw std::out_of_range("series coefficient index out of range");
  if (c.contains(formal_var_))
    throw std::invalid_argument("series coefficient contains the formal variable " +
                                formal_var_.name());
  coeffs_[k] = std::move(c);
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries out(formal_var_, order);
  for (int k = 0; k <= std::min(order, order_); ++k) out.coeffs_[k] = coeffs_[k];
  return out;
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries out(formal_var_, std::max(order_ - 1, 0));
  for (int k = 1; k <= order_; ++k) out.coeffs_[k - 1] = coeffs_[k] * Rational(k);
  return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  const MultiPoly& a0 = coeffs_[0];
  if (!a0.is_monomial())
    throw std::domain_error("series reciprocal needs a single-term constant coefficient, got " +
                            a0.to_string());
  const MultiPoly inv0 = a0.pow(-1);
  TruncatedSeries out(formal_var_, order_);
  out.coeffs_[0] = inv0;
  for (int k = 1; k <= order_; ++k) {
    MultiPoly acc;
    for (int i = 1; i <= k; ++i)
      if (!coeffs_[i].is_zero() && !out.coeffs_[k - i].is_zero()) acc += coeffs_[i] * out.coeffs_[k - i];
    out.coeffs_[k] = -(acc * inv0);
  }
  return out;
}

TruncatedSeries TruncatedSeries::sqrt() const {
  if (coeffs_[0] != MultiPoly(Rational(1)))
    throw std::domain_error("series square root needs constant coefficient 1, got " +
                            coeffs_[0].to_string());
  TruncatedSeries out(formal_var_, order_);
  out.coeffs_[0] = MultiPoly(Rational(1));
  const Rational half(1, 2);
  for (int k = 1; k <= order_; ++k) {
    MultiPoly acc = coeffs_[k];
    for (int i = 1; i < k; ++i) acc -= out.coeffs_[i] * out.coeffs_[k - i];
    out.coeffs_[k] = acc * half;
  }
  return out;
}

TruncatedSeries TruncatedSeries::map_coeffs(const Substitution& sub) const {
  TruncatedSeries out(formal_var_, order_);
  for (int k = 0; k <= order_; ++k) out.set_coeff(k, substitute(coeffs_[k], sub));
  return out;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& other) const {
  if (formal_var_ != other.formal_var_)
    throw std::invalid_argument("series in different formal variables");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  check_compatible(other);
  if (other.order_ < order_) *this = truncated(other.order_);
  for (int k = 0; k <= order_; ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  check_compatible(other);
  if (other.order_ < order_) *this = truncated(other.order_);
  for (int k = 0; k <= order_; ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  const int order = std::min(a.order_, b.order_);
  TruncatedSeries out(a.formal_var_, order);
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j)
      if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.formal_var_ == b.formal_var_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

MultiPoly TruncatedSeries::to_poly() const {
  MultiPoly out;
  for (int k = 0; k <= order_; ++k) out += coeffs_[k] * Monomial(formal_var_, k);
  return out;
}

std::pair<TruncatedSeries, TruncatedSeries> series_from_closed_forms(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  const MultiPoly x(var::x), y(var::y);
  const MultiPoly y_minus_x = y - x;

  // The numerator of C^A vanishes at z = 0, so one extra order is kept
  // before dividing by z.
  TruncatedSeries radicand(var::z, order + 1);
  radicand.set_coeff(0, MultiPoly(Rational(1)));
  if (order + 1 >= 1) radicand.set_coeff(1, (x + y) * Rational(-2));
  if (order + 1 >= 2) radicand.set_coeff(2, y_minus_x * y_minus_x);

  const TruncatedSeries root = radicand.sqrt();

  TruncatedSeries numerator(var::z, order + 1);
  numerator.set_coeff(0, MultiPoly(Rational(1)));
  numerator.set_coeff(1, y_minus_x);
  numerator -= root;

  TruncatedSeries type_a(var::z, order);
  const Rational half(1, 2);
  for (int k = 0; k <= order; ++k) type_a.set_coeff(k, numerator.coeff(k + 1) * half);

  TruncatedSeries type_b = root.truncated(order).reciprocal();
  return {std::move(type_a), std::move(type_b)};
}

}  // namespace narayana
