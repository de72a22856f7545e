#include <gtest/gtest.h>

#include "narayana/series.hpp"
#include "oracles.hpp"

namespace {

using namespace narayana;

MultiPoly P(const char* text) { return MultiPoly::parse(text); }

const Substitution kOnes{{var::x, MultiPoly::constant(1)}, {var::y, MultiPoly::constant(1)}};

TEST(ClosedFormSeries, TypeAAtOnesGivesCatalan) {
  const auto [ca, cb] = series_from_closed_forms(3);
  const TruncatedSeries s = ca.map_coeffs(kOnes);
  const auto cat = oracle::catalan_table(3);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(s.coeff(k), MultiPoly(Rational(cat[k]))) << k;
  EXPECT_EQ(s.to_string(), "1 + z + 2*z^2 + 5*z^3");
}

TEST(ClosedFormSeries, TypeBAtOnesGivesCentralBinomials) {
  const auto [ca, cb] = series_from_closed_forms(3);
  const TruncatedSeries s = cb.map_coeffs(kOnes);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(s.coeff(k), MultiPoly(Rational(oracle::choose(2 * k, k)))) << k;
}

TEST(ClosedFormSeries, ConstantTerms) {
  const auto [ca, cb] = series_from_closed_forms(0);
  EXPECT_EQ(cb.coeff(0), MultiPoly::constant(1));
  EXPECT_EQ(ca.coeff(0), P("y"));
}

TEST(ClosedFormSeries, CoefficientsAreNarayanaPolynomials) {
  const auto [ca, cb] = series_from_closed_forms(9);
  for (int k = 0; k <= 9; ++k) {
    EXPECT_EQ(ca.coeff(k), oracle::type_a(k)) << k;
    EXPECT_EQ(cb.coeff(k), oracle::type_b(k)) << k;
  }
}

TEST(TruncatedSeries, ReciprocalOfGeometric) {
  const TruncatedSeries one_minus = TruncatedSeries::from_poly(P("1 - x*z"), var::z, 5);
  const TruncatedSeries inv = one_minus.reciprocal();
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(inv.coeff(k), P("x").pow(k));
  const TruncatedSeries prod = one_minus * inv;
  EXPECT_EQ(prod.to_poly(), MultiPoly::constant(1));
}

TEST(TruncatedSeries, ReciprocalOfLaurentMonomialLead) {
  const TruncatedSeries s = TruncatedSeries::from_poly(P("2*t + z"), var::z, 3);
  EXPECT_EQ((s * s.reciprocal()).to_poly(), MultiPoly::constant(1));
}

TEST(TruncatedSeries, SquareRootSquaresBack) {
  const TruncatedSeries s = TruncatedSeries::from_poly(P("1 + x*z - y*z^2"), var::z, 8);
  const TruncatedSeries r = s.sqrt();
  EXPECT_EQ(r.coeff(0), MultiPoly::constant(1));
  EXPECT_EQ(r * r, s);
}

TEST(TruncatedSeries, SquareRootOfBinomialSeries) {
  // sqrt(1 - 4z) = 1 - 2 sum C_(k-1) z^k
  const TruncatedSeries r = TruncatedSeries::from_poly(P("1 - 4*z"), var::z, 8).sqrt();
  const auto cat = oracle::catalan_table(8);
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(r.coeff(k), MultiPoly(Rational(-2 * cat[k - 1]))) << k;
}

TEST(TruncatedSeries, DerivativeLowersOrder) {
  const TruncatedSeries s = TruncatedSeries::from_poly(P("1 + x*z + z^3"), var::z, 4);
  const TruncatedSeries d = s.derivative();
  EXPECT_EQ(d.order(), 3);
  EXPECT_EQ(d.to_poly(), P("x + 3*z^2"));
}

TEST(TruncatedSeries, TruncationDropsHighTerms) {
  const TruncatedSeries s = TruncatedSeries::from_poly(P("1 + z + z^2 + z^3"), var::z, 3);
  EXPECT_EQ(s.truncated(1).to_poly(), P("1 + z"));
}

TEST(TruncatedSeries, RejectsFormalVariableInCoefficients) {
  EXPECT_THROW(TruncatedSeries::from_poly(P("z^-1"), var::z, 3), std::exception);
}

}  // namespace
