#include <gtest/gtest.h>

#include <random>

#include "narayana/errors.hpp"
#include "narayana/narayana.hpp"
#include "narayana/stability.hpp"
#include "oracles.hpp"

namespace {

using namespace narayana;

MultiPoly P(const char* text) { return MultiPoly::parse(text); }

std::vector<VarId> sampled_vars(const MultiPoly& p) {
  std::vector<VarId> out;
  for (VarId v : p.variables())
    if (v != var::s && v != var::t) out.push_back(v);
  return out;
}

MultiPoly at_st(const MultiPoly& p, const Rational& s, const Rational& t) {
  return substitute(p, {{var::s, MultiPoly(s)}, {var::t, MultiPoly(t)}});
}

TEST(Sturm, Examples) {
  const SturmResult a = real_rooted(P("x^2 + 4*x + 1"));
  EXPECT_TRUE(a.real_rooted);
  EXPECT_EQ(a.real_root_count, 2);
  const SturmResult b = real_rooted(P("x^2 + x + 1"));
  EXPECT_FALSE(b.real_rooted);
  EXPECT_EQ(b.real_root_count, 0);
  const SturmResult c = real_rooted(P("(x-1)^3"));
  EXPECT_TRUE(c.real_rooted);
  EXPECT_EQ(c.real_root_count, 3);
  EXPECT_EQ(c.degree, 3);
}

TEST(Sturm, ConstantsAndErrors) {
  EXPECT_TRUE(real_rooted(P("7")).real_rooted);
  EXPECT_THROW(real_rooted(MultiPoly()), ZeroPolynomial);
  EXPECT_THROW(real_rooted(P("x + y")), std::invalid_argument);
  EXPECT_THROW(real_rooted(P("x^-1 + 1")), std::invalid_argument);
}

TEST(Sturm, RandomRationalRootProducts) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4), deg(1, 6), coin(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    MultiPoly p = MultiPoly::constant(1);
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      p *= P("x") - MultiPoly(r);
    }
    const SturmResult real = real_rooted(p);
    EXPECT_TRUE(real.real_rooted) << p.to_string();
    EXPECT_EQ(real.real_root_count, d);
    if (coin(rng)) {
      // b^2 - 4c < 0 with b = num, c = b^2 / 4 + positive
      const int b = num(rng);
      const MultiPoly q = P("x^2") + Rational(b) * P("x") + MultiPoly(Rational(b * b, 4) + Rational(den(rng)));
      const SturmResult complex = real_rooted(p * q);
      EXPECT_FALSE(complex.real_rooted) << (p * q).to_string();
      EXPECT_EQ(complex.real_root_count, d);
    }
  }
}

TEST(UPoly, GcdAndSquareFreeParts) {
  const UPoly p = UPoly::from_multipoly(P("(x-1)^3*(x+2)^2*(x-5)"));
  const auto parts = square_free_decomposition(p);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], UPoly::from_multipoly(P("x-5")));
  EXPECT_EQ(parts[1], UPoly::from_multipoly(P("x+2")));
  EXPECT_EQ(parts[2], UPoly::from_multipoly(P("x-1")));
  EXPECT_EQ(UPoly::gcd(UPoly::from_multipoly(P("x^2-1")), UPoly::from_multipoly(P("x^2+2*x+1"))),
            UPoly::from_multipoly(P("x+1")));
  EXPECT_EQ(sturm_distinct_real_roots(UPoly::from_multipoly(P("x^3 - x"))), 3);
}

TEST(Reduce, Operations) {
  EXPECT_EQ(reduce(P("x*y + x"), {ReduceOp::specialize(var::y, 0)}), P("x"));
  EXPECT_EQ(reduce(P("x^2*y"), {ReduceOp::differentiate(var::x)}), P("2*x*y"));
  EXPECT_EQ(reduce(P("x_1*x_2 + y_1"), {ReduceOp::diagonalize(var::xi(1), var::x),
                                        ReduceOp::diagonalize(var::xi(2), var::x)}),
            P("x^2 + y_1"));
}

TEST(Reduce, DiagonalisedRefinedPolynomialIsRealRooted) {
  const MultiPoly f = F(2);
  std::vector<ReduceOp> ops;
  for (VarId v : f.variables()) {
    if (v.kind == VarKind::Xi) ops.push_back(ReduceOp::diagonalize(v, var::x));
    if (v.kind == VarKind::Yi) ops.push_back(ReduceOp::diagonalize(v, var::y));
  }
  ops.push_back(ReduceOp::specialize(var::y, 1));
  ops.push_back(ReduceOp::specialize(var::s, 1));
  ops.push_back(ReduceOp::specialize(var::t, 1));
  const MultiPoly u = reduce(f, ops);
  EXPECT_EQ(u, Rational(6) * substitute(oracle::type_a(2), {{var::y, P("1")}}));
  EXPECT_TRUE(real_rooted(u).real_rooted);
}

TEST(OperatorSymbol, HoldsForSmallN) {
  for (int n = 1; n <= 3; ++n) {
    const CheckResult r = operator_symbol_identity(n);
    EXPECT_TRUE(r.pass) << n << ": " << r.witness.value_or("");
  }
}

TEST(Probe, FindsPlantedZero) {
  const ProbeReport r = stability_probe(P("1 + x*y"), {var::x, var::y});
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.confirmed) << r.note;
  for (const auto& z : *r.witness) EXPECT_GT(z.imag(), 0);
  EXPECT_GE(r.samples, 1);
  EXPECT_LE(r.samples, ProbeOptions{}.samples);
}

TEST(Probe, SumOfVariablesIsClean) {
  const ProbeReport r = stability_probe(P("x + y"), {var::x, var::y});
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_GT(r.min_abs_value, 0);
}

TEST(Probe, RefinedPolynomialIsClean) {
  const MultiPoly f = at_st(F(3), 1, 1);
  const ProbeReport r = stability_probe(f, sampled_vars(f));
  EXPECT_FALSE(r.witness.has_value()) << r.note;
}

TEST(Probe, IsReproducibleForFixedSeed) {
  const MultiPoly f = at_st(F(2), Rational(1, 2), 2);
  ProbeOptions opts;
  opts.samples = 500;
  const ProbeReport a = stability_probe(f, sampled_vars(f), opts);
  const ProbeReport b = stability_probe(f, sampled_vars(f), opts);
  EXPECT_EQ(a.min_abs_value, b.min_abs_value);
}

TEST(Probe, RequiresSpecialisedParameters) {
  EXPECT_THROW(stability_probe(F(2), sampled_vars(F(2))), UnspecializedVariable);
}

TEST(Grid, TildeExamples) {
  EXPECT_TRUE(real_rooted(substitute(at_st(tilde_a(3, Route::Grammar), 1, 1), {{var::y, P("1")}})).real_rooted);
  EXPECT_EQ(substitute(at_st(tilde_a(3, Route::Grammar), 1, 1), {{var::y, P("1")}}), P("24*(x + 3*x^2 + x^3)"));
  EXPECT_TRUE(
      real_rooted(substitute(at_st(tilde_b(2, Route::Grammar), 2, Rational(1, 2)), {{var::y, P("1")}})).real_rooted);
  EXPECT_TRUE(real_rooted_grid(TildeFamily::A, 5, {Rational(1, 2), 1, 2, 3}).pass);
  EXPECT_TRUE(real_rooted_grid(TildeFamily::B, 4, {Rational(1, 2), 1, 2, 3}).pass);
}

TEST(Grid, RejectsNonPositiveValues) {
  const CheckResult r = real_rooted_grid(TildeFamily::A, 2, {0, 1});
  EXPECT_FALSE(r.pass);
}

TEST(Verifiers, PassAtSmallSizes) {
  ProbeOptions opts;
  opts.samples = 1000;
  const std::vector<Rational> grid{Rational(1, 2), 2};
  for (const CheckResult& r : {check_probe_refined_a(2, grid, opts), check_probe_refined_b(2, grid, opts),
                               check_probe_planted_witness(opts), check_reduce_chain_real_rooted(2, grid, opts)})
    EXPECT_TRUE(r.pass) << r.identity << ": " << r.witness.value_or("");
}

}  // namespace
