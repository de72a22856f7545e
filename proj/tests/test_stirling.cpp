#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "narayana/errors.hpp"
#include "narayana/narayana.hpp"
#include "narayana/stirling.hpp"
#include "oracles.hpp"

namespace {

using namespace narayana;

MultiPoly P(const char* text) { return MultiPoly::parse(text); }

StirlingPermutation S(const char* text) { return StirlingPermutation::parse(text); }

// Every arrangement of the multiset {1,1,...,n,n} passing the nesting test.
std::set<std::vector<int>> brute_stirling(int n) {
  std::vector<int> w;
  for (int v = 1; v <= n; ++v) w.insert(w.end(), {v, v});
  std::set<std::vector<int>> out;
  do {
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v) {
      const auto first = std::find(w.begin(), w.end(), v);
      const auto second = std::find(first + 1, w.end(), v);
      ok = std::all_of(first + 1, second, [v](int u) { return u > v; });
    }
    if (ok) out.insert(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

TEST(Stirling, ListingForTwo) {
  std::vector<std::string> words;
  enumerate_stirling(2, [&](const StirlingPermutation& p) { words.push_back(p.to_string()); });
  EXPECT_EQ(words, (std::vector<std::string>{"1122", "1221", "2211"}));
  EXPECT_EQ(all_stirling(1).front().to_string(), "11");
}

TEST(Stirling, EnumerationMatchesBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<int>> seen;
    for (const StirlingPermutation& p : all_stirling(n)) EXPECT_TRUE(seen.insert(p.word()).second);
    EXPECT_EQ(seen, brute_stirling(n)) << n;
  }
}

TEST(Stirling, CountsAreDoubleFactorials) {
  for (int n = 1; n <= 7; ++n) {
    long c = 0;
    enumerate_stirling(n, [&](const StirlingPermutation&) { ++c; });
    EXPECT_EQ(Integer(c), oracle::odd_double_factorial(n)) << n;
  }
  EXPECT_EQ(all_stirling(6).size(), 10395u);
}

TEST(Stirling, RejectsNonStirlingWords) {
  EXPECT_THROW(S("1212"), std::invalid_argument);
  EXPECT_THROW(S("112"), std::invalid_argument);
  EXPECT_FALSE(is_stirling({2, 1, 1, 2, 3, 3, 4}));
  EXPECT_TRUE(is_stirling({2, 2, 1, 3, 3, 1}));
}

TEST(Stirling, PrintsCommasAboveNine) {
  std::vector<int> w;
  for (int v = 1; v <= 10; ++v) w.insert(w.end(), {v, v});
  const StirlingPermutation p(w);
  EXPECT_EQ(p.to_string().substr(0, 6), "1,1,2,");
  EXPECT_EQ(StirlingPermutation::parse(p.to_string()), p);
}

TEST(Stats, WorkedExamples) {
  const StirlingStats a = stats(S("1221"));
  EXPECT_EQ(a.plateaux, (std::vector<int>{2}));
  EXPECT_EQ(a.fa, (std::vector<int>{0, 1}));
  const StirlingStats b = stats(S("1122"));
  EXPECT_EQ(b.plateaux, (std::vector<int>{1, 3}));
  EXPECT_EQ(b.fa, (std::vector<int>{0}));
  const StirlingStats c = stats(S("11"));
  EXPECT_EQ(c.plateaux, (std::vector<int>{1}));
  EXPECT_EQ(c.fa, (std::vector<int>{0}));
  EXPECT_EQ(c.ascents, 1);
  EXPECT_EQ(c.descents, 1);
}

TEST(Stats, ProseAndDisplayedFaAgree) {
  for (int n = 1; n <= 6; ++n)
    enumerate_stirling(n, [](const StirlingPermutation& p) { ASSERT_EQ(stats(p).fa, fa_positions_prose(p)); });
}

TEST(Stats, AscentPlateauDescentEquidistributed) {
  for (int n = 1; n <= 6; ++n) {
    std::map<int, long> asc, plat, desc;
    enumerate_stirling(n, [&](const StirlingPermutation& p) {
      const StirlingStats st = stats(p);
      ++asc[st.ascents];
      ++plat[st.plateau_count()];
      ++desc[st.descents];
    });
    EXPECT_EQ(asc, plat) << n;
    EXPECT_EQ(plat, desc) << n;
  }
}

TEST(QPoly, SmallValues) {
  EXPECT_EQ(q_poly(1), P("x_1*y_1"));
  EXPECT_EQ(q_poly(2), P("x_1*x_2*y_1 + x_2*y_1*y_2 + x_1*x_2*y_2"));
}

TEST(QPoly, CollapsesToPlateauPolynomial) {
  EXPECT_EQ(substitute(q_poly(2), {{var::xi(1), P("x")}, {var::xi(2), P("x")}, {var::yi(1), P("1")},
                                   {var::yi(2), P("1")}}),
            P("x + 2*x^2"));
  for (int n = 1; n <= 6; ++n) {
    Substitution m;
    for (int k = 1; k <= n; ++k) {
      m[var::xi(k)] = P("x");
      m[var::yi(k)] = P("1");
    }
    EXPECT_EQ(substitute(q_poly(n), m), plateau_poly(n)) << n;
  }
}

TEST(QPoly, PlateauPolynomialIsSecondOrderEulerian) {
  // Independent table from C(n,k) = (k+1) C(n-1,k) + (2n-1-k) C(n-1,k-1).
  std::vector<std::vector<Integer>> table{{1}};
  for (int n = 1; n <= 7; ++n) {
    std::vector<Integer> row(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) {
      if (k < static_cast<int>(table[n - 1].size())) row[k] += (k + 1) * table[n - 1][k];
      if (k >= 1) row[k] += (2 * n - 1 - k) * table[n - 1][k - 1];
    }
    table.push_back(row);
    MultiPoly want;
    for (int k = 0; k < n; ++k) want.add_term(Monomial(var::x, k + 1), Rational(row[k]));
    EXPECT_EQ(plateau_poly(n), want) << n;
    EXPECT_EQ(second_order_eulerian(n), want) << n;
  }
}

TEST(Glove, SmallTrees) {
  EXPECT_EQ(glove(LabeledPlaneTree::parse("1(2)")).to_string(), "11");
  EXPECT_EQ(glove(LabeledPlaneTree::parse("1(2,3(4))")).to_string(), "112332");
  EXPECT_EQ(unglove(S("11")), LabeledPlaneTree::parse("1(2)"));
  EXPECT_THROW(glove(LabeledPlaneTree::parse("2(1)")), NotIncreasing);
}

TEST(Glove, BijectionOnIncreasingTrees) {
  for (int n = 2; n <= 7; ++n) {
    long increasing = 0;
    std::set<std::vector<int>> images;
    enumerate(n, [&](const LabeledPlaneTree& t) {
      if (!is_increasing(t)) return;
      ++increasing;
      const StirlingPermutation p = glove(t);
      ASSERT_EQ(p.n(), n - 1);
      ASSERT_TRUE(is_stirling(p.word()));
      ASSERT_EQ(unglove(p), t) << t.to_string();
      ASSERT_EQ(stats(p).plateau_count(), t.leaf_count()) << t.to_string();
      images.insert(p.word());
    });
    EXPECT_EQ(Integer(increasing), oracle::odd_double_factorial(n - 1)) << n;
    EXPECT_EQ(static_cast<long>(images.size()), increasing);
  }
}

TEST(Glove, OldChildrenBecomeFirstAppearanceAscents) {
  for (int n = 2; n <= 6; ++n)
    enumerate(n, [](const LabeledPlaneTree& t) {
      if (!is_increasing(t)) return;
      const StirlingPermutation p = glove(t);
      const StirlingStats st = stats(p);
      std::multiset<std::pair<int, int>> pairs;
      for (int i : st.fa) pairs.insert({p.at(i), p.at(i + 1)});
      std::multiset<std::pair<int, int>> want;
      for (Label v = 1; v <= t.size(); ++v)
        if (!t.is_leaf(v)) want.insert({v - 1, t.children(v).front() - 1});
      ASSERT_EQ(pairs, want) << t.to_string();
    });
}

TEST(SecondOrderLink, SmallCases) {
  EXPECT_EQ(substitute(F(1), {{var::t, P("0")}}), P("s*x_2*y_2"));
  const CheckResult r = verify_second_order_link(6);
  EXPECT_TRUE(r.pass) << r.witness.value_or("");
}

TEST(Verifiers, PassAtSmallSizes) {
  for (auto check : {check_stirling_count, check_second_order_eulerian, check_triple_equidistribution,
                     check_glove_roundtrip, check_glove_plateau_leaf, check_glove_first_appearance,
                     check_fa_display_vs_prose, check_increasing_iff_proper}) {
    const CheckResult r = check(4);
    EXPECT_TRUE(r.pass) << r.identity << ": " << r.witness.value_or("");
  }
}

}  // namespace
