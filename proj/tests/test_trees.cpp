#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "narayana/errors.hpp"
#include "narayana/tree.hpp"
#include "oracles.hpp"

namespace {

using namespace narayana;

LabeledPlaneTree T(const char* text) { return LabeledPlaneTree::parse(text); }

const char* kSevenNodeTree = "6(3(1,7),5,4(2))";

long count_trees(int n) {
  long c = 0;
  enumerate(n, [&](const LabeledPlaneTree&) { ++c; });
  return c;
}

long count_star_trees(int n) {
  long c = 0;
  enumerate_star(n, [&](const LabeledPlaneTree&) { ++c; });
  return c;
}

int subtree_min(const LabeledPlaneTree& t, Label v) {
  int m = v;
  for (Label c : t.children(v)) m = std::min(m, subtree_min(t, c));
  return m;
}

// alpha(j): smallest of the parent label and every label in the subtrees of
// the elder siblings of j. beta(j): smallest label in the subtree of j.
EdgeClass naive_edge(const LabeledPlaneTree& t, Label j) {
  const Label p = t.parent(j);
  int alpha = p;
  for (Label sib : t.children(p)) {
    if (sib == j) break;
    alpha = std::min(alpha, subtree_min(t, sib));
  }
  const int beta = subtree_min(t, j);
  return {j, alpha, beta, alpha < beta};
}

TEST(TreeText, ParsesSevenNodeTree) {
  const LabeledPlaneTree t = T(kSevenNodeTree);
  EXPECT_EQ(t.size(), 7);
  EXPECT_EQ(t.root(), 6);
  EXPECT_EQ(std::vector<Label>(t.children(6).begin(), t.children(6).end()), (std::vector<Label>{3, 5, 4}));
  EXPECT_EQ(std::vector<Label>(t.children(3).begin(), t.children(3).end()), (std::vector<Label>{1, 7}));
  EXPECT_EQ(t.parent(2), 4);
  EXPECT_EQ(t.to_string(), kSevenNodeTree);
}

TEST(TreeText, SingleNode) {
  const LabeledPlaneTree t = T("1");
  EXPECT_EQ(t.size(), 1);
  EXPECT_EQ(t, LabeledPlaneTree());
}

TEST(TreeText, RejectsBadInput) {
  EXPECT_THROW(T("1("), ParseError);
  EXPECT_THROW(T("1(2,)"), ParseError);
  EXPECT_THROW(T("1(1)"), LabelSetError);
  EXPECT_THROW(T("1(3)"), LabelSetError);
  EXPECT_THROW(T("2"), LabelSetError);
}

TEST(TreeText, RoundTripsOverAllSmallTrees) {
  for (int n = 1; n <= 5; ++n)
    for (const LabeledPlaneTree& t : all_trees(n)) EXPECT_EQ(T(t.to_string().c_str()), t);
}

TEST(TreeText, JsonForm) {
  const auto j = nlohmann::json::parse(T("2(1)").to_json());
  EXPECT_EQ(j["root"], 2);
  ASSERT_EQ(j["children"].size(), 1u);
  EXPECT_EQ(j["children"][0]["root"], 1);
  EXPECT_TRUE(j["children"][0]["children"].empty());
}

TEST(Insertion, N1OnSingleNode) {
  EXPECT_EQ(insert(LabeledPlaneTree(), {InsertionCase::N1, 1}), T("1(2)"));
}

TEST(Insertion, N2RelabelsAndAddsOldLeaf) {
  EXPECT_EQ(insert(T("1(2)"), {InsertionCase::N2, 1}), T("3(1,2)"));
}

TEST(Insertion, WorkedSevenNodeSequence) {
  const std::vector<std::pair<InsertionStep, const char*>> steps{
      {{InsertionCase::N1, 1}, "1(2)"},          {{InsertionCase::N2, 1}, "3(1,2)"},
      {{InsertionCase::N2, 2}, "3(1,4(2))"},     {{InsertionCase::E1, 1}, "3(1,5,4(2))"},
      {{InsertionCase::E2, 1}, "6(3(1),5,4(2))"}, {{InsertionCase::E1, 1}, kSevenNodeTree}};
  LabeledPlaneTree t;
  for (const auto& [step, expected] : steps) {
    t = insert(t, step);
    EXPECT_EQ(t.to_string(), expected) << step.to_string();
  }
}

TEST(Insertion, E2SplitsChildrenAtEdge) {
  EXPECT_EQ(insert(T("1(2,3,4)"), {InsertionCase::E2, 3}), T("5(1(2,3),4)"));
}

TEST(Insertion, InvalidTargets) {
  EXPECT_THROW(insert(T("1(2)"), {InsertionCase::E1, 1}), InvalidTarget);
  EXPECT_THROW(insert(T("1(2)"), {InsertionCase::N1, 3}), InvalidTarget);
  EXPECT_THROW(insert(T("1(2)"), {InsertionCase::E2, 0}), InvalidTarget);
}

TEST(Insertion, StepCounts) {
  for (const LabeledPlaneTree& t : all_trees(4)) EXPECT_EQ(insertion_steps(t).size(), 4u * 4 - 2);
}

TEST(DeleteMax, TwoNodeTree) {
  const auto [prev, step] = delete_max(T("1(2)"));
  EXPECT_EQ(prev, LabeledPlaneTree());
  EXPECT_EQ(step, (InsertionStep{InsertionCase::N1, 1}));
}

TEST(DeleteMax, SevenNodeTreePredecessor) {
  const auto [prev, step] = delete_max(T(kSevenNodeTree));
  EXPECT_EQ(prev.to_string(), "6(3(1),5,4(2))");
  EXPECT_EQ(step, (InsertionStep{InsertionCase::E1, 1}));
}

TEST(DeleteMax, UndoesEveryInsertionOnFiveNodes) {
  for (const LabeledPlaneTree& t : all_trees(5))
    for (const InsertionStep& step : insertion_steps(t)) {
      const auto [prev, back] = delete_max(insert(t, step));
      ASSERT_EQ(prev, t) << t.to_string() << " " << step.to_string();
      ASSERT_EQ(back, step) << t.to_string() << " " << step.to_string();
    }
}

TEST(DeleteMax, InsertRestoresEveryTreeOnSixNodes) {
  enumerate(6, [](const LabeledPlaneTree& t) {
    const auto [prev, step] = delete_max(t);
    ASSERT_EQ(insert(prev, step), t) << t.to_string();
  });
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(count_trees(2), 2);
  EXPECT_EQ(count_trees(3), 12);
  const auto trees = all_trees(2);
  const std::set<std::string> names{trees[0].to_string(), trees[1].to_string()};
  EXPECT_EQ(names, (std::set<std::string>{"1(2)", "2(1)"}));
}

TEST(Enumerate, CountsMatchFactorialTimesCatalan) {
  const auto cat = oracle::catalan_table(8);
  long prev = 1;
  for (int n = 1; n <= 7; ++n) {
    const long c = count_trees(n);
    EXPECT_EQ(oracle::Integer(c), oracle::fact(n) * cat[n - 1]) << n;
    if (n >= 2) EXPECT_EQ(c, prev * (4 * n - 6)) << n;
    prev = c;
  }
}

TEST(Enumerate, NoDuplicates) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> seen;
    long c = 0;
    enumerate(n, [&](const LabeledPlaneTree& t) {
      ++c;
      seen.insert(t.to_string());
    });
    EXPECT_EQ(static_cast<long>(seen.size()), c) << n;
  }
}

TEST(EnumerateStar, Counts) {
  EXPECT_EQ(count_star_trees(0), 1);
  EXPECT_EQ(all_star_trees(0).front(), T("2(1)"));
  EXPECT_EQ(count_star_trees(1), 2);
  for (int n = 0; n <= 5; ++n)
    EXPECT_EQ(oracle::Integer(count_star_trees(n)), oracle::fact(n) * oracle::choose(2 * n, n)) << n;
}

TEST(EnumerateStar, NodeOneIsLeftmostLeafOfNodeTwo) {
  for (int n = 0; n <= 4; ++n) {
    std::set<std::string> seen;
    for (const LabeledPlaneTree& t : all_star_trees(n)) {
      EXPECT_TRUE(t.is_leaf(1));
      EXPECT_EQ(t.parent(1), 2);
      EXPECT_EQ(t.children(2).front(), 1);
      EXPECT_TRUE(seen.insert(t.to_string()).second);
    }
  }
}

TEST(EdgeClasses, SevenNodeTree) {
  const auto edges = classify_edges(T(kSevenNodeTree));
  std::set<Label> improper, proper;
  for (const EdgeClass& e : edges) (e.proper ? proper : improper).insert(e.child);
  EXPECT_EQ(improper, (std::set<Label>{3, 1, 2}));
  EXPECT_EQ(proper, (std::set<Label>{7, 5, 4}));
  const auto it = std::find_if(edges.begin(), edges.end(), [](const EdgeClass& e) { return e.child == 4; });
  ASSERT_NE(it, edges.end());
  const EdgeClass& e4 = *it;
  EXPECT_EQ(e4.alpha, 1);
  EXPECT_EQ(e4.beta, 2);
  EXPECT_TRUE(e4.proper);
}

TEST(EdgeClasses, MatchDefinitionOnAllSmallTrees) {
  for (int n = 1; n <= 6; ++n)
    enumerate(n, [](const LabeledPlaneTree& t) {
      const auto edges = classify_edges(t);
      ASSERT_EQ(static_cast<int>(edges.size()), t.size() - 1);
      int proper = 0;
      for (const EdgeClass& e : edges) {
        const EdgeClass want = naive_edge(t, e.child);
        ASSERT_EQ(e.alpha, want.alpha) << t.to_string() << " edge " << e.child;
        ASSERT_EQ(e.beta, want.beta) << t.to_string() << " edge " << e.child;
        ASSERT_EQ(e.proper, want.proper);
        proper += e.proper;
      }
      ASSERT_EQ(proper + improper_edge_count(t), t.size() - 1);
    });
}

TEST(EdgeClasses, PathTreeIsAllProper) {
  for (int n = 2; n <= 8; ++n) {
    std::string text = std::to_string(n);
    for (int v = n - 1; v >= 1; --v) text = std::to_string(v) + "(" + text + ")";
    const LabeledPlaneTree t = T(text.c_str());
    EXPECT_EQ(improper_edge_count(t), 0) << text;
    EXPECT_TRUE(is_increasing(t));
  }
}

TEST(EdgeClasses, AllProperExactlyWhenIncreasing) {
  for (int n = 1; n <= 6; ++n)
    enumerate(n, [](const LabeledPlaneTree& t) {
      ASSERT_EQ(improper_edge_count(t) == 0, is_increasing(t)) << t.to_string();
    });
}

TEST(Weights, SevenNodeTreeBasic) {
  EXPECT_EQ(MultiPoly(weight_basic(T(kSevenNodeTree)), 1), MultiPoly::parse("s^3*t^3*x^4*y^3"));
}

TEST(Weights, SingleNode) {
  EXPECT_EQ(weight_basic(LabeledPlaneTree()), Monomial(var::y));
  EXPECT_EQ(weight_refined(LabeledPlaneTree()), Monomial(var::yi(1)));
}

TEST(Weights, TwoNodeTrees) {
  EXPECT_EQ(MultiPoly(weight_basic(T("1(2)")), 1), MultiPoly::parse("s*x*y"));
  EXPECT_EQ(MultiPoly(weight_basic(T("2(1)")), 1), MultiPoly::parse("t*x*y"));
  EXPECT_EQ(MultiPoly(weight_refined(T("1(2)")), 1), MultiPoly::parse("s*x_2*y_2"));
  EXPECT_EQ(MultiPoly(weight_refined(T("2(1)")), 1), MultiPoly::parse("t*x_2*y_2"));
}

TEST(Weights, SevenNodeTreeRefined) {
  const Monomial w = weight_refined(T(kSevenNodeTree));
  EXPECT_EQ(MultiPoly(w, 1), MultiPoly::parse("s^3*t^3*x_3*x_4*x_5*x_7*y_3*y_4*y_6"));
  EXPECT_EQ(w.exponent(var::xi(4)), 1);
}

TEST(Weights, RefinedDiagonalIsBasic) {
  for (int n = 1; n <= 6; ++n)
    enumerate(n, [n](const LabeledPlaneTree& t) {
      Substitution diag;
      for (int k = 1; k <= n; ++k) {
        diag[var::xi(k)] = MultiPoly(var::x);
        diag[var::yi(k)] = MultiPoly(var::y);
      }
      ASSERT_EQ(substitute(MultiPoly(weight_refined(t), 1), diag), MultiPoly(weight_basic(t), 1)) << t.to_string();
    });
}

TEST(Weights, LeavesAndInteriorNodes) {
  for (int n = 2; n <= 5; ++n)
    for (const LabeledPlaneTree& t : all_trees(n)) {
      const Monomial w = weight_basic(t);
      EXPECT_EQ(w.exponent(var::x), t.leaf_count());
      EXPECT_EQ(w.exponent(var::y), n - t.leaf_count());
      EXPECT_EQ(w.exponent(var::t), improper_edge_count(t));
    }
}

TEST(LeafTransfer, RecurrenceHoldsByEnumeration) {
  std::map<int, std::map<int, long>> hist;
  for (int n = 1; n <= 7; ++n) enumerate(n, [&](const LabeledPlaneTree& t) { ++hist[n][t.leaf_count()]; });
  for (int m = 0; m + 2 <= 7; ++m)
    for (int k = 1; k <= m + 2; ++k) {
      const long small_k = hist[m + 1][k], small_km1 = hist[m + 1][k - 1];
      EXPECT_EQ(hist[m + 2][k], (m + 2 * k) * small_k + (3 * m + 4 - 2 * k) * small_km1) << m << " " << k;
    }
}

TEST(Shapes, ThreeNodes) {
  std::vector<PlaneShape> shapes;
  enumerate_shapes(3, [&](const PlaneShape& s) { shapes.push_back(s); });
  ASSERT_EQ(shapes.size(), 2u);
  std::set<std::pair<int, int>> stats;
  for (const PlaneShape& s : shapes) stats.insert({s.leaves, s.old_leaves});
  EXPECT_EQ(stats, (std::set<std::pair<int, int>>{{1, 1}, {2, 1}}));
}

TEST(Shapes, CountIsCatalan) {
  const auto cat = oracle::catalan_table(10);
  for (int n = 1; n <= 10; ++n) {
    long c = 0;
    std::set<std::string> seen;
    enumerate_shapes(n, [&](const PlaneShape& s) {
      ++c;
      seen.insert(s.tree.to_string());
      ASSERT_EQ(s.leaves, s.tree.leaf_count());
      ASSERT_EQ(s.old_leaves, s.tree.old_leaf_count());
    });
    EXPECT_EQ(oracle::Integer(c), cat[n - 1]) << n;
    EXPECT_EQ(static_cast<long>(seen.size()), c) << n;
  }
}

}  // namespace
