#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "narayana/multipoly.hpp"

namespace narayana {

using Label = int;

struct InsertionStep;

// Rooted plane tree with labels exactly {1, ..., n}. Children are ordered
// left (eldest) to right (youngest). An edge is named by its child's label.
class LabeledPlaneTree {
 public:
  // The one-node tree labelled 1.
  LabeledPlaneTree();
  // children[v] lists the children of node v; children[0] is ignored.
  // Throws LabelSetError unless this describes a tree on {1, ..., n}.
  LabeledPlaneTree(Label root, std::vector<std::vector<Label>> children);

  int size() const { return static_cast<int>(parent_.size()) - 1; }
  Label root() const { return root_; }
  // 0 for the root.
  Label parent(Label v) const { return parent_[v]; }
  std::span<const Label> children(Label v) const { return children_[v]; }
  bool is_leaf(Label v) const { return children_[v].empty(); }
  bool contains(Label v) const { return v >= 1 && v <= size(); }

  int leaf_count() const;
  int old_leaf_count() const;

  friend bool operator==(const LabeledPlaneTree& a, const LabeledPlaneTree& b) {
    return a.root_ == b.root_ && a.size() == b.size() &&
           std::equal(a.children_.begin() + 1, a.children_.end(), b.children_.begin() + 1);
  }

  // "label" or "label(child,child,...)".
  std::string to_string() const;
  // Throws ParseError or LabelSetError.
  static LabeledPlaneTree parse(std::string_view text);
  // {"root": label, "children": [...]}, recursively.
  std::string to_json() const;

 private:
  friend void insert_into(const LabeledPlaneTree&, InsertionStep, LabeledPlaneTree&);
  friend std::pair<LabeledPlaneTree, InsertionStep> delete_max(const LabeledPlaneTree&);

  Label root_ = 1;
  std::vector<Label> parent_;
  std::vector<std::vector<Label>> children_;
};

enum class InsertionCase { N1, N2, E1, E2 };

std::string_view to_string(InsertionCase c);

// N1/N2 target a node; E1/E2 target the edge above node `target`.
struct InsertionStep {
  InsertionCase kind;
  Label target;
  friend bool operator==(const InsertionStep&, const InsertionStep&) = default;
  std::string to_string() const;
};

// Adds node n+1 to a tree on [n]. Throws InvalidTarget for a missing target
// or an edge step aimed at the root.
LabeledPlaneTree insert(const LabeledPlaneTree& tree, InsertionStep step);
// Same as insert, writing into `out` so its storage can be reused.
void insert_into(const LabeledPlaneTree& tree, InsertionStep step, LabeledPlaneTree& out);

// Removes the largest label and reports the step that re-inserts it.
// Requires at least two nodes.
std::pair<LabeledPlaneTree, InsertionStep> delete_max(const LabeledPlaneTree& tree);

// All valid steps: every node for N1/N2 and every edge for E1/E2.
std::vector<InsertionStep> insertion_steps(const LabeledPlaneTree& tree);
// Steps that keep node 1 the leftmost leaf of node 2: no node step on 1 or 2.
std::vector<InsertionStep> star_insertion_steps(const LabeledPlaneTree& tree);

// The tree 2(1).
LabeledPlaneTree star_seed();

namespace detail {

template <class StepsFn, class Visitor>
void grow(std::vector<LabeledPlaneTree>& levels, std::size_t depth, std::size_t last,
          StepsFn& steps_of, Visitor& visit) {
  const LabeledPlaneTree& cur = levels[depth];
  if (depth == last) {
    visit(static_cast<const LabeledPlaneTree&>(cur));
    return;
  }
  for (const InsertionStep& step : steps_of(cur)) {
    insert_into(cur, step, levels[depth + 1]);
    grow(levels, depth + 1, last, steps_of, visit);
  }
}

}  // namespace detail

// Streams every tree on [n] exactly once, built by repeated insertion.
template <class Visitor>
void enumerate(int n, Visitor&& visit) {
  if (n < 1) return;
  std::vector<LabeledPlaneTree> levels(static_cast<std::size_t>(n));
  auto steps = [](const LabeledPlaneTree& t) { return insertion_steps(t); };
  detail::grow(levels, 0, levels.size() - 1, steps, visit);
}

// Streams every tree on [n+2] in which node 1 is the leftmost leaf of node 2.
template <class Visitor>
void enumerate_star(int n, Visitor&& visit) {
  if (n < 0) return;
  std::vector<LabeledPlaneTree> levels(static_cast<std::size_t>(n) + 1);
  levels[0] = star_seed();
  auto steps = [](const LabeledPlaneTree& t) { return star_insertion_steps(t); };
  detail::grow(levels, 0, levels.size() - 1, steps, visit);
}

std::vector<LabeledPlaneTree> all_trees(int n);
std::vector<LabeledPlaneTree> all_star_trees(int n);

// ------------------------------------------------------------ edge classes

struct EdgeClass {
  Label child;
  Label alpha;  // min(parent label, beta of each elder sibling)
  Label beta;   // smallest label in the child's subtree
  bool proper;  // alpha < beta
};

// One entry per non-root node, ordered by child label.
std::vector<EdgeClass> classify_edges(const LabeledPlaneTree& tree);
int improper_edge_count(const LabeledPlaneTree& tree);
// Labels increase along every root-to-leaf path.
bool is_increasing(const LabeledPlaneTree& tree);

// s^proper t^improper x^leaves y^interior; the one-node tree weighs y.
Monomial weight_basic(const LabeledPlaneTree& tree);
// As weight_basic, but nodes 1 and 2 carry no node variable.
Monomial weight_basic_star(const LabeledPlaneTree& tree);
// s^proper t^improper, leaf i -> x_max(i, alpha(i)), interior i with old
// child j -> y_max(i, beta(j)); the one-node tree weighs y_1.
Monomial weight_refined(const LabeledPlaneTree& tree);
Monomial weight_refined_star(const LabeledPlaneTree& tree);

// ------------------------------------------------------------------ shapes

struct PlaneShape {
  // The shape drawn as a tree labelled 1..n in preorder.
  LabeledPlaneTree tree;
  int leaves;
  int old_leaves;
};

// Streams each of the Catalan(n-1) unlabelled plane trees on n nodes once.
void enumerate_shapes(int n, const std::function<void(const PlaneShape&)>& visit);

}  // namespace narayana
