#include "narayana/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

#include "narayana/errors.hpp"

namespace narayana {

namespace {

void validate(Label root, std::vector<std::vector<Label>>& children, std::vector<Label>& parent) {
  const int n = static_cast<int>(children.size()) - 1;
  if (n < 1) throw LabelSetError("a tree needs at least one node");
  if (root < 1 || root > n) throw LabelSetError("root label " + std::to_string(root) + " outside 1.." + std::to_string(n));
  parent.assign(static_cast<std::size_t>(n) + 1, -1);
  parent[root] = 0;
  for (int v = 1; v <= n; ++v) {
    for (Label c : children[v]) {
      if (c < 1 || c > n) throw LabelSetError("label " + std::to_string(c) + " outside 1.." + std::to_string(n));
      if (parent[c] != -1) throw LabelSetError("label " + std::to_string(c) + " appears twice");
      parent[c] = v;
    }
  }
  // Every node must hang below the root; a cycle would leave some unreachable.
  std::vector<Label> stack{root};
  int seen = 0;
  while (!stack.empty()) {
    const Label v = stack.back();
    stack.pop_back();
    ++seen;
    for (Label c : children[v]) stack.push_back(c);
    if (seen > n) break;
  }
  if (seen != n) throw LabelSetError("children lists do not form a single tree");
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  LabeledPlaneTree run() {
    skip_space();
    const Label root = node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    int n = 0;
    for (const auto& [label, kids] : kids_) n = std::max(n, label);
    if (static_cast<int>(kids_.size()) != n)
      throw LabelSetError("tree labels are not exactly 1.." + std::to_string(n));
    std::vector<std::vector<Label>> children(static_cast<std::size_t>(n) + 1);
    for (auto& [label, kids] : kids_) children[label] = std::move(kids);
    return LabeledPlaneTree(root, std::move(children));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree text: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Label node() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a label");
    if (pos_ - start > 9) fail("label too long");
    const Label label = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (label < 1) throw LabelSetError("labels start at 1");
    if (kids_.count(label)) throw LabelSetError("label " + std::to_string(label) + " appears twice");
    kids_[label];
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::vector<Label> kids;
      while (true) {
        kids.push_back(node());
        skip_space();
        if (pos_ >= text_.size()) fail("unclosed '('");
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
      kids_[label] = std::move(kids);
    }
    return label;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<Label, std::vector<Label>> kids_;
};

void write_text(const LabeledPlaneTree& t, Label v, std::string& out) {
  out += std::to_string(v);
  const auto kids = t.children(v);
  if (kids.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) out += ',';
    write_text(t, kids[i], out);
  }
  out += ')';
}

nlohmann::json to_json_value(const LabeledPlaneTree& t, Label v) {
  nlohmann::json kids = nlohmann::json::array();
  for (Label c : t.children(v)) kids.push_back(to_json_value(t, c));
  return {{"root", v}, {"children", std::move(kids)}};
}

// Position of v in its parent's child list.
std::size_t slot_of(const std::vector<Label>& siblings, Label v) {
  return static_cast<std::size_t>(std::find(siblings.begin(), siblings.end(), v) - siblings.begin());
}

}  // namespace

LabeledPlaneTree::LabeledPlaneTree() : root_(1), parent_{0, 0}, children_(2) {}

LabeledPlaneTree::LabeledPlaneTree(Label root, std::vector<std::vector<Label>> children)
    : root_(root), children_(std::move(children)) {
  validate(root_, children_, parent_);
  children_[0].clear();
}

int LabeledPlaneTree::leaf_count() const {
  int count = 0;
  for (Label v = 1; v <= size(); ++v) count += is_leaf(v);
  return count;
}

int LabeledPlaneTree::old_leaf_count() const {
  int count = 0;
  for (Label v = 1; v <= size(); ++v) {
    if (!is_leaf(v) || v == root_) continue;
    count += children_[parent_[v]].front() == v;
  }
  return count;
}

std::string LabeledPlaneTree::to_string() const {
  std::string out;
  write_text(*this, root_, out);
  return out;
}

LabeledPlaneTree LabeledPlaneTree::parse(std::string_view text) { return TreeParser(text).run(); }

std::string LabeledPlaneTree::to_json() const { return to_json_value(*this, root_).dump(); }

std::string_view to_string(InsertionCase c) {
  switch (c) {
    case InsertionCase::N1: return "N1";
    case InsertionCase::N2: return "N2";
    case InsertionCase::E1: return "E1";
    case InsertionCase::E2: return "E2";
  }
  return "?";
}

std::string InsertionStep::to_string() const {
  return std::string(narayana::to_string(kind)) + "@" + std::to_string(target);
}

LabeledPlaneTree insert(const LabeledPlaneTree& tree, InsertionStep step) {
  LabeledPlaneTree out;
  insert_into(tree, step, out);
  return out;
}

void insert_into(const LabeledPlaneTree& tree, InsertionStep step, LabeledPlaneTree& out) {
  const Label i = step.target;
  if (!tree.contains(i)) throw InvalidTarget("step " + step.to_string() + " names a missing node");
  const bool edge_case = step.kind == InsertionCase::E1 || step.kind == InsertionCase::E2;
  if (edge_case && i == tree.root_) throw InvalidTarget("step " + step.to_string() + " targets the root");

  const Label m = tree.size() + 1;
  out.root_ = tree.root_;
  out.parent_ = tree.parent_;
  out.parent_.push_back(0);
  out.children_.resize(static_cast<std::size_t>(m) + 1);
  for (Label v = 1; v < m; ++v) out.children_[v] = tree.children_[v];
  out.children_[m].clear();
  auto& kids = out.children_;
  auto& par = out.parent_;

  // Puts m where `old` hung (parent slot or root).
  auto take_place_of = [&](Label old) {
    const Label p = par[old];
    par[m] = p;
    if (p == 0) {
      out.root_ = m;
    } else {
      auto& sib = kids[p];
      sib[slot_of(sib, old)] = m;
    }
  };

  switch (step.kind) {
    case InsertionCase::N1:
      kids[i].insert(kids[i].begin(), m);
      par[m] = i;
      break;
    case InsertionCase::N2:
      take_place_of(i);
      kids[m].swap(kids[i]);
      for (Label c : kids[m]) par[c] = m;
      kids[m].insert(kids[m].begin(), i);
      par[i] = m;
      break;
    case InsertionCase::E1: {
      const Label p = par[i];
      auto& sib = kids[p];
      sib.insert(sib.begin() + static_cast<std::ptrdiff_t>(slot_of(sib, i)) + 1, m);
      par[m] = p;
      break;
    }
    case InsertionCase::E2: {
      const Label p = par[i];
      take_place_of(p);
      auto& sib = kids[p];
      const auto cut = sib.begin() + static_cast<std::ptrdiff_t>(slot_of(sib, i)) + 1;
      kids[m].push_back(p);
      kids[m].insert(kids[m].end(), cut, sib.end());
      sib.erase(cut, sib.end());
      for (Label c : kids[m]) par[c] = m;
      break;
    }
  }
}

std::pair<LabeledPlaneTree, InsertionStep> delete_max(const LabeledPlaneTree& tree) {
  const Label m = tree.size();
  if (m < 2) throw std::invalid_argument("delete_max needs at least two nodes");
  LabeledPlaneTree out;
  out.root_ = tree.root_;
  out.parent_.assign(tree.parent_.begin(), tree.parent_.end() - 1);
  out.children_.assign(tree.children_.begin(), tree.children_.end() - 1);
  auto& kids = out.children_;
  auto& par = out.parent_;
  const Label p = tree.parent_[m];
  const auto& mkids = tree.children_[m];

  // Hands m's position to `heir`.
  auto replace_m_with = [&](Label heir) {
    par[heir] = p;
    if (p == 0) {
      out.root_ = heir;
    } else {
      auto& sib = kids[p];
      sib[slot_of(sib, m)] = heir;
    }
  };

  if (mkids.empty()) {
    auto& sib = kids[p];
    const std::size_t pos = slot_of(sib, m);
    sib.erase(sib.begin() + static_cast<std::ptrdiff_t>(pos));
    if (pos == 0) return {std::move(out), {InsertionCase::N1, p}};
    return {std::move(out), {InsertionCase::E1, sib[pos - 1]}};
  }

  const Label k = mkids.front();
  InsertionStep step{};
  if (tree.children_[k].empty()) {
    step = {InsertionCase::N2, k};
  } else {
    step = {InsertionCase::E2, tree.children_[k].back()};
  }
  replace_m_with(k);
  for (std::size_t c = 1; c < mkids.size(); ++c) {
    kids[k].push_back(mkids[c]);
    par[mkids[c]] = k;
  }
  return {std::move(out), step};
}

std::vector<InsertionStep> insertion_steps(const LabeledPlaneTree& tree) {
  const int n = tree.size();
  std::vector<InsertionStep> out;
  out.reserve(static_cast<std::size_t>(4 * n - 2));
  for (Label v = 1; v <= n; ++v) {
    out.push_back({InsertionCase::N1, v});
    out.push_back({InsertionCase::N2, v});
    if (v == tree.root()) continue;
    out.push_back({InsertionCase::E1, v});
    out.push_back({InsertionCase::E2, v});
  }
  return out;
}

std::vector<InsertionStep> star_insertion_steps(const LabeledPlaneTree& tree) {
  std::vector<InsertionStep> out;
  for (const InsertionStep& step : insertion_steps(tree)) {
    const bool node_case = step.kind == InsertionCase::N1 || step.kind == InsertionCase::N2;
    if (node_case && step.target <= 2) continue;
    out.push_back(step);
  }
  return out;
}

LabeledPlaneTree star_seed() { return LabeledPlaneTree(2, {{}, {}, {1}}); }

std::vector<LabeledPlaneTree> all_trees(int n) {
  std::vector<LabeledPlaneTree> out;
  enumerate(n, [&](const LabeledPlaneTree& t) { out.push_back(t); });
  return out;
}

std::vector<LabeledPlaneTree> all_star_trees(int n) {
  std::vector<LabeledPlaneTree> out;
  enumerate_star(n, [&](const LabeledPlaneTree& t) { out.push_back(t); });
  return out;
}

namespace {

// beta[v] = smallest label in the subtree of v.
std::vector<Label> subtree_minima(const LabeledPlaneTree& tree) {
  const int n = tree.size();
  std::vector<Label> beta(static_cast<std::size_t>(n) + 1, 0);
  // Postorder via explicit stack.
  std::vector<std::pair<Label, bool>> stack{{tree.root(), false}};
  while (!stack.empty()) {
    auto [v, done] = stack.back();
    stack.pop_back();
    if (done) {
      Label b = v;
      for (Label c : tree.children(v)) b = std::min(b, beta[c]);
      beta[v] = b;
      continue;
    }
    stack.push_back({v, true});
    for (Label c : tree.children(v)) stack.push_back({c, false});
  }
  return beta;
}

}  // namespace

std::vector<EdgeClass> classify_edges(const LabeledPlaneTree& tree) {
  const int n = tree.size();
  const std::vector<Label> beta = subtree_minima(tree);
  std::vector<EdgeClass> out(static_cast<std::size_t>(n) + 1);
  for (Label v = 1; v <= n; ++v) {
    Label alpha = v;
    for (Label c : tree.children(v)) {
      out[c] = {c, alpha, beta[c], alpha < beta[c]};
      alpha = std::min(alpha, beta[c]);
    }
  }
  out.erase(out.begin() + tree.root());
  out.erase(out.begin());
  return out;
}

int improper_edge_count(const LabeledPlaneTree& tree) {
  int count = 0;
  for (const EdgeClass& e : classify_edges(tree)) count += !e.proper;
  return count;
}

bool is_increasing(const LabeledPlaneTree& tree) {
  for (Label v = 1; v <= tree.size(); ++v)
    if (tree.parent(v) != 0 && tree.parent(v) > v) return false;
  return true;
}

namespace {

Monomial edge_part(const std::vector<EdgeClass>& edges) {
  int proper = 0;
  for (const EdgeClass& e : edges) proper += e.proper;
  const int improper = static_cast<int>(edges.size()) - proper;
  return Monomial::from_factors({{var::s, proper}, {var::t, improper}});
}

Monomial basic(const LabeledPlaneTree& tree, Label skip_upto) {
  if (tree.size() == 1) return Monomial(var::y);
  int leaves = 0, interior = 0;
  for (Label v = skip_upto + 1; v <= tree.size(); ++v) (tree.is_leaf(v) ? leaves : interior)++;
  return edge_part(classify_edges(tree)) *
         Monomial::from_factors({{var::x, leaves}, {var::y, interior}});
}

Monomial refined(const LabeledPlaneTree& tree, Label skip_upto) {
  if (tree.size() == 1) return Monomial(var::yi(1));
  const std::vector<EdgeClass> edges = classify_edges(tree);
  const std::vector<Label> beta = subtree_minima(tree);
  std::vector<Label> alpha(static_cast<std::size_t>(tree.size()) + 1, 0);
  for (const EdgeClass& e : edges) alpha[e.child] = e.alpha;
  std::vector<Monomial::Factor> factors;
  for (Label v = skip_upto + 1; v <= tree.size(); ++v) {
    if (tree.is_leaf(v)) {
      factors.push_back({var::xi(static_cast<std::uint32_t>(std::max(v, alpha[v]))), 1});
    } else {
      const Label old_child = tree.children(v).front();
      factors.push_back({var::yi(static_cast<std::uint32_t>(std::max(v, beta[old_child]))), 1});
    }
  }
  return edge_part(edges) * Monomial::from_factors(std::move(factors));
}

}  // namespace

Monomial weight_basic(const LabeledPlaneTree& tree) { return basic(tree, 0); }
Monomial weight_basic_star(const LabeledPlaneTree& tree) { return basic(tree, 2); }
Monomial weight_refined(const LabeledPlaneTree& tree) { return refined(tree, 0); }
Monomial weight_refined_star(const LabeledPlaneTree& tree) { return refined(tree, 2); }

void enumerate_shapes(int n, const std::function<void(const PlaneShape&)>& visit) {
  if (n < 1) return;
  // Walk Dyck words of length 2(n-1): '(' descends into a new preorder child,
  // ')' climbs back to the parent.
  std::vector<bool> word;
  word.reserve(static_cast<std::size_t>(2 * (n - 1)));
  const int half = n - 1;
  std::function<void(int, int)> extend = [&](int open, int close) {
    if (open == half && close == half) {
      std::vector<std::vector<Label>> children(static_cast<std::size_t>(n) + 1);
      std::vector<Label> path{1};
      Label next = 2;
      for (bool up : word) {
        if (!up) {
          children[path.back()].push_back(next);
          path.push_back(next++);
        } else {
          path.pop_back();
        }
      }
      LabeledPlaneTree tree(1, std::move(children));
      PlaneShape shape{tree, tree.leaf_count(), tree.old_leaf_count()};
      visit(shape);
      return;
    }
    if (open < half) {
      word.push_back(false);
      extend(open + 1, close);
      word.pop_back();
    }
    if (close < open) {
      word.push_back(true);
      extend(open, close + 1);
      word.pop_back();
    }
  };
  extend(0, 0);
}

}  // namespace narayana
