#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "narayana/multipoly.hpp"
#include "narayana/report.hpp"
#include "narayana/tree.hpp"

namespace narayana {

// A word on {1,1,2,2,...,n,n} in which every letter strictly between the two
// copies of a value is larger than that value.
class StirlingPermutation {
 public:
  // Throws std::invalid_argument unless `word` is a Stirling permutation.
  explicit StirlingPermutation(std::vector<int> word);

  int n() const { return static_cast<int>(word_.size()) / 2; }
  const std::vector<int>& word() const { return word_; }
  // 1-based access with the sentinels at(0) = at(2n+1) = 0.
  int at(int i) const { return i >= 1 && i <= 2 * n() ? word_[i - 1] : 0; }

  friend bool operator==(const StirlingPermutation&, const StirlingPermutation&) = default;

  // Digits when n <= 9, comma-separated otherwise.
  std::string to_string() const;
  // Accepts either printed form. Throws ParseError or std::invalid_argument.
  static StirlingPermutation parse(std::string_view text);

 private:
  std::vector<int> word_;
};

bool is_stirling(const std::vector<int>& word);

struct StirlingStats {
  std::vector<int> plateaux;  // positions i with pi_i = pi_(i+1)
  std::vector<int> fa;        // first-appearance ascents, position 0 included
  int ascents = 0;            // positions 0..2n, sentinels included
  int descents = 0;
  int plateau_count() const { return static_cast<int>(plateaux.size()); }
};

// Plateaux, ascents and descents use the sentinels pi_0 = pi_(2n+1) = 0.
// FA follows the displayed definition: an ascent at i whose letter pi_i
// does not occur at any position 1 <= j < i.
StirlingStats stats(const StirlingPermutation& p);
// FA read from the prose: ascent bottoms that are the first copy of their
// letter, located through a first-occurrence table.
std::vector<int> fa_positions_prose(const StirlingPermutation& p);

// Every element of Q_n exactly once, built by inserting "n n" into each gap
// of each element of Q_(n-1).
void enumerate_stirling(int n, const std::function<void(const StirlingPermutation&)>& visit);
std::vector<StirlingPermutation> all_stirling(int n);

// Sum over Q_n of prod_(i in P) x_(pi_i) prod_(j in FA) y_(pi_(j+1)).
MultiPoly q_poly(int n);
// Sum over Q_n of x^(plateau count).
MultiPoly plateau_poly(int n);
// Sum_k C(n,k) x^(k+1) from C(n,k) = (k+1) C(n-1,k) + (2n-1-k) C(n-1,k-1).
MultiPoly second_order_eulerian(int n);

// Contour word of an increasing plane tree on [n], n >= 2: each child label
// written on the way down and again on the way up, root omitted, every
// letter then decreased by one. Throws NotIncreasing.
StirlingPermutation glove(const LabeledPlaneTree& tree);
// Inverse of glove: an increasing plane tree on [n+1].
LabeledPlaneTree unglove(const StirlingPermutation& p);

// F(n-1) at t = 0 against s^(n-1) times q_poly(n-1) with indices shifted up
// by one, for 2 <= n <= n_max.
CheckResult verify_second_order_link(int n_max);

CheckResult check_stirling_count(int n);
CheckResult check_second_order_eulerian(int n);
CheckResult check_triple_equidistribution(int n);
CheckResult check_glove_roundtrip(int n);
CheckResult check_glove_plateau_leaf(int n);
CheckResult check_glove_first_appearance(int n);
CheckResult check_fa_display_vs_prose(int n);
CheckResult check_increasing_iff_proper(int n);

}  // namespace narayana
