#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellhopf/mr_hopf.hpp"
#include "pellhopf/word.hpp"

namespace pellhopf {

/// Dashed pattern of length k whose two middle letters (the maximum followed
/// by the minimum) must sit in adjacent positions. v lists the ranks required
/// to appear before the adjacent pair; the remaining middle ranks appear
/// after it. v is a subset of {2, ..., k-1}.
struct PatternClass {
  int k = 0;
  IndexSet v;

  PatternClass(int k_, IndexSet v_);

  friend bool operator==(const PatternClass& a, const PatternClass& b) {
    return a.k == b.k && a.v == b.v;
  }
  friend bool operator<(const PatternClass& a, const PatternClass& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.v < b.v;
  }
};

std::string to_text(const PatternClass& p);

/// Accepts e.g. "2(31)" and "(41)23"; single-digit ranks only.
PatternClass parse_pattern(const std::string& s);

/// Nonempty family of patterns, kept sorted by (k, v).
class CongruenceSystem {
 public:
  explicit CongruenceSystem(std::vector<PatternClass> patterns);

  /// { 2(31), (41)23 }: avoiders are counted by the Pell numbers.
  static const CongruenceSystem& pell();

  const std::vector<PatternClass>& patterns() const { return patterns_; }

  friend bool operator==(const CongruenceSystem& a, const CongruenceSystem& b) {
    return a.patterns_ == b.patterns_;
  }

 private:
  std::vector<PatternClass> patterns_;
};

std::string to_text(const CongruenceSystem& u);

/// "pell" or a comma-separated pattern list.
CongruenceSystem parse_congruence_system(const std::string& s);

/// Positions (d, d+1) of the adjacent max-min pair of some instance, scanning
/// descents left to right and patterns smallest first; empty when x avoids u.
std::optional<std::pair<int, int>> find_pattern_instance(const Permutation& x,
                                                         const CongruenceSystem& u);

/// Every descent position carrying an instance, left to right.
std::vector<int> instance_descents(const Permutation& x, const CongruenceSystem& u);

bool avoids(const Permutation& x, const CongruenceSystem& u);

/// Repeatedly swaps the adjacent max-min pair of an instance until the word
/// avoids u. Every permutation in a class projects to the same avoider.
Permutation pi_down(const Permutation& x, const CongruenceSystem& u);

/// Reverse rewriting: turns ascents back into instance pairs until no move
/// applies; the class maximum.
Permutation pi_up(const Permutation& x, const CongruenceSystem& u);

/// The congruence class of x: the weak interval from pi_down(x) to pi_up(x).
std::vector<Permutation> congruence_class(const Permutation& x, const CongruenceSystem& u);

/// Avoiders in S_n, lexicographic.
std::vector<Permutation> enumerate_avoiders(int n, const CongruenceSystem& u);

/// Projection killing every non-avoider basis term.
PermElement r_map(const PermElement& e, const CongruenceSystem& u);

/// Section sending an avoider to the sum of its class; every basis term of e
/// must avoid u.
PermElement c_map(const PermElement& e, const CongruenceSystem& u);

/// Avoiders in the weak interval [lo, hi]; the interval of the induced
/// lattice on avoiders.
std::vector<Permutation> av_interval(const Permutation& lo, const Permutation& hi,
                                     const CongruenceSystem& u);

/// Product on avoiders: project the shuffle product. Computed both as
/// r(x * y) and as the induced-lattice interval sum and checked equal.
PermElement av_product(const Permutation& x, const Permutation& y, const CongruenceSystem& u);

/// Coproduct on avoiders: (r (x) r) applied to the coproduct of the class sum.
PermTensor av_coproduct(const Permutation& z, const CongruenceSystem& u);

/// Dual product on avoiders: project each dual-product term.
PermElement av_dual_product(const Permutation& x, const Permutation& y,
                            const CongruenceSystem& u);

/// Dual coproduct on avoiders: restriction splitting, unchanged.
PermTensor av_dual_coproduct(const Permutation& z, const CongruenceSystem& u);

/// Value sets of prefixes of class members of the avoider z, sorted by size
/// then lexicographically. Always contains the empty set and [n].
std::vector<IndexSet> good_sets(const Permutation& z, const CongruenceSystem& u);

/// Minimum and maximum class members whose prefix value set is t; their
/// existence characterizes good sets.
std::pair<Permutation, Permutation> zmin_zmax(const Permutation& z, const IndexSet& t,
                                              const CongruenceSystem& u);

/// Coproduct assembled as a sum over good sets of products of induced-lattice
/// intervals; must agree with av_coproduct.
PermTensor coproduct_via_intervals(const Permutation& z, const CongruenceSystem& u);

}  // namespace pellhopf
