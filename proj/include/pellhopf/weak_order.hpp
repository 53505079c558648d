#pragma once

#include <optional>
#include <vector>

#include "pellhopf/word.hpp"

namespace pellhopf {

/// Right weak order: containment of inversion sets. Sizes must agree.
bool weak_leq(const Permutation& x, const Permutation& y);

/// Swaps of adjacent ascents (resp. descents), in position order.
std::vector<Permutation> weak_covers_up(const Permutation& x);
std::vector<Permutation> weak_covers_down(const Permutation& x);

Permutation weak_join(const Permutation& x, const Permutation& y);
Permutation weak_meet(const Permutation& x, const Permutation& y);

/// Every z with lo <= z <= hi, sorted canonically. Requires lo <= hi.
std::vector<Permutation> weak_interval(const Permutation& lo, const Permutation& hi);

/// One-line word read backwards; complements the inversion set.
Permutation reversed(const Permutation& x);

/// Rebuilds the permutation realizing a transitively closed inversion set on
/// [n]; empty when no permutation realizes it.
std::optional<Permutation> permutation_from_inversions(const InversionSet& inv, int n);

/// S_n in lexicographic order. Intended for exhaustive checks at small n.
std::vector<Permutation> all_permutations(int n);

}  // namespace pellhopf
