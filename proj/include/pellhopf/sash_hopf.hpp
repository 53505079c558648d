#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pellhopf/formal_sum.hpp"
#include "pellhopf/sash.hpp"
#include "pellhopf/word.hpp"

namespace pellhopf {

/// A sash with a subset of its cells dotted (1-based cell positions).
struct Dotting {
  Sash sash;
  IndexSet dots;

  Dotting(Sash s, IndexSet d);

  friend bool operator==(const Dotting& a, const Dotting& b) {
    return a.sash == b.sash && a.dots == b.dots;
  }
  friend bool operator<(const Dotting& a, const Dotting& b) {
    if (a.sash != b.sash) return a.sash < b.sash;
    return a.dots < b.dots;
  }
};

std::string to_text(const Dotting& d);

/// "<sash>@<comma separated cells>", e.g. "brwwbw@1,3,6,7".
Dotting parse_dotting(const std::string& s);

/// At least one dot; dotted cells alternate between black-type (black square
/// or left half of a rectangle) and white-type (white square or right half);
/// no rectangle with only its left half dotted; no undotted black square
/// immediately followed by a dotted white square.
bool is_allowable(const Dotting& d);

/// All allowable dottings, ordered by (number of dots, dot set). Rejects the
/// unit; the empty tiling has none.
std::vector<Dotting> enumerate_allowable_dottings(const Sash& c);

/// Numbers 1..n sit in the gaps around the n-1 cells; a gap joins the set
/// when the nearest dotted cell to its right is black-type or the nearest
/// dotted cell to its left is white-type. Requires an allowable dotting.
IndexSet dotting_to_allowable_set(const Dotting& d);

/// Inverse of dotting_to_allowable_set: cell i is dotted when exactly one of
/// the gaps i, i+1 lies in t. Rejects t whose round trip fails.
Dotting allowable_set_to_dotting(const Sash& c, const IndexSet& t);

/// Images of the allowable dottings, in the same order.
std::vector<IndexSet> allowable_sets(const Sash& c);

enum class ExtCell : std::uint8_t {
  black,
  white,
  rect_left,
  rect_right,
  black_plus,
  white_plus,
  mystery
};

/// A sash pattern: cells plus placeholder squares that stand for families of
/// substitutions (see matches_form).
class ExtendedSash {
 public:
  ExtendedSash() = default;
  explicit ExtendedSash(std::vector<ExtCell> cells);

  const std::vector<ExtCell>& cells() const { return cells_; }

  friend bool operator==(const ExtendedSash& a, const ExtendedSash& b) {
    return a.cells_ == b.cells_;
  }
  friend bool operator!=(const ExtendedSash& a, const ExtendedSash& b) { return !(a == b); }

 private:
  std::vector<ExtCell> cells_;
};

/// "e" when empty, otherwise b, w, r plus "B" (black-plus), "W" (white-plus)
/// and "?" (mystery).
std::string to_text(const ExtendedSash& h);
ExtendedSash parse_extended_sash(const std::string& s);

/// The undotted stretches of an allowable dotting and the classification of
/// its dots. A left half whose right half carries the next dot is demoted to
/// a black square inside its segment.
struct DottingDecomposition {
  std::vector<Sash> segments;                   // one more than the dot count
  std::vector<bool> dot_black_type;             // per dot
  std::vector<bool> pair_same_rectangle;        // per consecutive dot pair
  std::vector<bool> pair_adjacent_black_white;  // per consecutive dot pair
};

DottingDecomposition decompose_dotting(const Dotting& d);

/// The two substitution patterns of a dotting: alternating segments joined by
/// placeholder squares. The left pattern upgrades a junction to black-plus
/// when its dot pair sits on an adjacent black-white pair and to white-plus
/// when it sits on a doubly dotted rectangle; the right pattern keeps plain
/// mysteries.
struct CoproductForms {
  ExtendedSash left;
  ExtendedSash right;
};

CoproductForms coproduct_forms(const Dotting& d);

/// One coproduct summand: the dotting together with the extreme resolutions
/// of its two patterns. The block contributes interval(left) (x)
/// interval(right).
struct CoproductBlock {
  Dotting dotting;
  Sash left_min;
  Sash left_max;
  Sash right_min;
  Sash right_max;
};

CoproductBlock coproduct_block(const Dotting& d);

/// Does x arise from the pattern h? Placeholders resolve as: black-plus to
/// black, white-plus to white, mystery to black or white; a rectangle may
/// cover positions i, i+1 when h has one there, or when position i is
/// black-plus or mystery with a white, white-plus or mystery after it, or
/// when position i+1 is white-plus or mystery with a black, black-plus or
/// mystery before it. Everything else must match exactly.
bool matches_form(const Sash& x, const ExtendedSash& h);

/// Join with a black square and with a white square; a trailing black on the
/// left operand also fuses into a rectangle, as does a leading white on the
/// right operand. The unit is the identity.
SashElement sash_product(const Sash& a, const Sash& b);
SashElement sash_product(const SashElement& a, const SashElement& b);

/// unit (x) c + c (x) unit plus, per allowable dotting, the full block
/// interval(left) (x) interval(right); multiplicities across dottings add.
SashTensor sash_coproduct(const Sash& c);
SashTensor sash_coproduct(const SashElement& e);

/// One dual product term: label the gaps of x with t and of y with the
/// complement, then walk the arrows h -> h+1 emitting a copied cell inside a
/// block, black for left-to-right crossings, white for right-to-left ones,
/// with the rectangle fusions of the crossing rules. |t| must equal grade(x).
Sash dual_product_term(const Sash& x, const Sash& y, const IndexSet& t);

/// Sum of dual_product_term over all t of size grade(x); multiplicities add.
SashElement sash_dual_product(const Sash& x, const Sash& y);

/// Cut before and after each cell: left part keeps the first i cells with a
/// trailing left half demoted to black, right part keeps the last n-i-1 cells
/// with a leading right half demoted to white.
SashTensor sash_dual_coproduct(const Sash& c);

/// The permutation whose prefix values are exactly t and whose descent walk
/// returns c; requires t allowable for c.
Permutation tau(const Sash& c, const IndexSet& t);

}  // namespace pellhopf
