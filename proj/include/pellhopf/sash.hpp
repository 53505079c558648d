#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pellhopf/formal_sum.hpp"
#include "pellhopf/word.hpp"

namespace pellhopf {

enum class Tile : std::uint8_t { black, white, rect };

/// Cell-level view: a rectangle spans two cells.
enum class Cell : std::uint8_t { black, white, rect_left, rect_right };

/// Tiling of a 1 x m strip by black squares, white squares and white 1 x 2
/// rectangles, plus a distinguished unit of grade 0. The empty tiling ("e")
/// has grade 1; otherwise grade = m + 1.
class Sash {
 public:
  /// The grade-0 unit.
  Sash() : unit_(true) {}

  static Sash unit() { return Sash(); }
  static Sash length_zero() { return Sash(std::vector<Tile>{}); }

  explicit Sash(std::vector<Tile> tiles) : unit_(false), tiles_(std::move(tiles)) {}
  static Sash from_cells(const std::vector<Cell>& cells);

  bool is_unit() const { return unit_; }
  const std::vector<Tile>& tiles() const;
  std::vector<Cell> cells() const;

  /// Number of cells; -1 for the unit.
  int cell_length() const;
  int grade() const { return cell_length() + 1; }

  friend bool operator==(const Sash& a, const Sash& b) {
    return a.unit_ == b.unit_ && a.tiles_ == b.tiles_;
  }
  friend bool operator!=(const Sash& a, const Sash& b) { return !(a == b); }
  friend bool operator<(const Sash& a, const Sash& b);

 private:
  bool unit_ = false;
  std::vector<Tile> tiles_;
};

inline int grade(const Sash& a) { return a.grade(); }

char tile_letter(Tile t);
std::string to_text(const Sash& a);

/// "u" for the unit, "e" for the empty tiling, otherwise letters b, w, r.
Sash parse_sash(const std::string& s);

/// All tilings of a strip of the given length (length -1 gives none,
/// length 0 gives the empty tiling), sorted canonically.
std::vector<Sash> enumerate_sashes(int length);

/// Basis of one graded component: the unit at grade 0, tilings of length
/// g - 1 otherwise.
std::vector<Sash> sashes_of_grade(int g);

/// Descent-walk image of a word: standardizes first; a value with its
/// successor to the right gives a black square, to the left a white square,
/// except that successor-right plus successor-of-successor-left lays a
/// rectangle and consumes two steps.
Sash sigma(const Word& w);

/// Insertion inverse of sigma on its canonical fiber representatives.
Permutation eta(const Sash& a);

/// Descents have size at most 2, and below every size-2 descent the middle
/// value sits further right.
bool is_pell(const Permutation& x);

/// Covers: recolor a black square white when the suffix does not start with a
/// white square; fuse an adjacent black-white pair into a rectangle; split a
/// rectangle into two white squares.
std::vector<Sash> sash_covers_up(const Sash& a);

/// Order transported through eta from the weak order. Grades must agree.
bool sash_leq(const Sash& a, const Sash& b);

/// Everything between lo and hi, via upward closure by covers. Requires
/// lo <= hi.
std::vector<Sash> sash_interval(const Sash& lo, const Sash& hi);

using SashElement = FormalSum<Sash>;
using SashTensor = TensorSum<Sash>;

}  // namespace pellhopf
