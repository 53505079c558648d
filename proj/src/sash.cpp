#include "pellhopf/sash.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "pellhopf/weak_order.hpp"

namespace pellhopf {

Sash Sash::from_cells(const std::vector<Cell>& cells) {
  std::vector<Tile> tiles;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    switch (cells[i]) {
      case Cell::black:
        tiles.push_back(Tile::black);
        break;
      case Cell::white:
        tiles.push_back(Tile::white);
        break;
      case Cell::rect_left:
        if (i + 1 >= cells.size() || cells[i + 1] != Cell::rect_right) {
          throw std::invalid_argument("Sash::from_cells: unpaired rectangle half");
        }
        tiles.push_back(Tile::rect);
        ++i;
        break;
      case Cell::rect_right:
        throw std::invalid_argument("Sash::from_cells: unpaired rectangle half");
    }
  }
  return Sash(std::move(tiles));
}

const std::vector<Tile>& Sash::tiles() const {
  if (unit_) throw std::logic_error("Sash::tiles: the unit has no tiles");
  return tiles_;
}

std::vector<Cell> Sash::cells() const {
  if (unit_) throw std::logic_error("Sash::cells: the unit has no cells");
  std::vector<Cell> out;
  for (Tile t : tiles_) {
    switch (t) {
      case Tile::black:
        out.push_back(Cell::black);
        break;
      case Tile::white:
        out.push_back(Cell::white);
        break;
      case Tile::rect:
        out.push_back(Cell::rect_left);
        out.push_back(Cell::rect_right);
        break;
    }
  }
  return out;
}

int Sash::cell_length() const {
  if (unit_) return -1;
  int n = 0;
  for (Tile t : tiles_) n += (t == Tile::rect) ? 2 : 1;
  return n;
}

char tile_letter(Tile t) {
  switch (t) {
    case Tile::black:
      return 'b';
    case Tile::white:
      return 'w';
    case Tile::rect:
      return 'r';
  }
  return '?';
}

bool operator<(const Sash& a, const Sash& b) {
  const int ga = a.grade();
  const int gb = b.grade();
  if (ga != gb) return ga < gb;
  if (a.unit_ || b.unit_) return false;  // equal grade 0
  const std::size_t m = std::min(a.tiles_.size(), b.tiles_.size());
  for (std::size_t i = 0; i < m; ++i) {
    const char ca = tile_letter(a.tiles_[i]);
    const char cb = tile_letter(b.tiles_[i]);
    if (ca != cb) return ca < cb;
  }
  return a.tiles_.size() < b.tiles_.size();
}

std::string to_text(const Sash& a) {
  if (a.is_unit()) return "u";
  if (a.tiles().empty()) return "e";
  std::string s;
  for (Tile t : a.tiles()) s += tile_letter(t);
  return s;
}

Sash parse_sash(const std::string& s) {
  if (s == "u") return Sash::unit();
  if (s == "e") return Sash::length_zero();
  if (s.empty()) throw std::invalid_argument("parse_sash: empty input");
  std::vector<Tile> tiles;
  for (char c : s) {
    switch (c) {
      case 'b':
        tiles.push_back(Tile::black);
        break;
      case 'w':
        tiles.push_back(Tile::white);
        break;
      case 'r':
        tiles.push_back(Tile::rect);
        break;
      default:
        throw std::invalid_argument(std::string("parse_sash: bad letter '") + c + "'");
    }
  }
  return Sash(std::move(tiles));
}

namespace {

void generate_tilings(int remaining, std::vector<Tile>& cur, std::vector<Sash>& out) {
  if (remaining == 0) {
    out.push_back(Sash(cur));
    return;
  }
  cur.push_back(Tile::black);
  generate_tilings(remaining - 1, cur, out);
  cur.back() = Tile::white;
  generate_tilings(remaining - 1, cur, out);
  cur.pop_back();
  if (remaining >= 2) {
    cur.push_back(Tile::rect);
    generate_tilings(remaining - 2, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Sash> enumerate_sashes(int length) {
  if (length < -1) throw std::invalid_argument("enumerate_sashes: length below -1");
  std::vector<Sash> out;
  if (length == -1) return out;
  std::vector<Tile> cur;
  generate_tilings(length, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Sash> sashes_of_grade(int g) {
  if (g < 0) throw std::invalid_argument("sashes_of_grade: negative grade");
  if (g == 0) return {Sash::unit()};
  return enumerate_sashes(g - 1);
}

Sash sigma(const Word& w) {
  if (w.empty()) return Sash::unit();
  const Permutation x = standardize(w);
  const int n = x.size();
  std::vector<int> pos(static_cast<std::size_t>(n + 1), 0);
  for (int p = 1; p <= n; ++p) pos[static_cast<std::size_t>(x.entry(p))] = p;
  std::vector<Tile> tiles;
  int i = 1;
  while (i <= n - 1) {
    if (pos[static_cast<std::size_t>(i + 1)] > pos[static_cast<std::size_t>(i)]) {
      if (i + 2 <= n &&
          pos[static_cast<std::size_t>(i + 2)] < pos[static_cast<std::size_t>(i)]) {
        tiles.push_back(Tile::rect);
        i += 2;
      } else {
        tiles.push_back(Tile::black);
        i += 1;
      }
    } else {
      tiles.push_back(Tile::white);
      i += 1;
    }
  }
  return Sash(std::move(tiles));
}

Permutation eta(const Sash& a) {
  if (a.is_unit()) return Permutation();
  std::vector<int> out{1};
  auto insert_before = [&out](int v, int anchor) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] == anchor) {
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), v);
        return;
      }
    }
    throw std::logic_error("eta: missing anchor value");
  };
  const std::vector<Cell> cells = a.cells();
  for (int i = 1; i <= a.cell_length(); ++i) {
    const int v = i + 1;
    switch (cells[static_cast<std::size_t>(i - 1)]) {
      case Cell::black:
      case Cell::rect_left:
        out.push_back(v);
        break;
      case Cell::white:
        insert_before(v, i);
        break;
      case Cell::rect_right:
        insert_before(v, i - 1);
        break;
    }
  }
  return Permutation(std::move(out));
}

bool is_pell(const Permutation& x) {
  const int n = x.size();
  for (int p = 1; p + 1 <= n; ++p) {
    const int a = x.entry(p);
    const int b = x.entry(p + 1);
    if (a <= b) continue;
    if (a - b > 2) return false;
    if (a - b == 2 && x.position_of(b + 1) < p + 1) return false;
  }
  return true;
}

std::vector<Sash> sash_covers_up(const Sash& a) {
  if (a.is_unit()) throw std::invalid_argument("sash_covers_up: the unit has no covers");
  const std::vector<Tile>& tiles = a.tiles();
  std::vector<Sash> out;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    if (tiles[i] == Tile::black) {
      const bool next_is_white = i + 1 < tiles.size() && tiles[i + 1] == Tile::white;
      if (!next_is_white) {
        std::vector<Tile> t = tiles;
        t[i] = Tile::white;
        out.push_back(Sash(std::move(t)));
      } else {
        std::vector<Tile> t = tiles;
        t[i] = Tile::rect;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(i + 1));
        out.push_back(Sash(std::move(t)));
      }
    } else if (tiles[i] == Tile::rect) {
      std::vector<Tile> t = tiles;
      t[i] = Tile::white;
      t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), Tile::white);
      out.push_back(Sash(std::move(t)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool sash_leq(const Sash& a, const Sash& b) {
  if (a.grade() != b.grade()) throw std::invalid_argument("sash_leq: grade mismatch");
  if (a.is_unit()) return true;
  return weak_leq(eta(a), eta(b));
}

std::vector<Sash> sash_interval(const Sash& lo, const Sash& hi) {
  if (!sash_leq(lo, hi)) throw std::invalid_argument("sash_interval: lo is not below hi");
  if (lo.is_unit()) return {lo};
  const InversionSet top = inversion_set(eta(hi).word());
  std::set<Sash> seen{lo};
  std::deque<Sash> queue{lo};
  while (!queue.empty()) {
    const Sash z = queue.front();
    queue.pop_front();
    for (const Sash& c : sash_covers_up(z)) {
      if (seen.count(c) > 0) continue;
      const InversionSet ic = inversion_set(eta(c).word());
      if (!std::includes(top.begin(), top.end(), ic.begin(), ic.end())) continue;
      seen.insert(c);
      queue.push_back(c);
    }
  }
  return std::vector<Sash>(seen.begin(), seen.end());
}

}  // namespace pellhopf
