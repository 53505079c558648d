#include "pellhopf/sash_hopf.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "pellhopf/combinatorics.hpp"

namespace pellhopf {

namespace {

bool black_type(Cell c) { return c == Cell::black || c == Cell::rect_left; }

}  // namespace

Dotting::Dotting(Sash s, IndexSet d) : sash(std::move(s)), dots(std::move(d)) {
  const int m = sash.cell_length();
  for (int p : dots) {
    if (p < 1 || p > m) throw std::invalid_argument("Dotting: dot outside the strip");
  }
}

std::string to_text(const Dotting& d) {
  std::string s = to_text(d.sash);
  s += '@';
  bool first = true;
  for (int p : d.dots) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(p);
  }
  return s;
}

Dotting parse_dotting(const std::string& s) {
  const std::size_t at = s.find('@');
  if (at == std::string::npos) throw std::invalid_argument("parse_dotting: missing '@'");
  Sash sash = parse_sash(s.substr(0, at));
  IndexSet dots;
  const std::string rest = s.substr(at + 1);
  std::size_t start = 0;
  while (start < rest.size()) {
    std::size_t comma = rest.find(',', start);
    if (comma == std::string::npos) comma = rest.size();
    const std::string tok = rest.substr(start, comma - start);
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("parse_dotting: bad cell number");
    if (!dots.insert(v).second) throw std::invalid_argument("parse_dotting: repeated cell");
    start = comma + 1;
  }
  return Dotting(std::move(sash), std::move(dots));
}

bool is_allowable(const Dotting& d) {
  if (d.dots.empty()) return false;
  const std::vector<Cell> cells = d.sash.cells();
  auto dotted = [&](int p) { return d.dots.count(p) > 0; };
  bool expect_black = black_type(cells[static_cast<std::size_t>(*d.dots.begin() - 1)]);
  for (int p : d.dots) {
    const Cell c = cells[static_cast<std::size_t>(p - 1)];
    if (black_type(c) != expect_black) return false;
    expect_black = !expect_black;
    if (c == Cell::rect_left && !dotted(p + 1)) return false;
  }
  for (int p = 1; p + 1 <= static_cast<int>(cells.size()); ++p) {
    if (cells[static_cast<std::size_t>(p - 1)] == Cell::black && !dotted(p) &&
        cells[static_cast<std::size_t>(p)] == Cell::white && dotted(p + 1)) {
      return false;
    }
  }
  return true;
}

std::vector<Dotting> enumerate_allowable_dottings(const Sash& c) {
  if (c.is_unit()) {
    throw std::invalid_argument("enumerate_allowable_dottings: the unit has no cells");
  }
  const int m = c.cell_length();
  std::vector<Dotting> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    IndexSet dots;
    for (int p = 1; p <= m; ++p) {
      if (mask & (1u << (p - 1))) dots.insert(p);
    }
    Dotting d(c, std::move(dots));
    if (is_allowable(d)) out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const Dotting& a, const Dotting& b) {
    if (a.dots.size() != b.dots.size()) return a.dots.size() < b.dots.size();
    return a.dots < b.dots;
  });
  return out;
}

IndexSet dotting_to_allowable_set(const Dotting& d) {
  if (!is_allowable(d)) {
    throw std::invalid_argument("dotting_to_allowable_set: dotting is not allowable");
  }
  const std::vector<Cell> cells = d.sash.cells();
  const int n = static_cast<int>(cells.size()) + 1;
  IndexSet t;
  for (int h = 1; h <= n; ++h) {
    const auto right = d.dots.lower_bound(h);
    if (right != d.dots.end() && black_type(cells[static_cast<std::size_t>(*right - 1)])) {
      t.insert(h);
      continue;
    }
    auto left = d.dots.lower_bound(h);
    if (left != d.dots.begin()) {
      --left;
      if (!black_type(cells[static_cast<std::size_t>(*left - 1)])) t.insert(h);
    }
  }
  return t;
}

Dotting allowable_set_to_dotting(const Sash& c, const IndexSet& t) {
  if (c.is_unit()) {
    throw std::invalid_argument("allowable_set_to_dotting: the unit has no cells");
  }
  const int n = c.cell_length() + 1;
  for (int h : t) {
    if (h < 1 || h > n) throw std::invalid_argument("allowable_set_to_dotting: gap out of range");
  }
  IndexSet dots;
  for (int p = 1; p <= n - 1; ++p) {
    if ((t.count(p) > 0) != (t.count(p + 1) > 0)) dots.insert(p);
  }
  Dotting d(c, std::move(dots));
  if (!is_allowable(d) || dotting_to_allowable_set(d) != t) {
    throw std::invalid_argument("allowable_set_to_dotting: set is not allowable for this sash");
  }
  return d;
}

std::vector<IndexSet> allowable_sets(const Sash& c) {
  std::vector<IndexSet> out;
  if (c.is_unit()) return out;
  for (const Dotting& d : enumerate_allowable_dottings(c)) {
    out.push_back(dotting_to_allowable_set(d));
  }
  return out;
}

ExtendedSash::ExtendedSash(std::vector<ExtCell> cells) : cells_(std::move(cells)) {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] == ExtCell::rect_left &&
        (i + 1 >= cells_.size() || cells_[i + 1] != ExtCell::rect_right)) {
      throw std::invalid_argument("ExtendedSash: unpaired rectangle half");
    }
    if (cells_[i] == ExtCell::rect_right && (i == 0 || cells_[i - 1] != ExtCell::rect_left)) {
      throw std::invalid_argument("ExtendedSash: unpaired rectangle half");
    }
  }
}

std::string to_text(const ExtendedSash& h) {
  if (h.cells().empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < h.cells().size(); ++i) {
    switch (h.cells()[i]) {
      case ExtCell::black:
        s += 'b';
        break;
      case ExtCell::white:
        s += 'w';
        break;
      case ExtCell::rect_left:
        s += 'r';
        break;
      case ExtCell::rect_right:
        break;
      case ExtCell::black_plus:
        s += 'B';
        break;
      case ExtCell::white_plus:
        s += 'W';
        break;
      case ExtCell::mystery:
        s += '?';
        break;
    }
  }
  return s;
}

ExtendedSash parse_extended_sash(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_extended_sash: empty text");
  if (s == "e") return ExtendedSash();
  std::vector<ExtCell> cells;
  for (char ch : s) {
    switch (ch) {
      case 'b':
        cells.push_back(ExtCell::black);
        break;
      case 'w':
        cells.push_back(ExtCell::white);
        break;
      case 'r':
        cells.push_back(ExtCell::rect_left);
        cells.push_back(ExtCell::rect_right);
        break;
      case 'B':
        cells.push_back(ExtCell::black_plus);
        break;
      case 'W':
        cells.push_back(ExtCell::white_plus);
        break;
      case '?':
        cells.push_back(ExtCell::mystery);
        break;
      default:
        throw std::invalid_argument("parse_extended_sash: bad character");
    }
  }
  return ExtendedSash(std::move(cells));
}

DottingDecomposition decompose_dotting(const Dotting& d) {
  if (!is_allowable(d)) throw std::invalid_argument("decompose_dotting: dotting is not allowable");
  const std::vector<Cell> cells = d.sash.cells();
  DottingDecomposition out;
  std::vector<Cell> current;
  for (int p = 1; p <= static_cast<int>(cells.size()); ++p) {
    const Cell c = cells[static_cast<std::size_t>(p - 1)];
    if (d.dots.count(p) > 0) {
      if (c == Cell::rect_right && d.dots.count(p - 1) == 0) current.back() = Cell::black;
      out.dot_black_type.push_back(black_type(c));
      out.segments.push_back(Sash::from_cells(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.segments.push_back(Sash::from_cells(current));
  const std::vector<int> dots(d.dots.begin(), d.dots.end());
  for (std::size_t i = 0; i + 1 < dots.size(); ++i) {
    const int p = dots[i];
    const int q = dots[i + 1];
    const Cell cp = cells[static_cast<std::size_t>(p - 1)];
    const Cell cq = cells[static_cast<std::size_t>(q - 1)];
    out.pair_same_rectangle.push_back(q == p + 1 && cp == Cell::rect_left);
    out.pair_adjacent_black_white.push_back(q == p + 1 && cp == Cell::black &&
                                            cq == Cell::white);
  }
  return out;
}

namespace {

std::vector<int> side_indices(const DottingDecomposition& dec, bool left_side) {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(dec.segments.size()); ++i) {
    const bool on_left = ((i % 2) == 1) == dec.dot_black_type.front();
    if (on_left == left_side) out.push_back(i);
  }
  return out;
}

std::vector<ExtCell> widen(const Sash& seg) {
  std::vector<ExtCell> out;
  for (Cell c : seg.cells()) {
    switch (c) {
      case Cell::black:
        out.push_back(ExtCell::black);
        break;
      case Cell::white:
        out.push_back(ExtCell::white);
        break;
      case Cell::rect_left:
        out.push_back(ExtCell::rect_left);
        break;
      case Cell::rect_right:
        out.push_back(ExtCell::rect_right);
        break;
    }
  }
  return out;
}

}  // namespace

CoproductForms coproduct_forms(const Dotting& d) {
  const DottingDecomposition dec = decompose_dotting(d);
  auto build = [&](bool left_side) {
    std::vector<ExtCell> cells;
    bool first = true;
    for (int i : side_indices(dec, left_side)) {
      if (!first) {
        // junction standing for the dot pair (i-2, i-1)
        ExtCell j = ExtCell::mystery;
        if (left_side) {
          if (dec.pair_adjacent_black_white[static_cast<std::size_t>(i - 3)]) {
            j = ExtCell::black_plus;
          } else if (dec.pair_same_rectangle[static_cast<std::size_t>(i - 3)]) {
            j = ExtCell::white_plus;
          }
        }
        cells.push_back(j);
      }
      first = false;
      const std::vector<ExtCell> seg = widen(dec.segments[static_cast<std::size_t>(i - 1)]);
      cells.insert(cells.end(), seg.begin(), seg.end());
    }
    return ExtendedSash(std::move(cells));
  };
  return CoproductForms{build(true), build(false)};
}

CoproductBlock coproduct_block(const Dotting& d) {
  const DottingDecomposition dec = decompose_dotting(d);
  const std::vector<int> left_idx = side_indices(dec, true);
  const std::vector<int> right_idx = side_indices(dec, false);
  auto seg_cells = [&](int i) { return dec.segments[static_cast<std::size_t>(i - 1)].cells(); };
  auto fuse_tail = [](std::vector<Cell>& cells) {
    if (!cells.empty() && cells.back() == Cell::black) {
      cells.back() = Cell::rect_left;
      cells.push_back(Cell::rect_right);
    } else {
      cells.push_back(Cell::white);
    }
  };

  std::vector<Cell> lmin;
  std::vector<Cell> lmax;
  for (std::size_t k = 0; k < left_idx.size(); ++k) {
    bool consumed_leading_white = false;
    if (k > 0) {
      const std::size_t pair = static_cast<std::size_t>(left_idx[k - 1] - 1);
      lmin.push_back(dec.pair_same_rectangle[pair] ? Cell::white : Cell::black);
      if (dec.pair_adjacent_black_white[pair]) {
        const std::vector<Cell> next = seg_cells(left_idx[k]);
        if (!next.empty() && next.front() == Cell::white) {
          lmax.push_back(Cell::rect_left);
          lmax.push_back(Cell::rect_right);
          consumed_leading_white = true;
        } else {
          lmax.push_back(Cell::black);
        }
      } else {
        fuse_tail(lmax);
      }
    }
    const std::vector<Cell> sc = seg_cells(left_idx[k]);
    lmin.insert(lmin.end(), sc.begin(), sc.end());
    lmax.insert(lmax.end(), sc.begin() + (consumed_leading_white ? 1 : 0), sc.end());
  }

  std::vector<Cell> rmin;
  std::vector<Cell> rmax;
  for (std::size_t k = 0; k < right_idx.size(); ++k) {
    if (k > 0) {
      rmin.push_back(Cell::black);
      fuse_tail(rmax);
    }
    const std::vector<Cell> sc = seg_cells(right_idx[k]);
    rmin.insert(rmin.end(), sc.begin(), sc.end());
    rmax.insert(rmax.end(), sc.begin(), sc.end());
  }

  return CoproductBlock{d, Sash::from_cells(lmin), Sash::from_cells(lmax),
                        Sash::from_cells(rmin), Sash::from_cells(rmax)};
}

bool matches_form(const Sash& x, const ExtendedSash& h) {
  if (x.is_unit()) return false;
  const std::vector<Cell> xc = x.cells();
  const std::vector<ExtCell>& hc = h.cells();
  if (xc.size() != hc.size()) return false;
  auto can_black = [](ExtCell e) {
    return e == ExtCell::black || e == ExtCell::black_plus || e == ExtCell::mystery;
  };
  auto can_white = [](ExtCell e) {
    return e == ExtCell::white || e == ExtCell::white_plus || e == ExtCell::mystery;
  };
  for (std::size_t i = 0; i < xc.size(); ++i) {
    switch (xc[i]) {
      case Cell::black:
        if (!can_black(hc[i])) return false;
        break;
      case Cell::white:
        if (!can_white(hc[i])) return false;
        break;
      case Cell::rect_left: {
        const ExtCell a = hc[i];
        const ExtCell b = hc[i + 1];
        const bool exact = a == ExtCell::rect_left;
        const bool fuse_from_left =
            (a == ExtCell::black_plus || a == ExtCell::mystery) && can_white(b);
        const bool fuse_from_right =
            (b == ExtCell::white_plus || b == ExtCell::mystery) && can_black(a);
        if (!exact && !fuse_from_left && !fuse_from_right) return false;
        ++i;
        break;
      }
      case Cell::rect_right:
        break;
    }
  }
  return true;
}

SashElement sash_product(const Sash& a, const Sash& b) {
  SashElement out;
  if (a.is_unit()) {
    out.add(b);
    return out;
  }
  if (b.is_unit()) {
    out.add(a);
    return out;
  }
  const std::vector<Cell> ac = a.cells();
  const std::vector<Cell> bc = b.cells();
  auto glue = [&](Cell joint) {
    std::vector<Cell> c = ac;
    c.push_back(joint);
    c.insert(c.end(), bc.begin(), bc.end());
    return Sash::from_cells(c);
  };
  out.add(glue(Cell::black));
  out.add(glue(Cell::white));
  if (!ac.empty() && ac.back() == Cell::black) {
    std::vector<Cell> c(ac.begin(), ac.end() - 1);
    c.push_back(Cell::rect_left);
    c.push_back(Cell::rect_right);
    c.insert(c.end(), bc.begin(), bc.end());
    out.add(Sash::from_cells(c));
  }
  if (!bc.empty() && bc.front() == Cell::white) {
    std::vector<Cell> c = ac;
    c.push_back(Cell::rect_left);
    c.push_back(Cell::rect_right);
    c.insert(c.end(), bc.begin() + 1, bc.end());
    out.add(Sash::from_cells(c));
  }
  return out;
}

SashElement sash_product(const SashElement& a, const SashElement& b) {
  return extend_bilinear(a, b,
                         [](const Sash& x, const Sash& y) { return sash_product(x, y); });
}

SashTensor sash_coproduct(const Sash& c) {
  SashTensor out;
  if (c.is_unit()) {
    out.add(c, c);
    return out;
  }
  out.add(Sash::unit(), c);
  out.add(c, Sash::unit());
  for (const Dotting& d : enumerate_allowable_dottings(c)) {
    const CoproductBlock block = coproduct_block(d);
    const std::vector<Sash> lefts = sash_interval(block.left_min, block.left_max);
    const std::vector<Sash> rights = sash_interval(block.right_min, block.right_max);
    for (const Sash& l : lefts) {
      for (const Sash& r : rights) out.add(l, r);
    }
  }
  return out;
}

SashTensor sash_coproduct(const SashElement& e) {
  return extend_linear_to_tensor(e, [](const Sash& c) { return sash_coproduct(c); });
}

Sash dual_product_term(const Sash& x, const Sash& y, const IndexSet& t) {
  const int p = x.grade();
  const int n = p + y.grade();
  if (static_cast<int>(t.size()) != p) {
    throw std::invalid_argument("dual_product_term: set size must equal the left grade");
  }
  for (int h : t) {
    if (h < 1 || h > n) throw std::invalid_argument("dual_product_term: label out of range");
  }
  if (n == 0) return Sash::unit();

  std::vector<bool> in_t(static_cast<std::size_t>(n) + 2, false);
  for (int h : t) in_t[static_cast<std::size_t>(h)] = true;
  std::vector<int> rank_x(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> rank_y(static_cast<std::size_t>(n) + 1, 0);
  for (int h = 1, rx = 0, ry = 0; h <= n; ++h) {
    if (in_t[static_cast<std::size_t>(h)]) {
      rank_x[static_cast<std::size_t>(h)] = ++rx;
    } else {
      rank_y[static_cast<std::size_t>(h)] = ++ry;
    }
  }
  const std::vector<Cell> xc = x.is_unit() ? std::vector<Cell>{} : x.cells();
  const std::vector<Cell> yc = y.is_unit() ? std::vector<Cell>{} : y.cells();
  auto xcell = [&](int h) { return xc[static_cast<std::size_t>(rank_x[static_cast<std::size_t>(h)] - 1)]; };
  auto ycell = [&](int h) { return yc[static_cast<std::size_t>(rank_y[static_cast<std::size_t>(h)] - 1)]; };

  std::vector<Cell> out;
  auto rect = [&] {
    out.push_back(Cell::rect_left);
    out.push_back(Cell::rect_right);
  };
  int h = 1;
  while (h <= n - 1) {
    const bool a = in_t[static_cast<std::size_t>(h)];
    const bool b = in_t[static_cast<std::size_t>(h + 1)];
    const bool c = h + 2 <= n && in_t[static_cast<std::size_t>(h + 2)];
    if (h + 2 <= n && a && !b && c) {
      const Cell dc = xcell(h);
      if (dc == Cell::white || dc == Cell::rect_right) {
        rect();
        h += 2;
        continue;
      }
    }
    if (h + 2 <= n && !a && !b && c) {
      const Cell ec = ycell(h);
      if (ec == Cell::black || ec == Cell::rect_left) {
        rect();
        h += 2;
        continue;
      }
    }
    if (a && b) {
      const Cell dc = xcell(h);
      if (dc == Cell::rect_left && c) {
        rect();
        h += 2;
        continue;
      }
      if (dc == Cell::rect_left) {
        out.push_back(Cell::black);
      } else if (dc == Cell::rect_right) {
        out.push_back(Cell::white);
      } else {
        out.push_back(dc);
      }
    } else if (!a && !b) {
      const Cell ec = ycell(h);
      if (ec == Cell::rect_left) {
        // the partner half is within the same block, else the crossing rule
        // above would have fired
        rect();
        h += 2;
        continue;
      }
      if (ec == Cell::rect_right) {
        out.push_back(Cell::white);
      } else {
        out.push_back(ec);
      }
    } else if (a) {
      out.push_back(Cell::black);
    } else {
      out.push_back(Cell::white);
    }
    h += 1;
  }
  return Sash::from_cells(out);
}

SashElement sash_dual_product(const Sash& x, const Sash& y) {
  SashElement out;
  const int n = x.grade() + y.grade();
  for_each_combination(n, x.grade(), [&](const std::vector<int>& chosen) {
    out.add(dual_product_term(x, y, IndexSet(chosen.begin(), chosen.end())));
  });
  return out;
}

SashTensor sash_dual_coproduct(const Sash& c) {
  SashTensor out;
  if (c.is_unit()) {
    out.add(c, c);
    return out;
  }
  const std::vector<Cell> cells = c.cells();
  const int n = static_cast<int>(cells.size());
  auto left_part = [&](int i) {
    if (i == -1) return Sash::unit();
    std::vector<Cell> cc(cells.begin(), cells.begin() + i);
    if (!cc.empty() && cc.back() == Cell::rect_left) cc.back() = Cell::black;
    return Sash::from_cells(cc);
  };
  auto right_part = [&](int m) {
    if (m == -1) return Sash::unit();
    std::vector<Cell> cc(cells.end() - m, cells.end());
    if (!cc.empty() && cc.front() == Cell::rect_right) cc.front() = Cell::white;
    return Sash::from_cells(cc);
  };
  for (int i = -1; i <= n; ++i) out.add(left_part(i), right_part(n - i - 1));
  return out;
}

Permutation tau(const Sash& c, const IndexSet& t) {
  allowable_set_to_dotting(c, t);
  const std::vector<Cell> cells = c.cells();
  const int n = static_cast<int>(cells.size()) + 1;
  std::vector<int> left;
  std::vector<int> right;
  auto insert_before = [](std::vector<int>& side, int anchor, int value) {
    side.insert(std::find(side.begin(), side.end(), anchor), value);
  };
  if (t.count(1) > 0) {
    left.push_back(1);
  } else {
    right.push_back(1);
  }
  int i = 1;
  while (i <= n - 1) {
    switch (cells[static_cast<std::size_t>(i - 1)]) {
      case Cell::black:
        (t.count(i + 1) > 0 ? left : right).push_back(i + 1);
        ++i;
        break;
      case Cell::white:
        if (t.count(i + 1) > 0 && t.count(i) == 0) {
          left.push_back(i + 1);
        } else if (t.count(i) > 0) {
          insert_before(left, i, i + 1);
        } else {
          insert_before(right, i, i + 1);
        }
        ++i;
        break;
      case Cell::rect_left:
        if (t.count(i) > 0) {
          insert_before(left, i, i + 2);
          (t.count(i + 1) > 0 ? left : right).push_back(i + 1);
        } else {
          right.push_back(i + 1);
          if (t.count(i + 2) > 0) {
            left.push_back(i + 2);
          } else {
            insert_before(right, i, i + 2);
          }
        }
        i += 2;
        break;
      case Cell::rect_right:
        ++i;
        break;
    }
  }
  left.insert(left.end(), right.begin(), right.end());
  return Permutation(std::move(left));
}

}  // namespace pellhopf
