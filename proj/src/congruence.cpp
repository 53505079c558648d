#include "pellhopf/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pellhopf/combinatorics.hpp"
#include "pellhopf/weak_order.hpp"

namespace pellhopf {

PatternClass::PatternClass(int k_, IndexSet v_) : k(k_), v(std::move(v_)) {
  if (k < 2) throw std::invalid_argument("PatternClass: length must be at least 2");
  for (int r : v) {
    if (r < 2 || r > k - 1) {
      throw std::invalid_argument("PatternClass: ranks must lie strictly between 1 and k");
    }
  }
}

std::string to_text(const PatternClass& p) {
  std::string s;
  for (int r : p.v) s += static_cast<char>('0' + r);
  s += '(';
  s += static_cast<char>('0' + p.k);
  s += "1)";
  for (int r = 2; r <= p.k - 1; ++r) {
    if (p.v.count(r) == 0) s += static_cast<char>('0' + r);
  }
  return s;
}

PatternClass parse_pattern(const std::string& s) {
  const std::size_t open = s.find('(');
  const std::size_t close = s.find(')');
  if (open == std::string::npos || close == std::string::npos || close != open + 3 ||
      s[open + 2] != '1') {
    throw std::invalid_argument("parse_pattern: expected v(k1)v' with single digits");
  }
  const char kc = s[open + 1];
  if (kc < '2' || kc > '9') throw std::invalid_argument("parse_pattern: bad length digit");
  const int k = kc - '0';
  IndexSet v;
  IndexSet rest;
  auto read_digits = [](const std::string& part, IndexSet& into) {
    for (char c : part) {
      if (c < '2' || c > '9') throw std::invalid_argument("parse_pattern: bad rank digit");
      if (!into.insert(c - '0').second) {
        throw std::invalid_argument("parse_pattern: repeated rank");
      }
    }
  };
  read_digits(s.substr(0, open), v);
  read_digits(s.substr(close + 1), rest);
  PatternClass p(k, v);
  IndexSet expected;
  for (int r = 2; r <= k - 1; ++r) {
    if (v.count(r) == 0) expected.insert(r);
  }
  if (rest != expected) {
    throw std::invalid_argument("parse_pattern: trailing ranks must complement the leading ones");
  }
  return p;
}

CongruenceSystem::CongruenceSystem(std::vector<PatternClass> patterns)
    : patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw std::invalid_argument("CongruenceSystem: no patterns");
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

const CongruenceSystem& CongruenceSystem::pell() {
  static const CongruenceSystem u{
      {PatternClass(3, IndexSet{2}), PatternClass(4, IndexSet{})}};
  return u;
}

std::string to_text(const CongruenceSystem& u) {
  std::string s;
  for (const PatternClass& p : u.patterns()) {
    if (!s.empty()) s += ',';
    s += to_text(p);
  }
  return s;
}

CongruenceSystem parse_congruence_system(const std::string& s) {
  if (s == "pell") return CongruenceSystem::pell();
  std::vector<PatternClass> patterns;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string tok =
        s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    patterns.push_back(parse_pattern(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return CongruenceSystem(patterns);
}

namespace {

// Does some instance of p put its adjacent max-min pair at positions (d, d+1)?
// The descent there is given; the other k-2 values must lie strictly between
// the pair, those of rank set v before position d and the rest after d+1.
bool descent_admits_instance(const Permutation& x, int d, const PatternClass& p) {
  const int hi = x.entry(d);
  const int lo = x.entry(d + 1);
  const int middles = p.k - 2;
  std::vector<int> between;
  for (int v = lo + 1; v < hi; ++v) between.push_back(v);
  if (static_cast<int>(between.size()) < middles) return false;
  if (middles == 0) return true;
  std::vector<bool> is_before;
  is_before.reserve(between.size());
  for (int v : between) is_before.push_back(x.position_of(v) < d);
  const int m = static_cast<int>(between.size());
  bool found = false;
  for_each_combination(m, middles, [&](const std::vector<int>& chosen) {
    if (found) return;
    for (int t = 0; t < middles; ++t) {
      const bool need_before = p.v.count(t + 2) > 0;
      if (is_before[static_cast<std::size_t>(chosen[static_cast<std::size_t>(t)] - 1)] !=
          need_before) {
        return;
      }
    }
    found = true;
  });
  return found;
}

}  // namespace

std::optional<std::pair<int, int>> find_pattern_instance(const Permutation& x,
                                                         const CongruenceSystem& u) {
  for (int d = 1; d + 1 <= x.size(); ++d) {
    if (x.entry(d) <= x.entry(d + 1)) continue;
    for (const PatternClass& p : u.patterns()) {
      if (descent_admits_instance(x, d, p)) return std::make_pair(d, d + 1);
    }
  }
  return std::nullopt;
}

std::vector<int> instance_descents(const Permutation& x, const CongruenceSystem& u) {
  std::vector<int> out;
  for (int d = 1; d + 1 <= x.size(); ++d) {
    if (x.entry(d) <= x.entry(d + 1)) continue;
    for (const PatternClass& p : u.patterns()) {
      if (descent_admits_instance(x, d, p)) {
        out.push_back(d);
        break;
      }
    }
  }
  return out;
}

bool avoids(const Permutation& x, const CongruenceSystem& u) {
  return !find_pattern_instance(x, u).has_value();
}

namespace {

Permutation swap_adjacent(const Permutation& x, int d) {
  std::vector<int> e = x.entries();
  std::swap(e[static_cast<std::size_t>(d - 1)], e[static_cast<std::size_t>(d)]);
  return Permutation(std::move(e));
}

}  // namespace

Permutation pi_down(const Permutation& x, const CongruenceSystem& u) {
  Permutation z = x;
  while (true) {
    const auto inst = find_pattern_instance(z, u);
    if (!inst) return z;
    z = swap_adjacent(z, inst->first);
  }
}

Permutation pi_up(const Permutation& x, const CongruenceSystem& u) {
  Permutation z = x;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int d = 1; d + 1 <= z.size() && !moved; ++d) {
      if (z.entry(d) >= z.entry(d + 1)) continue;
      const Permutation cand = swap_adjacent(z, d);
      for (const PatternClass& p : u.patterns()) {
        if (descent_admits_instance(cand, d, p)) {
          z = cand;
          moved = true;
          break;
        }
      }
    }
  }
  return z;
}

std::vector<Permutation> congruence_class(const Permutation& x, const CongruenceSystem& u) {
  return weak_interval(pi_down(x, u), pi_up(x, u));
}

std::vector<Permutation> enumerate_avoiders(int n, const CongruenceSystem& u) {
  if (n < 0) throw std::invalid_argument("enumerate_avoiders: negative size");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation x{e};
    if (avoids(x, u)) out.push_back(std::move(x));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

PermElement r_map(const PermElement& e, const CongruenceSystem& u) {
  PermElement out;
  for (const auto& [x, c] : e.terms()) {
    if (avoids(x, u)) out.add(x, c);
  }
  return out;
}

PermElement c_map(const PermElement& e, const CongruenceSystem& u) {
  PermElement out;
  for (const auto& [x, c] : e.terms()) {
    if (!avoids(x, u)) throw std::invalid_argument("c_map: basis term is not an avoider");
    for (const Permutation& y : weak_interval(x, pi_up(x, u))) out.add(y, c);
  }
  return out;
}

std::vector<Permutation> av_interval(const Permutation& lo, const Permutation& hi,
                                     const CongruenceSystem& u) {
  std::vector<Permutation> out;
  for (const Permutation& z : weak_interval(lo, hi)) {
    if (avoids(z, u)) out.push_back(z);
  }
  return out;
}

PermElement av_product(const Permutation& x, const Permutation& y, const CongruenceSystem& u) {
  if (!avoids(x, u) || !avoids(y, u)) {
    throw std::invalid_argument("av_product: operands must avoid the system");
  }
  const PermElement via_shuffles = r_map(mr_product(x, y), u);

  std::vector<int> top_word = y.entries();
  for (int& v : top_word) v += x.size();
  top_word.insert(top_word.end(), x.entries().begin(), x.entries().end());
  const Permutation bottom{concat(x, embed(y, complement_in(full_set(x.size()),
                                                            x.size() + y.size())))};
  const Permutation top = pi_down(Permutation(std::move(top_word)), u);
  PermElement via_interval;
  for (const Permutation& z : av_interval(bottom, top, u)) via_interval.add(z);

  if (via_shuffles != via_interval) {
    throw std::logic_error("av_product: projected shuffles disagree with the interval sum");
  }
  return via_shuffles;
}

PermTensor av_coproduct(const Permutation& z, const CongruenceSystem& u) {
  if (!avoids(z, u)) throw std::invalid_argument("av_coproduct: input must avoid the system");
  PermTensor out;
  for (const Permutation& m : weak_interval(z, pi_up(z, u))) {
    for (const auto& [k, c] : mr_coproduct(m).terms()) {
      if (avoids(k.first, u) && avoids(k.second, u)) out.add(k.first, k.second, c);
    }
  }
  return out;
}

PermElement av_dual_product(const Permutation& x, const Permutation& y,
                            const CongruenceSystem& u) {
  if (!avoids(x, u) || !avoids(y, u)) {
    throw std::invalid_argument("av_dual_product: operands must avoid the system");
  }
  PermElement out;
  const int n = x.size() + y.size();
  for_each_combination(n, x.size(), [&](const std::vector<int>& chosen) {
    const IndexSet t(chosen.begin(), chosen.end());
    const Permutation term{concat(embed(x, t), embed(y, complement_in(t, n)))};
    out.add(pi_down(term, u));
  });
  return out;
}

PermTensor av_dual_coproduct(const Permutation& z, const CongruenceSystem& u) {
  if (!avoids(z, u)) {
    throw std::invalid_argument("av_dual_coproduct: input must avoid the system");
  }
  return mr_dual_coproduct(z);
}

std::vector<IndexSet> good_sets(const Permutation& z, const CongruenceSystem& u) {
  if (!avoids(z, u)) throw std::invalid_argument("good_sets: input must avoid the system");
  std::set<IndexSet> seen;
  for (const Permutation& m : congruence_class(z, u)) {
    IndexSet prefix;
    seen.insert(prefix);
    for (int p = 1; p <= m.size(); ++p) {
      prefix.insert(m.entry(p));
      seen.insert(prefix);
    }
  }
  std::vector<IndexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::pair<Permutation, Permutation> zmin_zmax(const Permutation& z, const IndexSet& t,
                                              const CongruenceSystem& u) {
  std::vector<Permutation> hits;
  for (const Permutation& m : congruence_class(z, u)) {
    IndexSet prefix;
    for (int p = 1; p <= static_cast<int>(t.size()); ++p) prefix.insert(m.entry(p));
    if (prefix == t) hits.push_back(m);
  }
  if (hits.empty()) throw std::invalid_argument("zmin_zmax: set is not good for this class");
  const Permutation* lo = nullptr;
  const Permutation* hi = nullptr;
  for (const Permutation& m : hits) {
    bool is_lo = true;
    bool is_hi = true;
    for (const Permutation& other : hits) {
      if (!weak_leq(m, other)) is_lo = false;
      if (!weak_leq(other, m)) is_hi = false;
    }
    if (is_lo) lo = &m;
    if (is_hi) hi = &m;
  }
  if (lo == nullptr || hi == nullptr) {
    throw std::logic_error("zmin_zmax: prefix fiber has no extreme members");
  }
  return {*lo, *hi};
}

PermTensor coproduct_via_intervals(const Permutation& z, const CongruenceSystem& u) {
  if (!avoids(z, u)) {
    throw std::invalid_argument("coproduct_via_intervals: input must avoid the system");
  }
  const int n = z.size();
  PermTensor out;
  for (const IndexSet& t : good_sets(z, u)) {
    const auto [zmin, zmax] = zmin_zmax(z, t, u);
    const IndexSet tc = complement_in(t, n);
    const Permutation left_lo = standardize(restrict_to(zmin, t));
    const Permutation left_hi = pi_down(standardize(restrict_to(zmax, t)), u);
    const Permutation right_lo = standardize(restrict_to(zmin, tc));
    const Permutation right_hi = pi_down(standardize(restrict_to(zmax, tc)), u);
    for (const Permutation& a : av_interval(left_lo, left_hi, u)) {
      for (const Permutation& b : av_interval(right_lo, right_hi, u)) out.add(a, b);
    }
  }
  return out;
}

}  // namespace pellhopf
