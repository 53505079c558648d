#include "pellhopf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "pellhopf/combinatorics.hpp"
#include "pellhopf/congruence.hpp"
#include "pellhopf/mr_hopf.hpp"
#include "pellhopf/sash.hpp"
#include "pellhopf/sash_hopf.hpp"
#include "pellhopf/weak_order.hpp"
#include "pellhopf/word.hpp"

namespace pellhopf {

namespace {

struct Tally {
  long long cases = 0;
  bool passed = true;
  std::string detail;
  void fail(const std::string& d) {
    if (passed) {
      passed = false;
      detail = d;
    }
  }
  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond) fail(what);
  }
  void expect_text(const std::string& got, const std::string& want, const std::string& what) {
    ++cases;
    if (got != want) fail(what + ": got \"" + got + "\", want \"" + want + "\"");
  }
};

using Body = std::function<void(const VerifyOptions&, Tally&)>;

CheckDef def(std::string suite, std::string name, Body body) {
  CheckDef d;
  d.suite = suite;
  d.name = name;
  d.run = [suite, name, body](const VerifyOptions& o) {
    Tally t;
    try {
      body(o, t);
    } catch (const std::exception& ex) {
      t.fail(std::string("unexpected exception: ") + ex.what());
    }
    return CheckResult{suite, name, t.passed, t.cases, t.detail};
  };
  return d;
}

int cap(const VerifyOptions& o, int own) { return std::min(own, o.max_grade); }

const CongruenceSystem& pell() { return CongruenceSystem::pell(); }

std::vector<long long> pell_numbers(int n) {
  std::vector<long long> p(static_cast<std::size_t>(std::max(n, 2)) + 1, 0);
  p[1] = 1;
  p[2] = 2;
  for (int i = 3; i <= n; ++i) p[static_cast<std::size_t>(i)] = 2 * p[static_cast<std::size_t>(i - 1)] + p[static_cast<std::size_t>(i - 2)];
  p.resize(static_cast<std::size_t>(n) + 1);
  return p;
}

SashElement sigma_image(const PermElement& e) {
  SashElement out;
  for (const auto& [p, c] : e.terms()) out.add(sigma(p), c);
  return out;
}

SashTensor sigma_image(const PermTensor& e) {
  SashTensor out;
  for (const auto& [k, c] : e.terms()) out.add(sigma(k.first), sigma(k.second), c);
  return out;
}

IndexSet prefix_values(const Permutation& x, int k) {
  IndexSet t;
  for (int i = 1; i <= k; ++i) t.insert(x.entry(i));
  return t;
}

Permutation swap_at(const Permutation& x, int d) {
  std::vector<int> e = x.entries();
  std::swap(e[static_cast<std::size_t>(d - 1)], e[static_cast<std::size_t>(d)]);
  return Permutation(std::move(e));
}

Permutation as_permutation(const Word& w) { return Permutation(w.entries()); }

std::string pair_text(const Permutation& a, const Permutation& b) {
  return "[" + to_text(a) + "](x)[" + to_text(b) + "]";
}

std::string pair_text(const Sash& a, const Sash& b) {
  return "[" + to_text(a) + "](x)[" + to_text(b) + "]";
}

// Dense reachability bitmap over one grade of the weak order; element order is
// the all_permutations order.
struct BitPoset {
  std::vector<Permutation> elems;
  std::size_t words = 0;
  std::vector<std::vector<std::uint64_t>> up;
  std::vector<std::vector<std::uint64_t>> down;
};

BitPoset build_bit_poset(int n) {
  BitPoset p;
  p.elems = all_permutations(n);
  const std::size_t count = p.elems.size();
  p.words = (count + 63) / 64;
  std::vector<InversionSet> inv(count);
  for (std::size_t i = 0; i < count; ++i) inv[i] = inversion_set(p.elems[i]);
  p.up.assign(count, std::vector<std::uint64_t>(p.words, 0));
  p.down.assign(count, std::vector<std::uint64_t>(p.words, 0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      const bool leq = std::includes(inv[j].begin(), inv[j].end(), inv[i].begin(), inv[i].end());
      if (leq) {
        p.up[i][j / 64] |= std::uint64_t(1) << (j % 64);
        p.down[j][i / 64] |= std::uint64_t(1) << (i % 64);
      }
    }
  }
  return p;
}

// The element whose principal filter (or ideal) is exactly the given set, if
// one exists: the brute-force join (meet) of whatever generated the set.
std::optional<std::size_t> principal_extreme(const std::vector<std::vector<std::uint64_t>>& cones,
                                             const std::vector<std::uint64_t>& want) {
  for (std::size_t w = 0; w < want.size(); ++w) {
    std::uint64_t bits = want[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      bits &= bits - 1;
      const std::size_t k = w * 64 + static_cast<std::size_t>(b);
      if (cones[k] == want) return k;
    }
  }
  return std::nullopt;
}

template <class B>
std::set<B> term_set(const FormalSum<B>& e) {
  std::set<B> out;
  for (const auto& [b, c] : e.terms()) out.insert(b);
  return out;
}

// Triple-tensor expansion used by the coassociativity checks. coprod must map
// a basis object to a TensorSum over the same basis.
template <class B, class Coprod>
bool coassociative(const B& z, Coprod coprod, std::string* counterexample) {
  using Triple = std::tuple<B, B, B>;
  std::map<Triple, Int> left;
  std::map<Triple, Int> right;
  const TensorSum<B> first = coprod(z);
  for (const auto& [k, c] : first.terms()) {
    const TensorSum<B> again = coprod(k.first);
    for (const auto& [k2, c2] : again.terms()) {
      left[Triple{k2.first, k2.second, k.second}] += c * c2;
    }
    const TensorSum<B> again2 = coprod(k.second);
    for (const auto& [k2, c2] : again2.terms()) {
      right[Triple{k.first, k2.first, k2.second}] += c * c2;
    }
  }
  for (auto it = left.begin(); it != left.end();) {
    it = it->second == 0 ? left.erase(it) : std::next(it);
  }
  for (auto it = right.begin(); it != right.end();) {
    it = it->second == 0 ? right.erase(it) : std::next(it);
  }
  if (left == right) return true;
  if (counterexample != nullptr) *counterexample = "coassociativity broken at " + to_text(z);
  return false;
}

// ---------------------------------------------------------------------------
// bijection suite
// ---------------------------------------------------------------------------

void check_counting(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 9);
  const std::vector<long long> want = pell_numbers(std::max(b, 2));
  std::string counts;
  for (int n = 1; n <= b; ++n) {
    const long long av = static_cast<long long>(enumerate_avoiders(n, pell()).size());
    const long long sa = static_cast<long long>(sashes_of_grade(n).size());
    ++t.cases;
    if (av != want[static_cast<std::size_t>(n)] || sa != av) {
      t.fail("n=" + std::to_string(n) + ": avoiders " + std::to_string(av) + ", sashes " +
             std::to_string(sa) + ", recursion " + std::to_string(want[static_cast<std::size_t>(n)]));
      return;
    }
    if (!counts.empty()) counts += ",";
    counts += std::to_string(av);
  }
  t.detail = "counts " + counts;
}

void check_roundtrip(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 9);
  t.expect(eta(Sash::unit()).size() == 0, "eta(unit) is not the empty permutation");
  t.expect(sigma(Permutation()) == Sash::unit(), "sigma(empty) is not the unit");
  for (int n = 1; n <= b; ++n) {
    for (const Sash& c : sashes_of_grade(n)) {
      const Permutation x = eta(c);
      ++t.cases;
      if (x.size() != n || !is_pell(x) || sigma(x) != c) {
        t.fail("eta/sigma roundtrip broken at sash " + to_text(c));
        return;
      }
    }
    for (const Permutation& z : enumerate_avoiders(n, pell())) {
      const Sash c = sigma(z);
      ++t.cases;
      if (c.grade() != n || eta(c) != z) {
        t.fail("sigma/eta roundtrip broken at avoider " + to_text(z));
        return;
      }
    }
  }
}

void check_bijection_examples(const VerifyOptions&, Tally& t) {
  t.expect_text(to_text(sigma(parse_word("421365"))), "wrbw", "sigma(421365)");
  t.expect_text(to_text(sigma(parse_word("742598"))), "wrbw", "sigma(742598)");
  t.expect_text(to_text(eta(parse_sash("wrbw"))), "4,2,1,3,6,5", "eta(wrbw)");
  t.expect_text(to_text(sigma(parse_word("35412"))), "rbw", "sigma(35412)");
  t.expect_text(to_text(sigma(parse_word("3124"))), "rb", "sigma(3124)");
  t.expect_text(to_text(sigma(parse_word("312"))), "r", "sigma(312)");
  t.expect_text(to_text(sigma(parse_word("132"))), "bw", "sigma(132)");
  t.expect_text(to_text(sigma(parse_word("213"))), "wb", "sigma(213)");
  t.expect_text(to_text(sigma(parse_word("12345"))), "bbbb", "sigma(identity)");
  t.expect_text(to_text(eta(parse_sash("e"))), "1", "eta(e)");
  t.expect_text(to_text(eta(parse_sash("bbb"))), "1,2,3,4", "eta(bbb)");
  t.expect(is_pell(parse_permutation("421365")), "421365 should be recognized");
  t.expect(!is_pell(parse_permutation("231")), "231 should be rejected");
  t.expect(static_cast<int>(enumerate_sashes(-1).size()) == 0, "length -1 should be empty");
  t.expect(static_cast<int>(enumerate_sashes(0).size()) == 1, "length 0 should have one sash");
  t.expect(static_cast<int>(enumerate_sashes(1).size()) == 2, "length 1 should have two sashes");
  t.expect(static_cast<int>(enumerate_sashes(2).size()) == 5, "length 2 should have five sashes");
  t.expect(static_cast<int>(enumerate_sashes(3).size()) == 12, "length 3 should have twelve sashes");
}

void check_avoiders_are_pell(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 8);
  for (int n = 0; n <= b; ++n) {
    for (const Permutation& x : all_permutations(n)) {
      ++t.cases;
      if (avoids(x, pell()) != is_pell(x)) {
        t.fail("avoidance and the descent rule disagree at " + to_text(x));
        return;
      }
    }
  }
}

void check_sash_lattice(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 7);
  for (int g = 1; g <= b; ++g) {
    const std::vector<Sash> all = sashes_of_grade(g);
    const std::size_t count = all.size();
    std::map<Sash, std::size_t> index;
    for (std::size_t i = 0; i < count; ++i) index.emplace(all[i], i);
    std::vector<InversionSet> inv(count);
    for (std::size_t i = 0; i < count; ++i) inv[i] = inversion_set(eta(all[i]));
    std::vector<std::vector<bool>> reach(count, std::vector<bool>(count, false));
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<std::size_t> stack{i};
      reach[i][i] = true;
      while (!stack.empty()) {
        const std::size_t j = stack.back();
        stack.pop_back();
        for (const Sash& up : sash_covers_up(all[j])) {
          const std::size_t k = index.at(up);
          if (!reach[i][k]) {
            reach[i][k] = true;
            stack.push_back(k);
          }
        }
      }
    }
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        const bool via_eta =
            std::includes(inv[j].begin(), inv[j].end(), inv[i].begin(), inv[i].end());
        ++t.cases;
        if (reach[i][j] != via_eta || sash_leq(all[i], all[j]) != via_eta) {
          t.fail("cover closure and eta order disagree at " + to_text(all[i]) + " vs " +
                 to_text(all[j]));
          return;
        }
      }
    }
    if (g >= 2) {
      const Sash bottom = parse_sash(std::string(static_cast<std::size_t>(g - 1), 'b'));
      const Sash top = parse_sash(std::string(static_cast<std::size_t>(g - 1), 'w'));
      for (const Sash& c : all) {
        ++t.cases;
        if (!sash_leq(bottom, c) || !sash_leq(c, top)) {
          t.fail("bottom/top violated at " + to_text(c));
          return;
        }
      }
    }
  }
}

void check_sash_covers_golden(const VerifyOptions&, Tally& t) {
  const std::map<std::string, std::set<std::string>> want = {
      {"bb", {"wb", "bw"}}, {"bw", {"r"}}, {"wb", {"ww"}}, {"r", {"ww"}}, {"ww", {}}};
  for (const auto& [from, tos] : want) {
    std::set<std::string> got;
    for (const Sash& c : sash_covers_up(parse_sash(from))) got.insert(to_text(c));
    ++t.cases;
    if (got != tos) t.fail("covers of " + from + " are wrong");
  }
  std::set<std::string> interval;
  for (const Sash& c : sash_interval(parse_sash("bw"), parse_sash("ww"))) {
    interval.insert(to_text(c));
  }
  t.expect(interval == std::set<std::string>{"bw", "r", "ww"}, "interval [bw, ww] is wrong");
  t.expect(sash_interval(parse_sash("rb"), parse_sash("rb")).size() == 1,
           "one-point interval is wrong");
}

// ---------------------------------------------------------------------------
// congruence suite
// ---------------------------------------------------------------------------

void check_word_examples(const VerifyOptions&, Tally& t) {
  t.expect_text(to_text(standardize(parse_word("62398"))), "3,1,2,5,4", "standardize(62398)");
  t.expect_text(to_text(standardize(parse_word("325"))), "2,1,3", "standardize(325)");
  t.expect(standardize(Word()).size() == 0, "standardize of empty");
  t.expect_text(to_text(embed(parse_permutation("31254"), parse_index_set("{2,3,6,8,9}"))),
                "6,2,3,9,8", "embed(31254, T1)");
  t.expect_text(to_text(embed(parse_permutation("21"), parse_index_set("{4,7}"))), "7,4",
                "embed(21, {4,7})");
  t.expect(embed(parse_permutation("312"), full_set(3)) == parse_word("312"),
           "embed into the full set");
  t.expect_text(to_text(restrict_to(parse_word("31254"), parse_index_set("{2,3,5}"))), "3,2,5",
                "restrict(31254, T2)");
  t.expect_text(to_text(restrict_to(parse_word("31254"), IndexSet{})), "()", "restrict to empty");
  t.expect_text(to_text(inverse(parse_permutation("312"))), "2,3,1", "inverse(312)");
  t.expect_text(to_text(inverse(parse_permutation("421365"))), "3,2,4,1,6,5", "inverse(421365)");
  t.expect_text(to_text(concat(parse_word("12"), parse_word("43"))), "1,2,4,3", "concat(12,43)");
  t.expect_text(to_text(concat(Word(), parse_word("312"))), "3,1,2", "concat(empty, 312)");
  t.expect_text(to_text(concat(parse_word("312"), parse_word("654"))), "3,1,2,6,5,4",
                "concat(312,654)");
  {
    std::set<std::string> got;
    for (const Permutation& z : shifted_shuffles(parse_permutation("1"), parse_permutation("1"))) {
      got.insert(to_text(z));
    }
    t.expect(got == std::set<std::string>{"1,2", "2,1"}, "shuffles of 1 and 1");
  }
  {
    std::set<std::string> got;
    for (const Permutation& z :
         shifted_shuffles(parse_permutation("12"), parse_permutation("1"))) {
      got.insert(to_text(z));
    }
    t.expect(got == std::set<std::string>{"1,2,3", "1,3,2", "3,1,2"}, "shuffles of 12 and 1");
  }
  t.expect(shifted_shuffles(parse_permutation("312"), Permutation()).size() == 1,
           "shuffle with the empty permutation");
  const InversionSet inv312 = inversion_set(parse_permutation("312"));
  t.expect(inv312 == InversionSet{{3, 1}, {3, 2}}, "inversion_set(312)");
}

void check_weak_order_examples(const VerifyOptions&, Tally& t) {
  t.expect(weak_leq(parse_permutation("12"), parse_permutation("21")), "12 <= 21");
  t.expect(!weak_leq(parse_permutation("213"), parse_permutation("132")), "213 vs 132");
  t.expect(!weak_leq(parse_permutation("132"), parse_permutation("213")), "132 vs 213");
  t.expect(weak_leq(parse_permutation("312"), parse_permutation("312")), "reflexivity");
  {
    std::set<std::string> got;
    for (const Permutation& y : weak_covers_up(parse_permutation("123"))) got.insert(to_text(y));
    t.expect(got == std::set<std::string>{"2,1,3", "1,3,2"}, "covers up of 123");
  }
  t.expect(weak_covers_up(parse_permutation("321")).empty(), "top has no covers");
  {
    std::set<std::string> got;
    for (const Permutation& y : weak_covers_up(parse_permutation("312"))) got.insert(to_text(y));
    t.expect(got == std::set<std::string>{"3,2,1"}, "covers up of 312");
  }
  t.expect_text(to_text(weak_join(parse_permutation("213"), parse_permutation("132"))), "3,2,1",
                "join(213,132)");
  t.expect_text(to_text(weak_meet(parse_permutation("213"), parse_permutation("132"))), "1,2,3",
                "meet(213,132)");
  t.expect(weak_join(parse_permutation("312"), parse_permutation("312")) ==
               parse_permutation("312"),
           "join idempotent");
  t.expect(weak_interval(parse_permutation("312"), parse_permutation("312")).size() == 1,
           "one-point interval");
  t.expect(weak_interval(parse_permutation("123"), parse_permutation("321")).size() == 6,
           "full S_3 interval");
  {
    std::set<std::string> got;
    for (const Permutation& z :
         weak_interval(parse_permutation("132"), parse_permutation("321"))) {
      got.insert(to_text(z));
    }
    t.expect(got == std::set<std::string>{"1,3,2", "3,1,2", "3,2,1"}, "interval [132,321]");
  }
}

void check_weak_lattice_brute(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int n = 1; n <= b; ++n) {
    const BitPoset p = build_bit_poset(n);
    const std::size_t count = p.elems.size();
    std::vector<std::uint64_t> meet_set(p.words);
    std::vector<std::uint64_t> join_set(p.words);
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i; j < count; ++j) {
        for (std::size_t w = 0; w < p.words; ++w) {
          join_set[w] = p.up[i][w] & p.up[j][w];
          meet_set[w] = p.down[i][w] & p.down[j][w];
        }
        const auto bj = principal_extreme(p.up, join_set);
        const auto bm = principal_extreme(p.down, meet_set);
        t.cases += 2;
        if (!bj || weak_join(p.elems[i], p.elems[j]) != p.elems[*bj]) {
          t.fail("join disagrees with brute force at " + to_text(p.elems[i]) + ", " +
                 to_text(p.elems[j]));
          return;
        }
        if (!bm || weak_meet(p.elems[i], p.elems[j]) != p.elems[*bm]) {
          t.fail("meet disagrees with brute force at " + to_text(p.elems[i]) + ", " +
                 to_text(p.elems[j]));
          return;
        }
      }
    }
  }
}

void check_standardize_embed(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 5);
  for (int p = 0; p <= b; ++p) {
    const int ambient = p + 3;
    for (const Permutation& x : all_permutations(p)) {
      bool bad = false;
      for_each_combination(ambient, p, [&](const std::vector<int>& chosen) {
        const IndexSet tset(chosen.begin(), chosen.end());
        ++t.cases;
        if (standardize(embed(x, tset)) != x) bad = true;
      });
      if (bad) {
        t.fail("standardize(embed) is not the identity at " + to_text(x));
        return;
      }
    }
  }
  for (int n = 1; n <= cap(o, 6); ++n) {
    std::set<InversionSet> seen;
    for (const Permutation& x : all_permutations(n)) {
      ++t.cases;
      if (!seen.insert(inversion_set(x)).second) {
        t.fail("inversion sets collide at " + to_text(x));
        return;
      }
    }
  }
}

void check_concat_join_meet(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 5);
  for (int p = 0; p <= b; ++p) {
    for (int q = 0; p + q <= b; ++q) {
      const int n = p + q;
      const std::vector<Permutation> xs = all_permutations(p);
      const std::vector<Permutation> ys = all_permutations(q);
      bool bad = false;
      std::string where;
      for_each_combination(n, p, [&](const std::vector<int>& chosen) {
        if (bad) return;
        const IndexSet tset(chosen.begin(), chosen.end());
        const IndexSet cset = complement_in(tset, n);
        for (const Permutation& x1 : xs) {
          for (const Permutation& x2 : xs) {
            const Permutation jx = weak_join(x1, x2);
            const Permutation mx = weak_meet(x1, x2);
            for (const Permutation& y1 : ys) {
              for (const Permutation& y2 : ys) {
                const Permutation z1 = as_permutation(concat(embed(x1, tset), embed(y1, cset)));
                const Permutation z2 = as_permutation(concat(embed(x2, tset), embed(y2, cset)));
                const Permutation jy = weak_join(y1, y2);
                const Permutation my = weak_meet(y1, y2);
                ++t.cases;
                if (weak_join(z1, z2) !=
                        as_permutation(concat(embed(jx, tset), embed(jy, cset))) ||
                    weak_meet(z1, z2) !=
                        as_permutation(concat(embed(mx, tset), embed(my, cset)))) {
                  bad = true;
                  where = to_text(z1) + " with " + to_text(z2);
                  return;
                }
              }
            }
          }
        }
      });
      if (bad) {
        t.fail("componentwise join/meet broken at " + where);
        return;
      }
    }
  }
}

void check_shuffles_interval(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int p = 0; p <= b; ++p) {
    for (int q = 0; p + q <= b; ++q) {
      for (const Permutation& x : all_permutations(p)) {
        for (const Permutation& y : all_permutations(q)) {
          const std::vector<Permutation> shuffles = shifted_shuffles(x, y);
          ++t.cases;
          if (shuffles.size() != binomial(p + q, p)) {
            t.fail("shuffle count wrong for " + to_text(x) + ", " + to_text(y));
            return;
          }
          const Word yshift = embed(y, complement_in(full_set(p), p + q));
          const Permutation lo = as_permutation(concat(x, yshift));
          const Permutation hi = as_permutation(concat(yshift, x));
          std::vector<Permutation> interval = weak_interval(lo, hi);
          std::vector<Permutation> sorted = shuffles;
          std::sort(sorted.begin(), sorted.end());
          ++t.cases;
          if (sorted != interval) {
            t.fail("shuffles differ from the interval for " + to_text(x) + ", " + to_text(y));
            return;
          }
        }
      }
    }
  }
}

void check_projection_examples(const VerifyOptions&, Tally& t) {
  const auto inst231 = find_pattern_instance(parse_permutation("231"), pell());
  t.expect(inst231 && inst231->first == 2 && inst231->second == 3, "instance in 231");
  const auto inst4123 = find_pattern_instance(parse_permutation("4123"), pell());
  t.expect(inst4123 && inst4123->first == 1 && inst4123->second == 2, "instance in 4123");
  t.expect(!find_pattern_instance(parse_permutation("1234"), pell()).has_value(),
           "identity has no instance");
  t.expect(avoids(parse_permutation("653124"), pell()), "653124 avoids");
  t.expect(!avoids(parse_permutation("231"), pell()), "231 does not avoid");
  t.expect_text(to_text(pi_down(parse_permutation("231"), pell())), "2,1,3", "pi_down(231)");
  t.expect_text(to_text(pi_down(parse_permutation("4123"), pell())), "1,4,2,3", "pi_down(4123)");
  t.expect_text(to_text(pi_up(parse_permutation("213"), pell())), "2,3,1", "pi_up(213)");
  t.expect_text(to_text(pi_up(parse_permutation("321"), pell())), "3,2,1", "pi_up(321)");
  t.expect(pi_down(pi_up(parse_permutation("1423"), pell()), pell()) ==
               parse_permutation("1423"),
           "pi_down(pi_up(1423))");
  {
    std::set<std::string> got;
    for (const Permutation& z : congruence_class(parse_permutation("213"), pell())) {
      got.insert(to_text(z));
    }
    t.expect(got == std::set<std::string>{"2,1,3", "2,3,1"}, "class of 213");
  }
  t.expect(congruence_class(parse_permutation("132"), pell()).size() == 1, "class of 132");
  t.expect(congruence_class(parse_permutation("1234"), pell()).size() == 1,
           "class of the identity");
  t.expect(enumerate_avoiders(0, pell()).size() == 1, "one empty avoider");
  t.expect(enumerate_avoiders(3, pell()).size() == 5, "five avoiders of size 3");
  t.expect(enumerate_avoiders(4, pell()).size() == 12, "twelve avoiders of size 4");
  t.expect_text(to_text(pell()), "2(31),(41)23", "pell system text");
  t.expect(parse_congruence_system("pell") == pell(), "preset parse");
}

void check_projection_properties(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 7);
  for (int n = 0; n <= b; ++n) {
    for (const Permutation& x : all_permutations(n)) {
      const Permutation down = pi_down(x, pell());
      const Permutation up = pi_up(x, pell());
      ++t.cases;
      if (!avoids(down, pell()) || pi_down(down, pell()) != down || !weak_leq(down, x) ||
          pi_up(up, pell()) != up || !weak_leq(x, up) || pi_up(down, pell()) != up ||
          pi_down(up, pell()) != down) {
        t.fail("projection properties broken at " + to_text(x));
        return;
      }
      for (const Permutation& y : weak_covers_up(x)) {
        ++t.cases;
        if (!weak_leq(pi_down(x, pell()), pi_down(y, pell())) ||
            !weak_leq(pi_up(x, pell()), pi_up(y, pell()))) {
          t.fail("projections are not order-preserving at the cover " + to_text(x) + " < " +
                 to_text(y));
          return;
        }
      }
    }
  }
}

void check_confluence(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int n = 0; n <= b; ++n) {
    std::map<Permutation, Permutation> normal;
    bool bad = false;
    std::string where;
    std::function<Permutation(const Permutation&)> nf = [&](const Permutation& x) {
      const auto it = normal.find(x);
      if (it != normal.end()) return it->second;
      const std::vector<int> sites = instance_descents(x, pell());
      Permutation result = x;
      if (!sites.empty()) {
        std::optional<Permutation> agreed;
        for (const int d : sites) {
          const Permutation r = nf(swap_at(x, d));
          if (!agreed) {
            agreed = r;
          } else if (*agreed != r && !bad) {
            bad = true;
            where = to_text(x);
          }
        }
        result = *agreed;
      }
      normal.emplace(x, result);
      return result;
    };
    for (const Permutation& x : all_permutations(n)) {
      ++t.cases;
      if (nf(x) != pi_down(x, pell()) || bad) {
        t.fail("rewriting is not confluent at " + (bad ? where : to_text(x)));
        return;
      }
    }
  }
}

void check_sigma_fibers(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 7);
  for (int n = 0; n <= b; ++n) {
    std::map<Permutation, Sash> bottom_to_sash;
    std::map<Sash, Permutation> sash_to_bottom;
    std::map<Permutation, std::vector<Permutation>> fibers;
    for (const Permutation& x : all_permutations(n)) {
      const Permutation down = pi_down(x, pell());
      const Sash s = sigma(x);
      ++t.cases;
      if (sigma(down) != s) {
        t.fail("sigma differs across a fiber at " + to_text(x));
        return;
      }
      const auto [it1, fresh1] = bottom_to_sash.emplace(down, s);
      if (!fresh1 && it1->second != s) {
        t.fail("one fiber maps to two sashes at " + to_text(x));
        return;
      }
      const auto [it2, fresh2] = sash_to_bottom.emplace(s, down);
      if (!fresh2 && it2->second != down) {
        t.fail("two fibers map to one sash at " + to_text(x));
        return;
      }
      fibers[down].push_back(x);
    }
    for (auto& [z, fiber] : fibers) {
      std::sort(fiber.begin(), fiber.end());
      std::vector<Permutation> cls = congruence_class(z, pell());
      std::sort(cls.begin(), cls.end());
      ++t.cases;
      if (fiber != cls) {
        t.fail("fiber differs from the interval [down, up] at " + to_text(z));
        return;
      }
    }
    ++t.cases;
    if (fibers.size() != enumerate_avoiders(n, pell()).size()) {
      t.fail("fiber count differs from the avoider count at n=" + std::to_string(n));
      return;
    }
  }
}

void check_lattice_homomorphism(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 5);
  for (int n = 1; n <= b; ++n) {
    const std::vector<Permutation> avoiders = enumerate_avoiders(n, pell());
    auto av_extreme = [&](const Permutation& a, const Permutation& c,
                          bool join) -> std::optional<Permutation> {
      std::vector<Permutation> candidates;
      for (const Permutation& u : avoiders) {
        if (join ? (weak_leq(a, u) && weak_leq(c, u)) : (weak_leq(u, a) && weak_leq(u, c))) {
          candidates.push_back(u);
        }
      }
      for (const Permutation& m : candidates) {
        bool extreme = true;
        for (const Permutation& u : candidates) {
          if (join ? !weak_leq(m, u) : !weak_leq(u, m)) {
            extreme = false;
            break;
          }
        }
        if (extreme) return m;
      }
      return std::nullopt;
    };
    for (const Permutation& x : all_permutations(n)) {
      const Permutation dx = pi_down(x, pell());
      for (const Permutation& y : all_permutations(n)) {
        const Permutation dy = pi_down(y, pell());
        const auto aj = av_extreme(dx, dy, true);
        const auto am = av_extreme(dx, dy, false);
        ++t.cases;
        if (!aj || !am || pi_down(weak_join(x, y), pell()) != *aj ||
            pi_down(weak_meet(x, y), pell()) != *am) {
          t.fail("quotient join/meet broken at " + to_text(x) + ", " + to_text(y));
          return;
        }
      }
    }
  }
}

void check_cover_bijection(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 5);
  for (int n = 1; n <= b; ++n) {
    const std::vector<Permutation> avoiders = enumerate_avoiders(n, pell());
    for (const Permutation& z : avoiders) {
      std::set<Permutation> images;
      const std::vector<Permutation> below = weak_covers_down(z);
      for (const Permutation& y : below) images.insert(pi_down(y, pell()));
      std::set<Permutation> av_covers;
      for (const Permutation& a : avoiders) {
        if (a == z || !weak_leq(a, z)) continue;
        bool covered = true;
        for (const Permutation& m : avoiders) {
          if (m == a || m == z) continue;
          if (weak_leq(a, m) && weak_leq(m, z)) {
            covered = false;
            break;
          }
        }
        if (covered) av_covers.insert(a);
      }
      ++t.cases;
      if (images.size() != below.size() || images != av_covers) {
        t.fail("cover correspondence broken below " + to_text(z));
        return;
      }
    }
  }
}

void check_good_sets(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int n = 1; n <= b; ++n) {
    for (const Permutation& z : enumerate_avoiders(n, pell())) {
      const std::vector<Permutation> cls = congruence_class(z, pell());
      std::set<IndexSet> expected;
      for (const Permutation& member : cls) {
        for (int k = 0; k <= n; ++k) expected.insert(prefix_values(member, k));
      }
      const std::vector<IndexSet> good = good_sets(z, pell());
      const std::set<IndexSet> got(good.begin(), good.end());
      ++t.cases;
      if (got != expected || got.size() != good.size() || got.count(IndexSet{}) == 0 ||
          got.count(full_set(n)) == 0) {
        t.fail("good sets wrong for " + to_text(z));
        return;
      }
      for (const IndexSet& tset : good) {
        const auto [zmin, zmax] = zmin_zmax(z, tset, pell());
        const int k = static_cast<int>(tset.size());
        std::vector<Permutation> hits;
        for (const Permutation& member : cls) {
          if (prefix_values(member, k) == tset) hits.push_back(member);
        }
        bool ok = !hits.empty() && prefix_values(zmin, k) == tset &&
                  prefix_values(zmax, k) == tset;
        for (const Permutation& h : hits) {
          ok = ok && weak_leq(zmin, h) && weak_leq(h, zmax);
        }
        ++t.cases;
        if (!ok) {
          t.fail("prefix extremes wrong for " + to_text(z) + " at " + to_text(tset));
          return;
        }
      }
    }
  }
}

void check_convexity_random(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  if (b < 2) return;
  std::mt19937 rng(o.seed);
  auto rand_int = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto rand_perm = [&](int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(e.begin(), e.end(), rng);
    return Permutation(std::move(e));
  };
  auto walk_up = [&](Permutation x, int steps) {
    for (int s = 0; s < steps; ++s) {
      const std::vector<Permutation> ups = weak_covers_up(x);
      if (ups.empty()) break;
      x = ups[static_cast<std::size_t>(rand_int(0, static_cast<int>(ups.size()) - 1))];
    }
    return x;
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const int p = rand_int(1, b - 1);
    const int q = rand_int(1, b - p);
    const int n = p + q;
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(labels.begin(), labels.end(), rng);
    const IndexSet tset(labels.begin(), labels.begin() + p);
    const IndexSet cset = complement_in(tset, n);
    const Permutation x1 = rand_perm(p);
    const Permutation x2 = walk_up(x1, rand_int(0, 2));
    const Permutation x3 = walk_up(x2, rand_int(0, 2));
    const Permutation y1 = rand_perm(q);
    const Permutation y2 = walk_up(y1, rand_int(0, 2));
    const Permutation y3 = walk_up(y2, rand_int(0, 2));
    const Permutation e1 =
        pi_down(as_permutation(concat(embed(x1, tset), embed(y1, cset))), pell());
    const Permutation e3 =
        pi_down(as_permutation(concat(embed(x3, tset), embed(y3, cset))), pell());
    if (e1 != e3) continue;
    const Permutation e2 =
        pi_down(as_permutation(concat(embed(x2, tset), embed(y2, cset))), pell());
    ++t.cases;
    if (e2 != e1) {
      t.fail("projection is not constant along the chain at " + to_text(x2) + " / " +
             to_text(y2));
      return;
    }
  }
  t.detail = std::to_string(t.cases) + " sandwiched chains hit the equal-endpoint premise";
}

void check_av_consistency(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int n = 0; n <= b; ++n) {
    for (const Permutation& z : enumerate_avoiders(n, pell())) {
      const PermElement cz = c_map(PermElement::basis(z), pell());
      ++t.cases;
      if (r_map(cz, pell()) != PermElement::basis(z)) {
        t.fail("r(c(z)) differs from z at " + to_text(z));
        return;
      }
      Int size = 0;
      for (const auto& [member, c] : cz.terms()) {
        size += c;
        ++t.cases;
        if (c != 1 || pi_down(member, pell()) != z) {
          t.fail("class sum wrong at " + to_text(z));
          return;
        }
      }
      if (size != Int(static_cast<long long>(congruence_class(z, pell()).size()))) {
        t.fail("class sum size wrong at " + to_text(z));
        return;
      }
      for (const auto& [k, c] : av_dual_coproduct(z, pell()).terms()) {
        ++t.cases;
        if (!avoids(k.first, pell()) || !avoids(k.second, pell())) {
          t.fail("dual coproduct factor fails to avoid at " + to_text(z));
          return;
        }
      }
      for (const auto& [k, c] : av_coproduct(z, pell()).terms()) {
        ++t.cases;
        if (!avoids(k.first, pell()) || !avoids(k.second, pell())) {
          t.fail("coproduct factor fails to avoid at " + to_text(z));
          return;
        }
      }
    }
  }
  for (int p = 0; p <= b; ++p) {
    for (int q = 0; p + q <= b; ++q) {
      for (const Permutation& x : enumerate_avoiders(p, pell())) {
        for (const Permutation& y : enumerate_avoiders(q, pell())) {
          // av_product itself asserts that the filtered-shuffle route matches
          // the interval route, so evaluating it is the check.
          const PermElement prod = av_product(x, y, pell());
          for (const auto& [z, c] : prod.terms()) {
            ++t.cases;
            if (!avoids(z, pell())) {
              t.fail("product term fails to avoid at " + to_text(x) + " * " + to_text(y));
              return;
            }
          }
        }
      }
    }
  }
}

void check_av_examples(const VerifyOptions&, Tally& t) {
  t.expect_text(to_text(r_map(parse_perm_element_local("2,1,3 + 2,3,1"), pell())), "2,1,3",
                "r(213+231)");
  t.expect_text(to_text(c_map(PermElement::basis(parse_permutation("213")), pell())),
                "2,1,3 + 2,3,1", "c(213)");
  t.expect_text(to_text(av_product(parse_permutation("1"), parse_permutation("1"), pell())),
                "1,2 + 2,1", "av product 1*1");
  t.expect_text(to_text(av_product(Permutation(), parse_permutation("312"), pell())), "3,1,2",
                "av product with the empty permutation");
  t.expect_text(to_text(av_coproduct(parse_permutation("1"), pell())),
                "[()](x)[1] + [1](x)[()]", "av coproduct of 1");
  t.expect_text(to_text(av_coproduct(parse_permutation("132"), pell())),
                "[()](x)[1,3,2] + [1](x)[2,1] + [1,2](x)[1] + [1,3,2](x)[()]",
                "av coproduct of 132");
  t.expect_text(to_text(av_coproduct(parse_permutation("213"), pell())),
                "[()](x)[2,1,3] + [1](x)[1,2] + [1](x)[2,1] + [1,2](x)[1] + [2,1](x)[1] + "
                "[2,1,3](x)[()]",
                "av coproduct of 213");
  t.expect_text(to_text(av_dual_product(parse_permutation("1"), parse_permutation("1"), pell())),
                "1,2 + 2,1", "av dual product 1*1");
  t.expect_text(
      to_text(av_dual_product(parse_permutation("12"), parse_permutation("1"), pell())),
      "1,2,3 + 1,3,2 + 3,1,2", "av dual product 12*1");
  t.expect_text(to_text(av_dual_coproduct(parse_permutation("312"), pell())),
                "[()](x)[3,1,2] + [1](x)[2,1] + [1,2](x)[1] + [3,1,2](x)[()]",
                "av dual coproduct of 312");
  {
    std::vector<std::string> got;
    for (const IndexSet& s : good_sets(parse_permutation("1"), pell())) got.push_back(to_text(s));
    t.expect(got == std::vector<std::string>{"{}", "{1}"}, "good sets of 1");
  }
  {
    std::vector<std::string> got;
    for (const IndexSet& s : good_sets(parse_permutation("213"), pell())) {
      got.push_back(to_text(s));
    }
    t.expect(got == std::vector<std::string>{"{}", "{2}", "{1,2}", "{2,3}", "{1,2,3}"},
             "good sets of 213");
  }
  {
    std::vector<std::string> got;
    for (const IndexSet& s : good_sets(parse_permutation("132"), pell())) {
      got.push_back(to_text(s));
    }
    t.expect(got == std::vector<std::string>{"{}", "{1}", "{1,3}", "{1,2,3}"},
             "good sets of 132");
  }
  {
    const auto [zmin, zmax] = zmin_zmax(parse_permutation("213"), IndexSet{2}, pell());
    t.expect(to_text(zmin) == "2,1,3" && to_text(zmax) == "2,3,1", "extremes of 213 at {2}");
  }
  {
    const auto [zmin, zmax] = zmin_zmax(parse_permutation("132"), IndexSet{1, 3}, pell());
    t.expect(zmin == zmax && to_text(zmin) == "1,3,2", "extremes of 132 at {1,3}");
  }
  t.expect_text(
      to_text(sigma_image(av_product(parse_permutation("3124"), parse_permutation("21"), pell()))),
      "rbbw + rbr + rbww + rrw", "sash image of the 3124 * 21 product");
}

// ---------------------------------------------------------------------------
// intrinsic-vs-extrinsic suite
// ---------------------------------------------------------------------------

void check_product_extrinsic(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 7);
  for (int ga = 0; ga <= b; ++ga) {
    for (int gb = 0; ga + gb <= b; ++gb) {
      for (const Sash& a : sashes_of_grade(ga)) {
        for (const Sash& c : sashes_of_grade(gb)) {
          const SashElement lhs = sash_product(a, c);
          const SashElement rhs = sigma_image(av_product(eta(a), eta(c), pell()));
          ++t.cases;
          if (lhs != rhs) {
            t.fail("product mismatch at " + to_text(a) + " * " + to_text(c) + ": intrinsic " +
                   to_text(lhs) + ", extrinsic " + to_text(rhs));
            return;
          }
        }
      }
    }
  }
}

void check_coproduct_extrinsic(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 7);
  for (int g = 0; g <= b; ++g) {
    for (const Sash& c : sashes_of_grade(g)) {
      const SashTensor lhs = sash_coproduct(c);
      const SashTensor rhs = sigma_image(av_coproduct(eta(c), pell()));
      ++t.cases;
      if (lhs != rhs) {
        t.fail("coproduct mismatch at " + to_text(c) + ": intrinsic " + to_text(lhs) +
               ", extrinsic " + to_text(rhs));
        return;
      }
    }
  }
}

void check_gamma_termwise(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 7);
  for (int gd = 0; gd <= b; ++gd) {
    for (int ge = 0; gd + ge <= b; ++ge) {
      const int n = gd + ge;
      for (const Sash& d : sashes_of_grade(gd)) {
        const Permutation pd = eta(d);
        for (const Sash& e : sashes_of_grade(ge)) {
          const Permutation pe = eta(e);
          bool bad = false;
          std::string where;
          for_each_combination(n, gd, [&](const std::vector<int>& chosen) {
            if (bad) return;
            const IndexSet tset(chosen.begin(), chosen.end());
            const Sash walk = dual_product_term(d, e, tset);
            const Sash oracle =
                sigma(concat(embed(pd, tset), embed(pe, complement_in(tset, n))));
            ++t.cases;
            if (walk != oracle) {
              bad = true;
              where = to_text(d) + " (x) " + to_text(e) + " at " + to_text(tset) + ": walk " +
                      to_text(walk) + ", relabeled-concat image " + to_text(oracle);
            }
          });
          if (bad) {
            t.fail("arrow walk mismatch at " + where);
            return;
          }
          const SashElement full = sash_dual_product(d, e);
          const SashElement oracle = sigma_image(av_dual_product(pd, pe, pell()));
          ++t.cases;
          if (full != oracle) {
            t.fail("dual product mismatch at " + to_text(d) + " (x) " + to_text(e));
            return;
          }
        }
      }
    }
  }
}

void check_dual_coproduct_extrinsic(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 8);
  for (int g = 0; g <= b; ++g) {
    for (const Sash& c : sashes_of_grade(g)) {
      const SashTensor lhs = sash_dual_coproduct(c);
      const SashTensor rhs = sigma_image(mr_dual_coproduct(eta(c)));
      ++t.cases;
      if (lhs != rhs) {
        t.fail("dual coproduct mismatch at " + to_text(c) + ": intrinsic " + to_text(lhs) +
               ", extrinsic " + to_text(rhs));
        return;
      }
    }
  }
}

void check_coproduct_interval_theorem(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int n = 0; n <= b; ++n) {
    for (const Permutation& z : enumerate_avoiders(n, pell())) {
      ++t.cases;
      if (coproduct_via_intervals(z, pell()) != av_coproduct(z, pell())) {
        t.fail("interval coproduct differs at " + to_text(z));
        return;
      }
      for (const IndexSet& tset : good_sets(z, pell())) {
        const int p = static_cast<int>(tset.size());
        const IndexSet cset = complement_in(tset, n);
        const auto [zmin, zmax] = zmin_zmax(z, tset, pell());
        const std::vector<Permutation> left =
            av_interval(standardize(restrict_to(zmin, tset)),
                        pi_down(standardize(restrict_to(zmax, tset)), pell()), pell());
        const std::vector<Permutation> right =
            av_interval(standardize(restrict_to(zmin, cset)),
                        pi_down(standardize(restrict_to(zmax, cset)), pell()), pell());
        std::set<std::pair<Permutation, Permutation>> block;
        for (const Permutation& x : left) {
          for (const Permutation& y : right) block.emplace(x, y);
        }
        std::set<std::pair<Permutation, Permutation>> brute;
        for (const Permutation& x : enumerate_avoiders(p, pell())) {
          for (const Permutation& y : enumerate_avoiders(n - p, pell())) {
            if (pi_down(as_permutation(concat(embed(x, tset), embed(y, cset))), pell()) == z) {
              brute.emplace(x, y);
            }
          }
        }
        ++t.cases;
        if (block != brute) {
          t.fail("per-set block differs from brute force at " + to_text(z) + ", " +
                 to_text(tset));
          return;
        }
      }
    }
  }
}

void check_dotting_block_theorem(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int n = 2; n <= b; ++n) {
    for (const Sash& c : sashes_of_grade(n)) {
      for (const Dotting& d : enumerate_allowable_dottings(c)) {
        const IndexSet tset = dotting_to_allowable_set(d);
        const int p = static_cast<int>(tset.size());
        const CoproductBlock block = coproduct_block(d);
        ++t.cases;
        if (block.left_min.grade() != p || block.right_min.grade() != n - p ||
            !sash_leq(block.left_min, block.left_max) ||
            !sash_leq(block.right_min, block.right_max)) {
          t.fail("block grades or order broken at " + to_text(d));
          return;
        }
        std::set<std::pair<Sash, Sash>> interval_terms;
        for (const Sash& l : sash_interval(block.left_min, block.left_max)) {
          for (const Sash& r : sash_interval(block.right_min, block.right_max)) {
            interval_terms.emplace(l, r);
          }
        }
        std::set<std::pair<Sash, Sash>> brute;
        for (const Sash& dd : sashes_of_grade(p)) {
          for (const Sash& ee : sashes_of_grade(n - p)) {
            if (dual_product_term(dd, ee, tset) == c) brute.emplace(dd, ee);
          }
        }
        ++t.cases;
        if (interval_terms != brute) {
          t.fail("merge preimage differs from the block at " + to_text(d));
          return;
        }
      }
    }
  }
}

void check_extremality(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int n = 2; n <= b; ++n) {
    for (const Sash& c : sashes_of_grade(n)) {
      for (const Dotting& d : enumerate_allowable_dottings(c)) {
        const CoproductForms forms = coproduct_forms(d);
        const CoproductBlock block = coproduct_block(d);
        const auto side = [&](const ExtendedSash& form, const Sash& lo, const Sash& hi,
                              const std::string& label) {
          std::set<Sash> matching;
          for (const Sash& x : sashes_of_grade(lo.grade())) {
            if (matches_form(x, form)) matching.insert(x);
          }
          const std::vector<Sash> interval = sash_interval(lo, hi);
          const std::set<Sash> interval_set(interval.begin(), interval.end());
          ++t.cases;
          if (matching != interval_set || matching.count(lo) == 0 || matching.count(hi) == 0) {
            t.fail(label + " form matches differ from the interval at " + to_text(d));
            return false;
          }
          for (const Sash& x : matching) {
            if (!sash_leq(lo, x) || !sash_leq(x, hi)) {
              t.fail(label + " extremes are not extreme at " + to_text(d));
              return false;
            }
          }
          return true;
        };
        if (!side(forms.left, block.left_min, block.left_max, "left")) return;
        if (!side(forms.right, block.right_min, block.right_max, "right")) return;
      }
    }
  }
}

void check_allowable_equals_good(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int n = 1; n <= b; ++n) {
    for (const Sash& c : sashes_of_grade(n)) {
      const std::vector<IndexSet> allow = allowable_sets(c);
      std::set<IndexSet> got(allow.begin(), allow.end());
      ++t.cases;
      if (got.size() != allow.size()) {
        t.fail("two dottings share one set at " + to_text(c));
        return;
      }
      got.insert(IndexSet{});
      got.insert(full_set(n));
      const std::vector<IndexSet> good = good_sets(eta(c), pell());
      const std::set<IndexSet> want(good.begin(), good.end());
      ++t.cases;
      if (got != want) {
        t.fail("allowable sets plus trivial sets differ from good sets at " + to_text(c));
        return;
      }
      if (n >= 2) {
        for (const Dotting& d : enumerate_allowable_dottings(c)) {
          ++t.cases;
          if (!(allowable_set_to_dotting(c, dotting_to_allowable_set(d)) == d)) {
            t.fail("set/dotting round trip broken at " + to_text(d));
            return;
          }
        }
      }
    }
  }
}

void check_tau_sections(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int n = 1; n <= b; ++n) {
    for (const Sash& c : sashes_of_grade(n)) {
      for (const IndexSet& tset : allowable_sets(c)) {
        const Permutation w = tau(c, tset);
        ++t.cases;
        if (sigma(w) != c || prefix_values(w, static_cast<int>(tset.size())) != tset) {
          t.fail("tau section broken at " + to_text(c) + ", " + to_text(tset));
          return;
        }
      }
    }
  }
  t.expect_text(to_text(tau(parse_sash("brwwbw"), parse_index_set("{1,4,5,6,8}"))),
                "1,6,5,4,8,2,3,7", "tau(brwwbw, {1,4,5,6,8})");
  t.expect_text(to_text(tau(parse_sash("rbw"), parse_index_set("{3,4,5}"))), "3,5,4,1,2",
                "tau(rbw, {3,4,5})");
  t.expect_text(to_text(tau(parse_sash("b"), parse_index_set("{1}"))), "1,2", "tau(b, {1})");
}

void check_golden_examples(const VerifyOptions&, Tally& t) {
  t.expect_text(to_text(sash_product(parse_sash("rb"), parse_sash("w"))),
                "rbbw + rbr + rbww + rrw", "product rb * w");
  t.expect_text(to_text(sash_product(parse_sash("e"), parse_sash("e"))), "b + w",
                "product e * e");
  t.expect_text(to_text(sash_product(parse_sash("b"), parse_sash("e"))), "bb + bw + r",
                "product b * e");
  t.expect_text(to_text(sash_product(parse_sash("u"), parse_sash("rbw"))), "rbw",
                "left unit");
  t.expect_text(to_text(sash_product(parse_sash("rbw"), parse_sash("u"))), "rbw",
                "right unit");
  t.expect_text(to_text(dual_product_term(parse_sash("rbrwb"), parse_sash("wrbww"),
                                          parse_index_set("{1,2,4,7,8,9,12,13}"))),
                "brbrrbrbbw", "arrow walk on the worked pair");
  t.expect_text(to_text(dual_product_term(parse_sash("e"), parse_sash("e"), IndexSet{2})), "w",
                "single right-to-left arrow");
  t.expect_text(to_text(sash_dual_product(parse_sash("e"), parse_sash("e"))), "b + w",
                "dual product e (x) e");
  t.expect_text(to_text(sash_dual_product(parse_sash("b"), parse_sash("e"))), "bb + bw + wb",
                "dual product b (x) e");
  t.expect_text(to_text(sash_dual_product(parse_sash("u"), parse_sash("rb"))), "rb",
                "dual product unit");
  t.expect_text(to_text(sash_coproduct(parse_sash("e"))), "[u](x)[e] + [e](x)[u]",
                "coproduct of e");
  t.expect_text(to_text(sash_coproduct(parse_sash("b"))),
                "[u](x)[b] + [e](x)[e] + [b](x)[u]", "coproduct of b");
  t.expect_text(to_text(sash_coproduct(parse_sash("bw"))),
                "[u](x)[bw] + [e](x)[w] + [b](x)[e] + [bw](x)[u]", "coproduct of bw");
  t.expect_text(to_text(sash_dual_coproduct(parse_sash("r"))),
                "[u](x)[r] + [e](x)[w] + [b](x)[e] + [r](x)[u]", "dual coproduct of r");
  t.expect_text(to_text(sash_dual_coproduct(parse_sash("bw"))),
                "[u](x)[bw] + [e](x)[w] + [b](x)[e] + [bw](x)[u]", "dual coproduct of bw");
  t.expect_text(to_text(sash_dual_coproduct(parse_sash("e"))), "[u](x)[e] + [e](x)[u]",
                "dual coproduct of e");

  const Dotting worked = parse_dotting("bbwwwrbwwrbbrbw@2,4,6,7,8,9,14,16,17,18");
  const DottingDecomposition dec = decompose_dotting(worked);
  std::string segs;
  for (const Sash& s : dec.segments) {
    if (!segs.empty()) segs += " ";
    segs += to_text(s);
  }
  t.expect_text(segs, "b w w e e e wrb b e e e", "segments of the worked dotting");
  const CoproductForms forms = coproduct_forms(worked);
  t.expect_text(to_text(forms.left), "b?wWBwrb?B", "left form of the worked dotting");
  t.expect_text(to_text(forms.right), "w???b?", "right form of the worked dotting");
  const CoproductBlock block = coproduct_block(worked);
  t.expect_text(to_text(block.left_min), "bbwwbwrbbb", "left minimum of the worked dotting");
  t.expect_text(to_text(block.left_max), "rwwrrrb", "left maximum of the worked dotting");
  t.expect_text(to_text(block.right_min), "wbbbbb", "right minimum of the worked dotting");
  t.expect_text(to_text(block.right_max), "wwwwr", "right maximum of the worked dotting");

  const std::vector<Dotting> dots = enumerate_allowable_dottings(parse_sash("rbw"));
  std::vector<std::string> dot_texts;
  for (const Dotting& d : dots) dot_texts.push_back(to_text(d));
  const std::vector<std::string> want_dots = {"rbw@2",     "rbw@3",     "rbw@1,2",
                                              "rbw@2,3",   "rbw@3,4",   "rbw@1,2,3",
                                              "rbw@2,3,4", "rbw@1,2,3,4"};
  t.expect(dot_texts == want_dots, "the eight dottings of rbw");
  std::vector<std::string> set_texts;
  for (const IndexSet& s : allowable_sets(parse_sash("rbw"))) set_texts.push_back(to_text(s));
  const std::vector<std::string> want_sets = {"{3,4,5}", "{1,2,3}", "{1,3,4,5}", "{3}",
                                              "{1,2,3,5}", "{1,3}", "{3,5}", "{1,3,5}"};
  t.expect(set_texts == want_sets, "the eight allowable sets of rbw");
  t.expect(dotting_to_allowable_set(parse_dotting("brwwbw@1,3,6,7")) ==
               parse_index_set("{1,4,5,6,8}"),
           "worked allowable set");
  t.expect(allowable_set_to_dotting(parse_sash("brwwbw"), parse_index_set("{1,4,5,6,8}")) ==
               parse_dotting("brwwbw@1,3,6,7"),
           "worked set back to dots");
  t.expect(allowable_sets(parse_sash("e")).empty(), "e has no allowable sets");
  {
    const std::vector<IndexSet> bsets = allowable_sets(parse_sash("b"));
    t.expect(bsets.size() == 1 && bsets[0] == IndexSet{1}, "allowable sets of b");
  }
  t.expect(matches_form(parse_sash("b"), parse_extended_sash("?")), "mystery accepts black");
  t.expect(!matches_form(parse_sash("w"), parse_extended_sash("B")),
           "black-plus rejects white");
  t.expect(matches_form(parse_sash("r"), parse_extended_sash("B?")),
           "black-plus fuses with a mystery");
  t.expect(!matches_form(Sash::unit(), parse_extended_sash("e")), "the unit matches no form");
}

void check_grading(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 5);
  for (int p = 0; p <= b; ++p) {
    for (int q = 0; p + q <= b; ++q) {
      for (const Permutation& x : all_permutations(p)) {
        for (const Permutation& y : all_permutations(q)) {
          for (const auto& [z, c] : mr_product(x, y).terms()) {
            ++t.cases;
            if (z.size() != p + q) {
              t.fail("product grade broken at " + to_text(x) + " * " + to_text(y));
              return;
            }
          }
        }
      }
      for (const Sash& a : sashes_of_grade(p)) {
        for (const Sash& c : sashes_of_grade(q)) {
          for (const auto& [z, k] : sash_product(a, c).terms()) {
            ++t.cases;
            if (z.grade() != p + q) {
              t.fail("sash product grade broken at " + to_text(a) + " * " + to_text(c));
              return;
            }
          }
          for (const auto& [key, k] : sash_dual_product(a, c).terms()) {
            ++t.cases;
            if (key.grade() != p + q) {
              t.fail("sash dual product grade broken at " + to_text(a) + " * " + to_text(c));
              return;
            }
          }
        }
      }
    }
  }
  for (int n = 0; n <= b; ++n) {
    for (const Permutation& z : all_permutations(n)) {
      for (const auto& [k, c] : mr_coproduct(z).terms()) {
        ++t.cases;
        if (k.first.size() + k.second.size() != n) {
          t.fail("coproduct grades broken at " + to_text(z));
          return;
        }
      }
      for (const auto& [k, c] : mr_dual_coproduct(z).terms()) {
        ++t.cases;
        if (k.first.size() + k.second.size() != n) {
          t.fail("dual coproduct grades broken at " + to_text(z));
          return;
        }
      }
    }
    for (const Sash& c : sashes_of_grade(n)) {
      for (const auto& [k, v] : sash_coproduct(c).terms()) {
        ++t.cases;
        if (k.first.grade() + k.second.grade() != n) {
          t.fail("sash coproduct grades broken at " + to_text(c));
          return;
        }
      }
      for (const auto& [k, v] : sash_dual_coproduct(c).terms()) {
        ++t.cases;
        if (k.first.grade() + k.second.grade() != n) {
          t.fail("sash dual coproduct grades broken at " + to_text(c));
          return;
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// hopf-axioms suite
// ---------------------------------------------------------------------------

void check_mr_examples(const VerifyOptions&, Tally& t) {
  t.expect_text(to_text(mr_product(parse_permutation("1"), parse_permutation("1"))),
                "1,2 + 2,1", "product 1 * 1");
  t.expect_text(to_text(mr_product(Permutation(), parse_permutation("312"))), "3,1,2",
                "product with the empty permutation");
  t.expect_text(to_text(mr_product(parse_permutation("12"), parse_permutation("1"))),
                "1,2,3 + 1,3,2 + 3,1,2", "product 12 * 1");
  t.expect_text(to_text(mr_coproduct(parse_permutation("1"))), "[()](x)[1] + [1](x)[()]",
                "coproduct of 1");
  t.expect_text(to_text(mr_coproduct(parse_permutation("21"))),
                "[()](x)[2,1] + [1](x)[1] + [2,1](x)[()]", "coproduct of 21");
  t.expect_text(to_text(mr_coproduct(parse_permutation("312"))),
                "[()](x)[3,1,2] + [1](x)[1,2] + [2,1](x)[1] + [3,1,2](x)[()]",
                "coproduct of 312");
  t.expect_text(to_text(mr_dual_product(parse_permutation("1"), parse_permutation("1"))),
                "1,2 + 2,1", "dual product 1 (x) 1");
  t.expect_text(to_text(mr_dual_product(Permutation(), parse_permutation("312"))), "3,1,2",
                "dual product with the empty permutation");
  t.expect_text(to_text(mr_dual_coproduct(parse_permutation("1"))), "[()](x)[1] + [1](x)[()]",
                "dual coproduct of 1");
  t.expect_text(to_text(mr_dual_coproduct(parse_permutation("312"))),
                "[()](x)[3,1,2] + [1](x)[2,1] + [1,2](x)[1] + [3,1,2](x)[()]",
                "dual coproduct of 312");
  t.expect_text(to_text(inv_map(PermElement::basis(parse_permutation("312")))), "2,3,1",
                "inverse map on 312");
  {
    PermElement e;
    e.add(parse_permutation("12"), 2);
    e.add(parse_permutation("21"), 1);
    t.expect(inv_map(e) == e, "inverse map fixes 2*12 + 21");
    t.expect(inv_map(inv_map(e)) == e, "inverse map is an involution");
    PermElement f;
    f.add(parse_permutation("21"), 3);
    t.expect(pairing(e, f) == Int(3), "pairing of mixed elements");
  }
  t.expect(pairing(PermElement::basis(parse_permutation("12")),
                   PermElement::basis(parse_permutation("12"))) == Int(1),
           "pairing of a basis element with itself");
  t.expect(pairing(PermElement::basis(parse_permutation("12")),
                   PermElement::basis(parse_permutation("21"))) == Int(0),
           "pairing of distinct basis elements");
}

void check_mr_unit_counit(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  const Permutation unit;
  for (int n = 0; n <= b; ++n) {
    for (const Permutation& z : all_permutations(n)) {
      const PermTensor cop = mr_coproduct(z);
      ++t.cases;
      if (mr_product(unit, z) != PermElement::basis(z) ||
          mr_product(z, unit) != PermElement::basis(z) || cop.coefficient(unit, z) != 1 ||
          cop.coefficient(z, unit) != 1) {
        t.fail("unit/counit broken at " + to_text(z));
        return;
      }
      PermElement left_stripped;
      PermElement right_stripped;
      for (const auto& [k, c] : cop.terms()) {
        if (k.first.size() == 0) left_stripped.add(k.second, c);
        if (k.second.size() == 0) right_stripped.add(k.first, c);
      }
      ++t.cases;
      if (left_stripped != PermElement::basis(z) || right_stripped != PermElement::basis(z)) {
        t.fail("counit slices are not the identity at " + to_text(z));
        return;
      }
    }
  }
}

void check_mr_associativity(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int p = 0; p <= b; ++p) {
    for (int q = 0; p + q <= b; ++q) {
      for (int r = 0; p + q + r <= b; ++r) {
        for (const Permutation& x : all_permutations(p)) {
          for (const Permutation& y : all_permutations(q)) {
            const PermElement xy = mr_product(x, y);
            for (const Permutation& z : all_permutations(r)) {
              ++t.cases;
              if (mr_product(xy, PermElement::basis(z)) !=
                  mr_product(PermElement::basis(x), mr_product(y, z))) {
                t.fail("associativity broken at " + to_text(x) + ", " + to_text(y) + ", " +
                       to_text(z));
                return;
              }
            }
          }
        }
      }
    }
  }
}

void check_mr_coassociativity(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int n = 0; n <= b; ++n) {
    for (const Permutation& z : all_permutations(n)) {
      std::string why;
      ++t.cases;
      if (!coassociative(z, [](const Permutation& v) { return mr_coproduct(v); }, &why)) {
        t.fail(why);
        return;
      }
    }
  }
}

void check_mr_compatibility(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 5);
  for (int p = 0; p <= b; ++p) {
    for (int q = 0; p + q <= b; ++q) {
      for (const Permutation& x : all_permutations(p)) {
        for (const Permutation& y : all_permutations(q)) {
          const PermTensor lhs = mr_coproduct(mr_product(x, y));
          const PermTensor rhs =
              tensor_multiply(mr_coproduct(x), mr_coproduct(y),
                              [](const Permutation& a, const Permutation& c) {
                                return mr_product(a, c);
                              });
          ++t.cases;
          if (lhs != rhs) {
            t.fail("compatibility broken at " + to_text(x) + ", " + to_text(y));
            return;
          }
        }
      }
    }
  }
}

void check_av_hopf_axioms(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 5);
  auto prod = [](const Permutation& x, const Permutation& y) {
    return av_product(x, y, pell());
  };
  for (int p = 0; p <= b; ++p) {
    for (int q = 0; p + q <= b; ++q) {
      for (int r = 0; p + q + r <= b; ++r) {
        for (const Permutation& x : enumerate_avoiders(p, pell())) {
          for (const Permutation& y : enumerate_avoiders(q, pell())) {
            const PermElement xy = prod(x, y);
            for (const Permutation& z : enumerate_avoiders(r, pell())) {
              ++t.cases;
              if (extend_bilinear(xy, PermElement::basis(z), prod) !=
                  extend_bilinear(PermElement::basis(x), prod(y, z), prod)) {
                t.fail("associativity broken at " + to_text(x) + ", " + to_text(y) + ", " +
                       to_text(z));
                return;
              }
            }
          }
        }
      }
      for (const Permutation& x : enumerate_avoiders(p, pell())) {
        for (const Permutation& y : enumerate_avoiders(q, pell())) {
          const PermTensor lhs = extend_linear_to_tensor(
              prod(x, y), [](const Permutation& z) { return av_coproduct(z, pell()); });
          const PermTensor rhs =
              tensor_multiply(av_coproduct(x, pell()), av_coproduct(y, pell()), prod);
          ++t.cases;
          if (lhs != rhs) {
            t.fail("compatibility broken at " + to_text(x) + ", " + to_text(y));
            return;
          }
        }
      }
    }
  }
  for (int n = 0; n <= b; ++n) {
    for (const Permutation& z : enumerate_avoiders(n, pell())) {
      std::string why;
      ++t.cases;
      if (!coassociative(z, [](const Permutation& v) { return av_coproduct(v, pell()); },
                         &why)) {
        t.fail(why);
        return;
      }
    }
  }
}

void check_sash_hopf_axioms(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 5);
  auto prod = [](const Sash& x, const Sash& y) { return sash_product(x, y); };
  for (int p = 0; p <= b; ++p) {
    for (int q = 0; p + q <= b; ++q) {
      for (int r = 0; p + q + r <= b; ++r) {
        for (const Sash& x : sashes_of_grade(p)) {
          for (const Sash& y : sashes_of_grade(q)) {
            const SashElement xy = prod(x, y);
            for (const Sash& z : sashes_of_grade(r)) {
              ++t.cases;
              if (extend_bilinear(xy, SashElement::basis(z), prod) !=
                  extend_bilinear(SashElement::basis(x), prod(y, z), prod)) {
                t.fail("associativity broken at " + to_text(x) + ", " + to_text(y) + ", " +
                       to_text(z));
                return;
              }
            }
          }
        }
      }
      for (const Sash& x : sashes_of_grade(p)) {
        for (const Sash& y : sashes_of_grade(q)) {
          const SashTensor lhs = sash_coproduct(prod(x, y));
          const SashTensor rhs = tensor_multiply(sash_coproduct(x), sash_coproduct(y), prod);
          ++t.cases;
          if (lhs != rhs) {
            t.fail("compatibility broken at " + to_text(x) + ", " + to_text(y));
            return;
          }
        }
      }
    }
  }
  for (int n = 0; n <= b; ++n) {
    for (const Sash& z : sashes_of_grade(n)) {
      std::string why;
      ++t.cases;
      if (!coassociative(z, [](const Sash& v) { return sash_coproduct(v); }, &why)) {
        t.fail(why);
        return;
      }
      const SashTensor cop = sash_coproduct(z);
      ++t.cases;
      if (sash_product(Sash::unit(), z) != SashElement::basis(z) ||
          sash_product(z, Sash::unit()) != SashElement::basis(z) ||
          cop.coefficient(Sash::unit(), z) != 1 || cop.coefficient(z, Sash::unit()) != 1) {
        t.fail("unit/counit broken at " + to_text(z));
        return;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// duality suite
// ---------------------------------------------------------------------------

void check_mr_duality(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 5);
  for (int p = 0; p <= b; ++p) {
    for (int q = 0; p + q <= b; ++q) {
      const int n = p + q;
      std::map<std::pair<Permutation, Permutation>, PermElement> products;
      std::map<std::pair<Permutation, Permutation>, PermElement> dual_products;
      for (const Permutation& x : all_permutations(p)) {
        for (const Permutation& y : all_permutations(q)) {
          products.emplace(std::make_pair(x, y), mr_product(x, y));
          dual_products.emplace(std::make_pair(x, y), mr_dual_product(x, y));
        }
      }
      for (const Permutation& z : all_permutations(n)) {
        const PermTensor dual_cop = mr_dual_coproduct(z);
        const PermTensor cop = mr_coproduct(z);
        for (const auto& [key, prod] : products) {
          ++t.cases;
          if (prod.coefficient(z) != dual_cop.coefficient(key.first, key.second)) {
            t.fail("product/dual-coproduct pairing broken at " + pair_text(key.first, key.second) +
                   " against " + to_text(z));
            return;
          }
          ++t.cases;
          if (dual_products.at(key).coefficient(z) != cop.coefficient(key.first, key.second)) {
            t.fail("dual-product/coproduct pairing broken at " + pair_text(key.first, key.second) +
                   " against " + to_text(z));
            return;
          }
        }
      }
    }
  }
}

void check_mr_inverse_transport(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 5);
  for (int p = 0; p <= b; ++p) {
    for (int q = 0; p + q <= b; ++q) {
      for (const Permutation& x : all_permutations(p)) {
        for (const Permutation& y : all_permutations(q)) {
          ++t.cases;
          if (mr_dual_product(x, y) != inv_map(mr_product(inverse(x), inverse(y)))) {
            t.fail("dual product differs from the transported product at " + to_text(x) +
                   " (x) " + to_text(y));
            return;
          }
        }
      }
    }
  }
  for (int n = 0; n <= b; ++n) {
    for (const Permutation& z : all_permutations(n)) {
      PermTensor transported;
      for (const auto& [k, c] : mr_coproduct(inverse(z)).terms()) {
        transported.add(inverse(k.first), inverse(k.second), c);
      }
      ++t.cases;
      if (mr_dual_coproduct(z) != transported) {
        t.fail("dual coproduct differs from the transported coproduct at " + to_text(z));
        return;
      }
      ++t.cases;
      if (inverse(inverse(z)) != z) {
        t.fail("inverse is not an involution at " + to_text(z));
        return;
      }
    }
  }
}

void check_av_duality(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 5);
  for (int p = 0; p <= b; ++p) {
    for (int q = 0; p + q <= b; ++q) {
      const int n = p + q;
      for (const Permutation& z : enumerate_avoiders(n, pell())) {
        const PermTensor dual_cop = av_dual_coproduct(z, pell());
        const PermTensor cop = av_coproduct(z, pell());
        for (const Permutation& x : enumerate_avoiders(p, pell())) {
          for (const Permutation& y : enumerate_avoiders(q, pell())) {
            t.cases += 2;
            if (av_product(x, y, pell()).coefficient(z) != dual_cop.coefficient(x, y)) {
              t.fail("product/dual-coproduct pairing broken at " + pair_text(x, y) +
                     " against " + to_text(z));
              return;
            }
            if (av_dual_product(x, y, pell()).coefficient(z) != cop.coefficient(x, y)) {
              t.fail("dual-product/coproduct pairing broken at " + pair_text(x, y) +
                     " against " + to_text(z));
              return;
            }
          }
        }
      }
    }
  }
}

void check_av_dual_coproduct_ambient(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int n = 0; n <= b; ++n) {
    for (const Permutation& z : enumerate_avoiders(n, pell())) {
      ++t.cases;
      if (av_dual_coproduct(z, pell()) != mr_dual_coproduct(z)) {
        t.fail("restricted dual coproduct differs from the ambient one at " + to_text(z));
        return;
      }
    }
  }
}

void check_sash_duality(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int p = 0; p <= b; ++p) {
    for (int q = 0; p + q <= b; ++q) {
      const int n = p + q;
      for (const Sash& z : sashes_of_grade(n)) {
        const SashTensor dual_cop = sash_dual_coproduct(z);
        const SashTensor cop = sash_coproduct(z);
        for (const Sash& x : sashes_of_grade(p)) {
          for (const Sash& y : sashes_of_grade(q)) {
            t.cases += 2;
            if (sash_product(x, y).coefficient(z) != dual_cop.coefficient(x, y)) {
              t.fail("product/dual-coproduct pairing broken at " + pair_text(x, y) +
                     " against " + to_text(z));
              return;
            }
            if (sash_dual_product(x, y).coefficient(z) != cop.coefficient(x, y)) {
              t.fail("dual-product/coproduct pairing broken at " + pair_text(x, y) +
                     " against " + to_text(z));
              return;
            }
          }
        }
      }
    }
  }
}

void check_sash_adjunction_membership(const VerifyOptions& o, Tally& t) {
  const int b = cap(o, 6);
  for (int p = 0; p <= b; ++p) {
    for (int q = 0; p + q <= b; ++q) {
      for (const Sash& z : sashes_of_grade(p + q)) {
        const SashTensor dual_cop = sash_dual_coproduct(z);
        for (const Sash& x : sashes_of_grade(p)) {
          for (const Sash& y : sashes_of_grade(q)) {
            const bool in_product = sash_product(x, y).coefficient(z) != 0;
            const bool in_dual = dual_cop.coefficient(x, y) != 0;
            ++t.cases;
            if (in_product != in_dual) {
              t.fail("membership adjunction broken at " + pair_text(x, y) + " against " +
                     to_text(z));
              return;
            }
          }
        }
      }
    }
  }
}

std::vector<CheckDef> make_registry() {
  std::vector<CheckDef> defs;
  defs.push_back(def("bijection", "counting-pell", check_counting));
  defs.push_back(def("bijection", "sigma-eta-roundtrip", check_roundtrip));
  defs.push_back(def("bijection", "sigma-eta-worked-examples", check_bijection_examples));
  defs.push_back(def("bijection", "avoiders-are-pell", check_avoiders_are_pell));
  defs.push_back(def("bijection", "sash-lattice-matches-weak-order", check_sash_lattice));
  defs.push_back(def("bijection", "sash-covers-golden", check_sash_covers_golden));

  defs.push_back(def("congruence", "word-examples", check_word_examples));
  defs.push_back(def("congruence", "weak-order-examples", check_weak_order_examples));
  defs.push_back(def("congruence", "weak-lattice-brute-force", check_weak_lattice_brute));
  defs.push_back(def("congruence", "standardize-embed-inverse", check_standardize_embed));
  defs.push_back(def("congruence", "concat-join-meet-lemma", check_concat_join_meet));
  defs.push_back(def("congruence", "shuffles-equal-interval", check_shuffles_interval));
  defs.push_back(def("congruence", "projection-examples", check_projection_examples));
  defs.push_back(def("congruence", "projection-properties", check_projection_properties));
  defs.push_back(def("congruence", "projection-confluent", check_confluence));
  defs.push_back(def("congruence", "sigma-fibers", check_sigma_fibers));
  defs.push_back(def("congruence", "lattice-quotient-homomorphism", check_lattice_homomorphism));
  defs.push_back(def("congruence", "cover-bijection", check_cover_bijection));
  defs.push_back(def("congruence", "good-sets-extremes", check_good_sets));
  defs.push_back(def("congruence", "concatenation-convexity", check_convexity_random));
  defs.push_back(def("congruence", "av-operations-consistency", check_av_consistency));
  defs.push_back(def("congruence", "av-examples", check_av_examples));

  defs.push_back(def("intrinsic-vs-extrinsic", "product-extrinsic", check_product_extrinsic));
  defs.push_back(def("intrinsic-vs-extrinsic", "coproduct-extrinsic", check_coproduct_extrinsic));
  defs.push_back(def("intrinsic-vs-extrinsic", "gamma-termwise-extrinsic", check_gamma_termwise));
  defs.push_back(
      def("intrinsic-vs-extrinsic", "dual-coproduct-extrinsic", check_dual_coproduct_extrinsic));
  defs.push_back(def("intrinsic-vs-extrinsic", "coproduct-interval-theorem",
                     check_coproduct_interval_theorem));
  defs.push_back(
      def("intrinsic-vs-extrinsic", "dotting-block-theorem", check_dotting_block_theorem));
  defs.push_back(def("intrinsic-vs-extrinsic", "extremality", check_extremality));
  defs.push_back(def("intrinsic-vs-extrinsic", "allowable-sets-equal-good-sets",
                     check_allowable_equals_good));
  defs.push_back(def("intrinsic-vs-extrinsic", "tau-sections", check_tau_sections));
  defs.push_back(def("intrinsic-vs-extrinsic", "golden-worked-examples", check_golden_examples));
  defs.push_back(def("intrinsic-vs-extrinsic", "grading", check_grading));

  defs.push_back(def("hopf-axioms", "mr-examples", check_mr_examples));
  defs.push_back(def("hopf-axioms", "mr-unit-counit", check_mr_unit_counit));
  defs.push_back(def("hopf-axioms", "mr-associativity", check_mr_associativity));
  defs.push_back(def("hopf-axioms", "mr-coassociativity", check_mr_coassociativity));
  defs.push_back(def("hopf-axioms", "mr-compatibility", check_mr_compatibility));
  defs.push_back(def("hopf-axioms", "av-hopf-axioms", check_av_hopf_axioms));
  defs.push_back(def("hopf-axioms", "sash-hopf-axioms", check_sash_hopf_axioms));

  defs.push_back(def("duality", "mr-duality-pairings", check_mr_duality));
  defs.push_back(def("duality", "mr-inverse-transport", check_mr_inverse_transport));
  defs.push_back(def("duality", "av-duality-pairings", check_av_duality));
  defs.push_back(
      def("duality", "av-dual-coproduct-is-ambient", check_av_dual_coproduct_ambient));
  defs.push_back(def("duality", "sash-duality-pairings", check_sash_duality));
  defs.push_back(
      def("duality", "sash-adjunction-membership", check_sash_adjunction_membership));
  return defs;
}

}  // namespace

const std::vector<CheckDef>& all_checks() {
  static const std::vector<CheckDef> defs = make_registry();
  return defs;
}

std::vector<std::string> verify_suites() {
  std::vector<std::string> names;
  for (const CheckDef& d : all_checks()) {
    if (names.empty() || names.back() != d.suite) names.push_back(d.suite);
  }
  return names;
}

std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& opt) {
  std::vector<const CheckDef*> selected;
  for (const CheckDef& d : all_checks()) {
    if (suite == "all" || d.suite == suite) selected.push_back(&d);
  }
  if (selected.empty()) throw std::invalid_argument("unknown verify suite: " + suite);
  std::vector<CheckResult> results(selected.size());
  if (opt.jobs <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) results[i] = selected[i]->run(opt);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      results[i] = selected[i]->run(opt);
    }
  };
  std::vector<std::thread> pool;
  const int n = std::min<int>(opt.jobs, static_cast<int>(selected.size()));
  pool.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
  return results;
}

CheckResult run_check(const std::string& name, const VerifyOptions& opt) {
  for (const CheckDef& d : all_checks()) {
    if (d.name == name) return d.run(opt);
  }
  throw std::invalid_argument("unknown check: " + name);
}

}  // namespace pellhopf
