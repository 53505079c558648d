#include "pellhopf/weak_order.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pellhopf {

namespace {

void require_same_size(const Permutation& x, const Permutation& y, const char* who) {
  if (x.size() != y.size()) {
    throw std::invalid_argument(std::string(who) + ": size mismatch");
  }
}

}  // namespace

bool weak_leq(const Permutation& x, const Permutation& y) {
  require_same_size(x, y, "weak_leq");
  const InversionSet a = inversion_set(x);
  const InversionSet b = inversion_set(y);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Permutation> weak_covers_up(const Permutation& x) {
  std::vector<Permutation> out;
  for (int p = 1; p + 1 <= x.size(); ++p) {
    if (x.entry(p) < x.entry(p + 1)) {
      std::vector<int> e = x.entries();
      std::swap(e[static_cast<std::size_t>(p - 1)], e[static_cast<std::size_t>(p)]);
      out.emplace_back(std::move(e));
    }
  }
  return out;
}

std::vector<Permutation> weak_covers_down(const Permutation& x) {
  std::vector<Permutation> out;
  for (int p = 1; p + 1 <= x.size(); ++p) {
    if (x.entry(p) > x.entry(p + 1)) {
      std::vector<int> e = x.entries();
      std::swap(e[static_cast<std::size_t>(p - 1)], e[static_cast<std::size_t>(p)]);
      out.emplace_back(std::move(e));
    }
  }
  return out;
}

Permutation reversed(const Permutation& x) {
  std::vector<int> e = x.entries();
  std::reverse(e.begin(), e.end());
  return Permutation(std::move(e));
}

std::optional<Permutation> permutation_from_inversions(const InversionSet& inv, int n) {
  // A realizable set induces the total order "u before v" with score counting;
  // the round trip below rejects anything else.
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  auto before = [&inv](int u, int v) {
    if (u > v) return inv.count({u, v}) > 0;
    return inv.count({v, u}) == 0;
  };
  std::vector<int> score(static_cast<std::size_t>(n + 1), 0);
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (u != v && before(u, v)) ++score[static_cast<std::size_t>(u)];
    }
  }
  std::sort(values.begin(), values.end(), [&score](int u, int v) {
    return score[static_cast<std::size_t>(u)] > score[static_cast<std::size_t>(v)];
  });
  Permutation candidate{values};
  if (inversion_set(candidate) != inv) return std::nullopt;
  return candidate;
}

namespace {

// Transitive closure under (a,b),(b,c) -> (a,c) for a > b > c.
InversionSet close_down(InversionSet inv, int n) {
  for (int mid = 1; mid <= n; ++mid) {
    for (int a = mid + 1; a <= n; ++a) {
      if (inv.count({a, mid}) == 0) continue;
      for (int c = 1; c < mid; ++c) {
        if (inv.count({mid, c}) > 0) inv.emplace(a, c);
      }
    }
  }
  return inv;
}

}  // namespace

Permutation weak_join(const Permutation& x, const Permutation& y) {
  require_same_size(x, y, "weak_join");
  InversionSet u = inversion_set(x);
  const InversionSet v = inversion_set(y);
  u.insert(v.begin(), v.end());
  const auto joined = permutation_from_inversions(close_down(std::move(u), x.size()), x.size());
  if (!joined) throw std::logic_error("weak_join: closure not realizable");
  return *joined;
}

Permutation weak_meet(const Permutation& x, const Permutation& y) {
  require_same_size(x, y, "weak_meet");
  return reversed(weak_join(reversed(x), reversed(y)));
}

std::vector<Permutation> weak_interval(const Permutation& lo, const Permutation& hi) {
  if (!weak_leq(lo, hi)) throw std::invalid_argument("weak_interval: lo is not below hi");
  const InversionSet top = inversion_set(hi);
  std::set<Permutation> seen{lo};
  std::deque<Permutation> queue{lo};
  while (!queue.empty()) {
    const Permutation z = queue.front();
    queue.pop_front();
    for (const Permutation& c : weak_covers_up(z)) {
      if (seen.count(c) > 0) continue;
      const InversionSet ic = inversion_set(c);
      if (!std::includes(top.begin(), top.end(), ic.begin(), ic.end())) continue;
      seen.insert(c);
      queue.push_back(c);
    }
  }
  return std::vector<Permutation>(seen.begin(), seen.end());
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 0) throw std::invalid_argument("all_permutations: negative size");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

}  // namespace pellhopf
