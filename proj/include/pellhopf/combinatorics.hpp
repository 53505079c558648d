#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace pellhopf {

/// Calls fn once per k-subset of {1,...,n}, as a sorted vector, in
/// lexicographic order.
template <class F>
void for_each_combination(int n, int k, F fn) {
  if (k < 0 || k > n) return;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 1);
  while (true) {
    fn(const_cast<const std::vector<int>&>(c));
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + 1 + i) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

}  // namespace pellhopf
