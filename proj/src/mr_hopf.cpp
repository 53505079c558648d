#include "pellhopf/mr_hopf.hpp"

#include "pellhopf/combinatorics.hpp"

namespace pellhopf {

PermElement mr_product(const Permutation& x, const Permutation& y) {
  PermElement out;
  for (const Permutation& z : shifted_shuffles(x, y)) out.add(z);
  return out;
}

PermElement mr_product(const PermElement& x, const PermElement& y) {
  return extend_bilinear(x, y, [](const Permutation& a, const Permutation& b) {
    return mr_product(a, b);
  });
}

PermTensor mr_coproduct(const Permutation& x) {
  PermTensor out;
  const int n = x.size();
  for (int i = 0; i <= n; ++i) {
    std::vector<int> prefix(x.entries().begin(), x.entries().begin() + i);
    std::vector<int> suffix(x.entries().begin() + i, x.entries().end());
    out.add(standardize(Word(std::move(prefix))), standardize(Word(std::move(suffix))));
  }
  return out;
}

PermTensor mr_coproduct(const PermElement& e) {
  return extend_linear_to_tensor(e, [](const Permutation& x) { return mr_coproduct(x); });
}

PermElement mr_dual_product(const Permutation& x, const Permutation& y) {
  PermElement out;
  const int n = x.size() + y.size();
  for_each_combination(n, x.size(), [&](const std::vector<int>& chosen) {
    const IndexSet t(chosen.begin(), chosen.end());
    out.add(Permutation(concat(embed(x, t), embed(y, complement_in(t, n)))));
  });
  return out;
}

PermTensor mr_dual_coproduct(const Permutation& z) {
  PermTensor out;
  const int n = z.size();
  for (int i = 0; i <= n; ++i) {
    const Word left = restrict_to(z, full_set(i));
    IndexSet rest;
    for (int v = i + 1; v <= n; ++v) rest.insert(v);
    out.add(Permutation(left), standardize(restrict_to(z, rest)));
  }
  return out;
}

PermElement inv_map(const PermElement& e) {
  return extend_linear(e, [](const Permutation& x) { return PermElement::basis(inverse(x)); });
}

}  // namespace pellhopf
