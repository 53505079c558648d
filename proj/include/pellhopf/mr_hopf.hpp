#pragma once

#include "pellhopf/formal_sum.hpp"
#include "pellhopf/weak_order.hpp"
#include "pellhopf/word.hpp"

namespace pellhopf {

using PermElement = FormalSum<Permutation>;
using PermTensor = TensorSum<Permutation>;

/// Sum of all shifted shuffles of x and y; equals the weak interval from
/// x . y' up to y' . x.
PermElement mr_product(const Permutation& x, const Permutation& y);
PermElement mr_product(const PermElement& x, const PermElement& y);

/// Sum over splits of the standardized prefix tensor the standardized suffix.
PermTensor mr_coproduct(const Permutation& x);
PermTensor mr_coproduct(const PermElement& e);

/// Dual product: sum over |x|-subsets t of embeddings x into t and y into the
/// complement, juxtaposed.
PermElement mr_dual_product(const Permutation& x, const Permutation& y);

/// Dual coproduct: sum over i of the restriction to {1..i} tensor the
/// standardized restriction to the remaining values.
PermTensor mr_dual_coproduct(const Permutation& z);

/// Linear extension of group inversion; the Hopf-duality isomorphism.
PermElement inv_map(const PermElement& e);

}  // namespace pellhopf
