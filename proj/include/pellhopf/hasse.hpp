#pragma once

#include <string>

#include "pellhopf/congruence.hpp"
#include "pellhopf/sash.hpp"

namespace pellhopf {

/// DOT digraphs for the cover relations, edges pointing from the smaller to
/// the larger element, one node per element labeled by its canonical text.

/// Weak order on all permutations of [n].
std::string hasse_dot_weak(int n);

/// Weak order restricted to the avoiders of the system (the quotient lattice).
std::string hasse_dot_avoiders(int n, const CongruenceSystem& system);

/// Sash lattice on the sashes of the given strip length.
std::string hasse_dot_sashes(int length);

}  // namespace pellhopf
