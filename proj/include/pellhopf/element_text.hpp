#pragma once

#include <string>

#include "pellhopf/mr_hopf.hpp"
#include "pellhopf/sash.hpp"

namespace pellhopf {

/// Inverse of to_text on sums: "c*term + ..." with unit coefficients elided,
/// "0" for the zero element. Throws std::invalid_argument on malformed text.
PermElement parse_perm_element(const std::string& s);
SashElement parse_sash_element(const std::string& s);

/// Inverse of to_text on tensor sums: terms look like "c*[a](x)[b]".
PermTensor parse_perm_tensor(const std::string& s);
SashTensor parse_sash_tensor(const std::string& s);

}  // namespace pellhopf
