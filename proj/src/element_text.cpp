#include "pellhopf/element_text.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pellhopf {

namespace {

std::vector<std::string> split_terms(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse element: empty text");
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t sep = s.find(" + ", start);
    if (sep == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, sep - start));
    start = sep + 3;
  }
}

std::pair<Int, std::string> split_coefficient(const std::string& term) {
  const std::size_t star = term.find('*');
  if (star == std::string::npos) return {Int(1), term};
  const std::string num = term.substr(0, star);
  std::size_t i = num.size() > 0 && (num[0] == '-' || num[0] == '+') ? 1 : 0;
  if (i == num.size()) throw std::invalid_argument("parse element: bad coefficient");
  for (; i < num.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(num[i]))) {
      throw std::invalid_argument("parse element: bad coefficient");
    }
  }
  return {Int(num), term.substr(star + 1)};
}

std::pair<std::string, std::string> split_tensor_body(const std::string& body) {
  const std::size_t sep = body.find("](x)[");
  if (body.size() < 7 || body.front() != '[' || body.back() != ']' ||
      sep == std::string::npos) {
    throw std::invalid_argument("parse element: bad tensor term");
  }
  return {body.substr(1, sep - 1), body.substr(sep + 5, body.size() - sep - 6)};
}

template <class B, class ParseBasis>
FormalSum<B> parse_sum(const std::string& s, ParseBasis parse_basis) {
  FormalSum<B> out;
  if (s == "0") return out;
  for (const std::string& term : split_terms(s)) {
    auto [c, body] = split_coefficient(term);
    out.add(parse_basis(body), c);
  }
  return out;
}

template <class B, class ParseBasis>
TensorSum<B> parse_tensor_sum(const std::string& s, ParseBasis parse_basis) {
  TensorSum<B> out;
  if (s == "0") return out;
  for (const std::string& term : split_terms(s)) {
    auto [c, body] = split_coefficient(term);
    auto [ta, tb] = split_tensor_body(body);
    out.add(parse_basis(ta), parse_basis(tb), c);
  }
  return out;
}

}  // namespace

PermElement parse_perm_element(const std::string& s) {
  return parse_sum<Permutation>(s, [](const std::string& t) { return parse_permutation(t); });
}

SashElement parse_sash_element(const std::string& s) {
  return parse_sum<Sash>(s, [](const std::string& t) { return parse_sash(t); });
}

PermTensor parse_perm_tensor(const std::string& s) {
  return parse_tensor_sum<Permutation>(s,
                                       [](const std::string& t) { return parse_permutation(t); });
}

SashTensor parse_sash_tensor(const std::string& s) {
  return parse_tensor_sum<Sash>(s, [](const std::string& t) { return parse_sash(t); });
}

}  // namespace pellhopf
