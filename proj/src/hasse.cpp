#include "pellhopf/hasse.hpp"

#include <utility>
#include <vector>

#include "pellhopf/weak_order.hpp"

namespace pellhopf {

namespace {

std::string render(const std::vector<std::string>& nodes,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (const std::string& n : nodes) {
    out += "  \"" + n + "\";\n";
  }
  for (const auto& [lo, hi] : edges) {
    out += "  \"" + lo + "\" -> \"" + hi + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string hasse_dot_weak(int n) {
  const std::vector<Permutation> elems = all_permutations(n);
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Permutation& x : elems) {
    nodes.push_back(to_text(x));
    for (const Permutation& y : weak_covers_up(x)) {
      edges.emplace_back(to_text(x), to_text(y));
    }
  }
  return render(nodes, edges);
}

std::string hasse_dot_avoiders(int n, const CongruenceSystem& system) {
  const std::vector<Permutation> elems = enumerate_avoiders(n, system);
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Permutation& x : elems) nodes.push_back(to_text(x));
  for (const Permutation& x : elems) {
    for (const Permutation& y : elems) {
      if (x == y || !weak_leq(x, y)) continue;
      bool cover = true;
      for (const Permutation& z : elems) {
        if (z == x || z == y) continue;
        if (weak_leq(x, z) && weak_leq(z, y)) {
          cover = false;
          break;
        }
      }
      if (cover) edges.emplace_back(to_text(x), to_text(y));
    }
  }
  return render(nodes, edges);
}

std::string hasse_dot_sashes(int length) {
  const std::vector<Sash> elems = enumerate_sashes(length);
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Sash& c : elems) {
    nodes.push_back(to_text(c));
    for (const Sash& d : sash_covers_up(c)) {
      edges.emplace_back(to_text(c), to_text(d));
    }
  }
  return render(nodes, edges);
}

}  // namespace pellhopf
