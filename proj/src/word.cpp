#include "pellhopf/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pellhopf/combinatorics.hpp"

namespace pellhopf {

IndexSet full_set(int n) {
  if (n < 0) throw std::invalid_argument("full_set: negative size");
  IndexSet t;
  for (int i = 1; i <= n; ++i) t.insert(i);
  return t;
}

IndexSet complement_in(const IndexSet& t, int n) {
  IndexSet out;
  for (int i = 1; i <= n; ++i) {
    if (t.count(i) == 0) out.insert(i);
  }
  if (!t.empty() && (*t.begin() < 1 || *t.rbegin() > n)) {
    throw std::invalid_argument("complement_in: set not contained in [n]");
  }
  return out;
}

std::string to_text(const IndexSet& t) {
  std::string s = "{";
  bool first = true;
  for (int v : t) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  }
  s += '}';
  return s;
}

IndexSet parse_index_set(const std::string& s) {
  std::string body = s;
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') {
    body = body.substr(1, body.size() - 2);
  }
  IndexSet t;
  if (body.empty()) return t;
  std::stringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("parse_index_set: empty entry");
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 1) {
      throw std::invalid_argument("parse_index_set: bad entry '" + tok + "'");
    }
    if (!t.insert(v).second) throw std::invalid_argument("parse_index_set: repeated entry");
  }
  return t;
}

Word::Word(std::vector<int> entries) : entries_(std::move(entries)) {
  IndexSet seen;
  for (int v : entries_) {
    if (v < 1) throw std::invalid_argument("Word: entries must be positive");
    if (!seen.insert(v).second) throw std::invalid_argument("Word: repeated entry");
  }
}

int Word::entry(int pos) const {
  if (pos < 1 || pos > size()) throw std::out_of_range("Word::entry");
  return entries_[static_cast<std::size_t>(pos - 1)];
}

int Word::position_of(int value) const {
  for (int p = 1; p <= size(); ++p) {
    if (entries_[static_cast<std::size_t>(p - 1)] == value) return p;
  }
  return 0;
}

IndexSet Word::value_set() const { return IndexSet(entries_.begin(), entries_.end()); }

bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.entries_ < b.entries_;
}

Permutation::Permutation(Word w) : word_(std::move(w)) {
  const int n = word_.size();
  for (int v : word_.entries()) {
    if (v > n) throw std::invalid_argument("Permutation: value set is not {1..n}");
  }
}

Permutation::Permutation(std::vector<int> entries) : Permutation(Word(std::move(entries))) {}

InversionSet inversion_set(const Word& w) {
  InversionSet inv;
  const auto& e = w.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i] > e[j]) inv.emplace(e[i], e[j]);
    }
  }
  return inv;
}

Permutation standardize(const Word& w) {
  std::vector<int> sorted = w.entries();
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  out.reserve(sorted.size());
  for (int v : w.entries()) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    out.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Permutation(std::move(out));
}

Word embed(const Permutation& x, const IndexSet& t) {
  if (static_cast<int>(t.size()) != x.size()) {
    throw std::invalid_argument("embed: |t| must equal |x|");
  }
  std::vector<int> alphabet(t.begin(), t.end());
  std::vector<int> out;
  out.reserve(alphabet.size());
  for (int v : x.entries()) out.push_back(alphabet[static_cast<std::size_t>(v - 1)]);
  return Word(std::move(out));
}

Word restrict_to(const Word& w, const IndexSet& t) {
  std::vector<int> out;
  for (int v : w.entries()) {
    if (t.count(v) > 0) out.push_back(v);
  }
  return Word(std::move(out));
}

Permutation inverse(const Permutation& x) {
  std::vector<int> out(static_cast<std::size_t>(x.size()));
  for (int p = 1; p <= x.size(); ++p) out[static_cast<std::size_t>(x.entry(p) - 1)] = p;
  return Permutation(std::move(out));
}

Word concat(const Word& x, const Word& y) {
  std::vector<int> out = x.entries();
  out.insert(out.end(), y.entries().begin(), y.entries().end());
  return Word(std::move(out));  // Word constructor rejects overlaps
}

std::vector<Permutation> shifted_shuffles(const Permutation& x, const Permutation& y) {
  const int p = x.size();
  const int n = p + y.size();
  std::vector<int> shifted;
  shifted.reserve(static_cast<std::size_t>(y.size()));
  for (int v : y.entries()) shifted.push_back(v + p);

  std::vector<Permutation> out;
  out.reserve(binomial(n, p));
  for_each_combination(n, p, [&](const std::vector<int>& positions) {
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    std::size_t xi = 0;
    for (int pos : positions) word[static_cast<std::size_t>(pos - 1)] = x.entries()[xi++];
    std::size_t yi = 0;
    for (auto& v : word) {
      if (v == 0) v = shifted[yi++];
    }
    out.emplace_back(std::move(word));
  });
  return out;
}

std::string to_text(const Word& w) {
  if (w.empty()) return "()";
  std::string s;
  for (int p = 1; p <= w.size(); ++p) {
    if (p > 1) s += ',';
    s += std::to_string(w.entry(p));
  }
  return s;
}

std::string to_text(const Permutation& x) { return to_text(x.word()); }

Word parse_word(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_word: empty input");
  if (s == "()") return Word();
  std::vector<int> entries;
  if (s.find(',') != std::string::npos) {
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_word: bad entry '" + tok + "'");
      }
      if (used != tok.size()) throw std::invalid_argument("parse_word: bad entry '" + tok + "'");
      entries.push_back(v);
    }
    return Word(std::move(entries));
  }
  const bool compact = s.size() > 1 &&
                       std::all_of(s.begin(), s.end(), [](char c) { return c >= '1' && c <= '9'; });
  if (compact) {
    for (char c : s) entries.push_back(c - '0');
    return Word(std::move(entries));
  }
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_word: bad input '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("parse_word: bad input '" + s + "'");
  entries.push_back(v);
  return Word(std::move(entries));
}

Permutation parse_permutation(const std::string& s) { return Permutation(parse_word(s)); }

}  // namespace pellhopf
