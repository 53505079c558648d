#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pellhopf {

/// Finite set of positive integers. Used for value sets, restriction targets,
/// embedding alphabets and prefix sets.
using IndexSet = std::set<int>;

/// {1, ..., n}
IndexSet full_set(int n);

/// [n] \ t. Every element of t must lie in [n].
IndexSet complement_in(const IndexSet& t, int n);

std::string to_text(const IndexSet& t);
IndexSet parse_index_set(const std::string& s);

/// Sequence of pairwise distinct positive integers; may be empty.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  /// 1-based access.
  int entry(int pos) const;

  /// 1-based position of a value; 0 when the value does not occur.
  int position_of(int value) const;

  IndexSet value_set() const;

  friend bool operator==(const Word& a, const Word& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b);

 private:
  std::vector<int> entries_;
};

/// Word whose value set is exactly {1, ..., n}. n = 0 gives the empty
/// permutation, a legal value everywhere.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);
  explicit Permutation(Word w);

  const Word& word() const { return word_; }
  operator const Word&() const { return word_; }

  const std::vector<int>& entries() const { return word_.entries(); }
  int size() const { return word_.size(); }
  bool empty() const { return word_.empty(); }
  int entry(int pos) const { return word_.entry(pos); }
  int position_of(int value) const { return word_.position_of(value); }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.word_ == b.word_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.word_ < b.word_;
  }

 private:
  Word word_;
};

inline int grade(const Permutation& x) { return x.size(); }

/// Value pairs (a, b) with a > b and a appearing before b.
using InversionSet = std::set<std::pair<int, int>>;

InversionSet inversion_set(const Word& w);

/// Replaces each entry by its rank within the word.
Permutation standardize(const Word& w);

/// Relabels x into the alphabet t: the value j becomes the j-th smallest
/// element of t. Requires |t| == |x|.
Word embed(const Permutation& x, const IndexSet& t);

/// Subsequence of w consisting of the entries lying in t.
Word restrict_to(const Word& w, const IndexSet& t);

Permutation inverse(const Permutation& x);

/// Juxtaposition; the two value sets must be disjoint.
Word concat(const Word& x, const Word& y);

/// All interleavings of x with y shifted up by |x|, in lexicographic order of
/// the chosen position sets.
std::vector<Permutation> shifted_shuffles(const Permutation& x, const Permutation& y);

std::string to_text(const Word& w);
std::string to_text(const Permutation& x);

/// Accepts comma-separated entries, a compact digit string (each character one
/// value, entries at most 9), or "()" for the empty word.
Word parse_word(const std::string& s);
Permutation parse_permutation(const std::string& s);

}  // namespace pellhopf
