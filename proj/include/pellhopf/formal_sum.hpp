#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace pellhopf {

/// Exact coefficients; all structure constants here are nonnegative integers
/// and nothing may overflow silently.
using Int = boost::multiprecision::cpp_int;

/// Formal Z-linear combination of basis objects. Zero coefficients are never
/// stored, so equality is termwise.
template <class B>
class FormalSum {
 public:
  FormalSum() = default;

  static FormalSum basis(const B& b) {
    FormalSum e;
    e.add(b);
    return e;
  }

  void add(const B& b, const Int& c = 1) {
    if (c == 0) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) {
    a += b;
    return a;
  }

  FormalSum& operator*=(const Int& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, k] : terms_) k *= c;
    return *this;
  }
  friend FormalSum operator*(FormalSum a, const Int& c) {
    a *= c;
    return a;
  }

  const std::map<B, Int>& terms() const { return terms_; }

  Int coefficient(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Int(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FormalSum& a, const FormalSum& b) { return !(a == b); }

 private:
  std::map<B, Int> terms_;
};

/// Z-linear combination of elementary tensors a (x) b over one basis family.
template <class B>
class TensorSum {
 public:
  using Key = std::pair<B, B>;

  TensorSum() = default;

  static TensorSum basis(const B& a, const B& b) {
    TensorSum e;
    e.add(a, b);
    return e;
  }

  void add(const B& a, const B& b, const Int& c = 1) {
    if (c == 0) return;
    Key k{a, b};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
      return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  TensorSum& operator+=(const TensorSum& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  friend TensorSum operator+(TensorSum a, const TensorSum& b) {
    a += b;
    return a;
  }

  const std::map<Key, Int>& terms() const { return terms_; }

  Int coefficient(const B& a, const B& b) const {
    auto it = terms_.find(Key{a, b});
    return it == terms_.end() ? Int(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  friend bool operator==(const TensorSum& a, const TensorSum& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorSum& a, const TensorSum& b) { return !(a == b); }

 private:
  std::map<Key, Int> terms_;
};

template <class B>
TensorSum<B> tensor(const FormalSum<B>& a, const FormalSum<B>& b) {
  TensorSum<B> out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) out.add(x, y, cx * cy);
  }
  return out;
}

/// Bases are orthonormal under the graded dual pairing.
template <class B>
Int pairing(const FormalSum<B>& a, const FormalSum<B>& b) {
  Int s = 0;
  for (const auto& [k, c] : a.terms()) {
    auto it = b.terms().find(k);
    if (it != b.terms().end()) s += c * it->second;
  }
  return s;
}

template <class B>
Int pairing(const TensorSum<B>& a, const TensorSum<B>& b) {
  Int s = 0;
  for (const auto& [k, c] : a.terms()) {
    auto it = b.terms().find(k);
    if (it != b.terms().end()) s += c * it->second;
  }
  return s;
}

/// op maps a basis object to a FormalSum; the extensions below are the single
/// generic implementation of linearity used by every algebra here.
template <class B, class F>
FormalSum<B> extend_linear(const FormalSum<B>& e, F op) {
  FormalSum<B> out;
  for (const auto& [b, c] : e.terms()) {
    const FormalSum<B> t = op(b);
    for (const auto& [b2, c2] : t.terms()) out.add(b2, c * c2);
  }
  return out;
}

template <class B, class F>
TensorSum<B> extend_linear_to_tensor(const FormalSum<B>& e, F op) {
  TensorSum<B> out;
  for (const auto& [b, c] : e.terms()) {
    const TensorSum<B> t = op(b);
    for (const auto& [k, c2] : t.terms()) out.add(k.first, k.second, c * c2);
  }
  return out;
}

template <class B, class F>
FormalSum<B> extend_bilinear(const FormalSum<B>& x, const FormalSum<B>& y, F op) {
  FormalSum<B> out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const FormalSum<B> t = op(a, b);
      for (const auto& [b2, c2] : t.terms()) out.add(b2, ca * cb * c2);
    }
  }
  return out;
}

/// Componentwise product of tensors: (a (x) b) * (c (x) d) = op(a,c) (x) op(b,d).
template <class B, class F>
TensorSum<B> tensor_multiply(const TensorSum<B>& s, const TensorSum<B>& t, F op) {
  TensorSum<B> out;
  for (const auto& [k1, c1] : s.terms()) {
    for (const auto& [k2, c2] : t.terms()) {
      const FormalSum<B> left = op(k1.first, k2.first);
      const FormalSum<B> right = op(k1.second, k2.second);
      for (const auto& [a, ca] : left.terms()) {
        for (const auto& [b, cb] : right.terms()) out.add(a, b, c1 * c2 * ca * cb);
      }
    }
  }
  return out;
}

namespace detail {

inline std::string coefficient_prefix(const Int& c) {
  return c == 1 ? std::string() : c.str() + "*";
}

}  // namespace detail

/// Terms print in (grade, text) order; needs grade(B) and to_text(B).
template <class B>
std::string to_text(const FormalSum<B>& e) {
  if (e.is_zero()) return "0";
  struct Row {
    int g;
    std::string txt;
    Int c;
  };
  std::vector<Row> rows;
  rows.reserve(e.term_count());
  for (const auto& [b, c] : e.terms()) rows.push_back({grade(b), to_text(b), c});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.g, a.txt) < std::tie(b.g, b.txt);
  });
  std::string s;
  for (const Row& r : rows) {
    if (!s.empty()) s += " + ";
    s += detail::coefficient_prefix(r.c) + r.txt;
  }
  return s;
}

template <class B>
std::string to_text(const TensorSum<B>& e) {
  if (e.is_zero()) return "0";
  struct Row {
    int ga;
    std::string ta;
    int gb;
    std::string tb;
    Int c;
  };
  std::vector<Row> rows;
  rows.reserve(e.term_count());
  for (const auto& [k, c] : e.terms()) {
    rows.push_back({grade(k.first), to_text(k.first), grade(k.second), to_text(k.second), c});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.ga, a.ta, a.gb, a.tb) < std::tie(b.ga, b.ta, b.gb, b.tb);
  });
  std::string s;
  for (const Row& r : rows) {
    if (!s.empty()) s += " + ";
    s += detail::coefficient_prefix(r.c) + "[" + r.ta + "](x)[" + r.tb + "]";
  }
  return s;
}

}  // namespace pellhopf
