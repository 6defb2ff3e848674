#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace garside {

inline constexpr int kMaxStrands = 32;

// A positive braid in which every pair of strands crosses at most once,
// stored as the permutation it induces: perm[i] is the final position of
// the strand that starts at position i (0-based).  The braid product a*b
// (a first, then b) corresponds to j -> b[a[j]].
class SimpleElement {
 public:
  SimpleElement() = default;

  explicit SimpleElement(int n) : n_(check_strands(n)) {
    for (int i = 0; i < n; ++i) perm_[i] = static_cast<std::uint8_t>(i);
  }

  static SimpleElement identity(int n) { return SimpleElement(n); }

  static SimpleElement delta(int n) {
    SimpleElement s(n);
    for (int i = 0; i < n; ++i) s.perm_[i] = static_cast<std::uint8_t>(n - 1 - i);
    return s;
  }

  // sigma_i, 1 <= i < n
  static SimpleElement atom(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("atom index out of range");
    SimpleElement s(n);
    std::swap(s.perm_[i - 1], s.perm_[i]);
    return s;
  }

  // one-line table with 0-based images
  static SimpleElement from_permutation(std::span<const int> images) {
    const int n = static_cast<int>(images.size());
    SimpleElement s(n);
    std::array<bool, kMaxStrands> seen{};
    for (int i = 0; i < n; ++i) {
      int v = images[i];
      if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
      s.perm_[i] = static_cast<std::uint8_t>(v);
    }
    return s;
  }

  // Product of atoms; throws if the word is not reduced (not simple).
  static SimpleElement from_word(int n, std::span<const int> letters) {
    SimpleElement s(n);
    for (int i : letters) {
      if (i < 1 || i >= n) throw std::out_of_range("atom index out of range");
      if (s.has_right_atom(i)) throw std::invalid_argument("word is not a simple element");
      s.append_atom(i);
    }
    return s;
  }

  int strands() const { return n_; }
  int operator[](int pos) const { return perm_[pos]; }

  int length() const {
    int inv = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) inv += perm_[i] > perm_[j];
    return inv;
  }

  bool is_identity() const {
    for (int i = 0; i < n_; ++i)
      if (perm_[i] != i) return false;
    return true;
  }

  bool is_delta() const {
    for (int i = 0; i < n_; ++i)
      if (perm_[i] != n_ - 1 - i) return false;
    return true;
  }

  // sigma_i is a prefix
  bool has_left_atom(int i) const { return perm_[i - 1] > perm_[i]; }

  // sigma_i is a suffix
  bool has_right_atom(int i) const {
    int a = -1, b = -1;
    for (int j = 0; j < n_; ++j) {
      if (perm_[j] == i - 1) a = j;
      if (perm_[j] == i) b = j;
    }
    return a > b;
  }

  // this := this * sigma_i (caller guarantees the result is simple)
  void append_atom(int i) {
    for (int j = 0; j < n_; ++j) {
      if (perm_[j] == i - 1)
        perm_[j] = static_cast<std::uint8_t>(i);
      else if (perm_[j] == i)
        perm_[j] = static_cast<std::uint8_t>(i - 1);
    }
  }

  // Lexicographically smallest reduced word.
  std::vector<int> word() const {
    std::vector<int> out;
    SimpleElement rest = *this;
    for (;;) {
      int i = 1;
      while (i < n_ && !rest.has_left_atom(i)) ++i;
      if (i == n_) break;
      out.push_back(i);
      std::swap(rest.perm_[i - 1], rest.perm_[i]);
    }
    return out;
  }

  std::string word_string() const {
    std::string s;
    for (int i : word()) {
      if (!s.empty()) s += ' ';
      s += std::to_string(i);
    }
    return s;
  }

  SimpleElement inverse_permutation() const {
    SimpleElement s(n_);
    for (int i = 0; i < n_; ++i) s.perm_[perm_[i]] = static_cast<std::uint8_t>(i);
    return s;
  }

  // permutation of the braid product a*b, meaningful as a simple element
  // only when the lengths add
  friend SimpleElement compose(const SimpleElement& a, const SimpleElement& b) {
    SimpleElement s(a.n_);
    for (int i = 0; i < a.n_; ++i) s.perm_[i] = b.perm_[a.perm_[i]];
    return s;
  }

  friend bool operator==(const SimpleElement& a, const SimpleElement& b) {
    return a.n_ == b.n_ && a.perm_ == b.perm_;
  }

  friend std::strong_ordering operator<=>(const SimpleElement& a, const SimpleElement& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.perm_ <=> b.perm_;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (int i = 0; i < n_; ++i) h = h * 131 + perm_[i];
    return h;
  }

 private:
  static std::uint8_t check_strands(int n) {
    if (n < 2 || n > kMaxStrands) throw std::invalid_argument("strand count must be in [2, 32]");
    return static_cast<std::uint8_t>(n);
  }

  friend SimpleElement meet(const SimpleElement&, const SimpleElement&);

  std::array<std::uint8_t, kMaxStrands> perm_{};
  std::uint8_t n_ = 0;
};

inline void require_same_strands(const SimpleElement& a, const SimpleElement& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand counts differ");
}

// Greatest common prefix.  Peels common left atoms off both arguments.
inline SimpleElement meet(const SimpleElement& a, const SimpleElement& b) {
  require_same_strands(a, b);
  const int n = a.n_;
  SimpleElement ra = a, rb = b;
  int i = 0;
  while (i < n - 1) {
    if (ra.perm_[i] > ra.perm_[i + 1] && rb.perm_[i] > rb.perm_[i + 1]) {
      std::swap(ra.perm_[i], ra.perm_[i + 1]);
      std::swap(rb.perm_[i], rb.perm_[i + 1]);
      i = i > 0 ? i - 1 : 0;
    } else {
      ++i;
    }
  }
  // a = m * ra
  return compose(a, ra.inverse_permutation());
}

inline bool is_prefix(const SimpleElement& a, const SimpleElement& b) {
  require_same_strands(a, b);
  return compose(a.inverse_permutation(), b).length() + a.length() == b.length();
}

inline bool is_suffix(const SimpleElement& a, const SimpleElement& b) {
  require_same_strands(a, b);
  return compose(b, a.inverse_permutation()).length() + a.length() == b.length();
}

// a^{-1} Delta
inline SimpleElement right_complement(const SimpleElement& a) {
  return compose(a.inverse_permutation(), SimpleElement::delta(a.strands()));
}

// the c with c a = Delta
inline SimpleElement left_complement(const SimpleElement& a) {
  return compose(SimpleElement::delta(a.strands()), a.inverse_permutation());
}

// Delta^{-k} a Delta^k; an involution
inline SimpleElement tau(const SimpleElement& a, int k = 1) {
  if (k % 2 == 0) return a;
  const int n = a.strands();
  std::vector<int> img(n);
  for (int j = 0; j < n; ++j) img[j] = n - 1 - a[n - 1 - j];
  return SimpleElement::from_permutation(img);
}

// the usual names: complement is the right complement a^{-1} Delta
inline SimpleElement complement(const SimpleElement& a) { return right_complement(a); }
inline SimpleElement tau_simple(const SimpleElement& a, int k) { return tau(a, k); }

// Greatest common suffix.
inline SimpleElement right_meet(const SimpleElement& a, const SimpleElement& b) {
  return meet(a.inverse_permutation(), b.inverse_permutation()).inverse_permutation();
}

// Least common multiple in the prefix order.
inline SimpleElement join(const SimpleElement& a, const SimpleElement& b) {
  return left_complement(right_meet(right_complement(a), right_complement(b)));
}

// Least common multiple in the suffix order.
inline SimpleElement right_join(const SimpleElement& a, const SimpleElement& b) {
  return join(a.inverse_permutation(), b.inverse_permutation()).inverse_permutation();
}

// a^{-1} b for a prefix a of b
inline SimpleElement left_quotient(const SimpleElement& a, const SimpleElement& b) {
  return compose(a.inverse_permutation(), b);
}

// a b^{-1} for a suffix b of a
inline SimpleElement right_quotient(const SimpleElement& a, const SimpleElement& b) {
  return compose(a, b.inverse_permutation());
}

inline bool product_is_simple(const SimpleElement& a, const SimpleElement& b) {
  require_same_strands(a, b);
  return compose(a, b).length() == a.length() + b.length();
}

inline SimpleElement product(const SimpleElement& a, const SimpleElement& b) {
  if (!product_is_simple(a, b)) throw std::invalid_argument("product is not simple");
  return compose(a, b);
}

// (a, b) is left-weighted iff every left atom of b is a right atom of a.
inline bool left_weighted(const SimpleElement& a, const SimpleElement& b) {
  require_same_strands(a, b);
  for (int i = 1; i < a.strands(); ++i)
    if (b.has_left_atom(i) && !a.has_right_atom(i)) return false;
  return true;
}

inline std::pair<SimpleElement, SimpleElement> local_slide(const SimpleElement& a,
                                                           const SimpleElement& b) {
  SimpleElement t = meet(right_complement(a), b);
  if (t.is_identity()) return {a, b};
  return {compose(a, t), left_quotient(t, b)};
}

inline std::vector<SimpleElement> atoms(int n) {
  std::vector<SimpleElement> out;
  for (int i = 1; i < n; ++i) out.push_back(SimpleElement::atom(n, i));
  return out;
}

}  // namespace garside

template <>
struct std::hash<garside::SimpleElement> {
  std::size_t operator()(const garside::SimpleElement& s) const noexcept { return s.hash(); }
};
