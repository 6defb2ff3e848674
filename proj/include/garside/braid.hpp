#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "garside/simple.hpp"

namespace garside {

namespace detail {

// Appends s to a left-weighted sequence and restores left-weightedness
// with one right-to-left sweep of local slides.
inline void append_weighted(std::vector<SimpleElement>& seq, const SimpleElement& s) {
  seq.push_back(s);
  for (std::size_t i = seq.size() - 1; i > 0; --i) {
    auto [a, b] = local_slide(seq[i - 1], seq[i]);
    if (a == seq[i - 1]) break;
    seq[i - 1] = a;
    seq[i] = b;
  }
}

// Bubble passes until every adjacent pair is left-weighted.
inline void settle(std::vector<SimpleElement>& seq) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = seq.size(); i-- > 1;) {
      auto [a, b] = local_slide(seq[i - 1], seq[i]);
      if (a != seq[i - 1]) {
        seq[i - 1] = a;
        seq[i] = b;
        changed = true;
      }
    }
  }
}

}  // namespace detail

// Element of B_n in left normal form Delta^p x_1 ... x_r.
class Braid {
 public:
  Braid() = default;
  explicit Braid(int n) : n_(SimpleElement(n).strands()) {}

  static Braid identity(int n) { return Braid(n); }

  static Braid delta_power(int n, int k) {
    Braid b(n);
    b.inf_ = k;
    return b;
  }

  static Braid from_simple(const SimpleElement& s) {
    Braid b(s.strands());
    if (s.is_delta())
      b.inf_ = 1;
    else if (!s.is_identity())
      b.factors_.push_back(s);
    return b;
  }

  // Delta^p times the product of an arbitrary sequence of simple elements.
  static Braid from_factors(int n, int p, const std::vector<SimpleElement>& seq) {
    Braid b(n);
    b.inf_ = p;
    for (const auto& s : seq) {
      if (s.strands() != n) throw std::invalid_argument("strand counts differ");
      detail::append_weighted(b.factors_, s);
    }
    b.finish();
    return b;
  }

  static Braid atom(int n, int i) { return from_simple(SimpleElement::atom(n, i)); }

  static Braid atom_inverse(int n, int i) {
    SimpleElement a = SimpleElement::atom(n, i);
    return from_factors(n, -1, {tau(right_complement(a))});
  }

  int strands() const { return n_; }
  int inf() const { return inf_; }
  int sup() const { return inf_ + canonical_length(); }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  const std::vector<SimpleElement>& factors() const { return factors_; }
  bool is_identity() const { return inf_ == 0 && factors_.empty(); }
  bool is_delta_power() const { return factors_.empty(); }

  // inf >= 0
  bool is_positive() const { return inf_ >= 0; }

  friend Braid operator*(const Braid& x, const Braid& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("strand counts differ");
    Braid out(x.n_);
    out.inf_ = x.inf_ + y.inf_;
    out.factors_.reserve(x.factors_.size() + y.factors_.size());
    for (const auto& f : x.factors_) out.factors_.push_back(tau(f, y.inf_));
    for (const auto& f : y.factors_) detail::append_weighted(out.factors_, f);
    out.finish();
    return out;
  }

  Braid& operator*=(const Braid& y) { return *this = *this * y; }

  Braid inverse() const {
    Braid out(n_);
    const int r = canonical_length();
    out.inf_ = -inf_ - r;
    for (int i = r; i >= 1; --i)
      out.factors_.push_back(tau(right_complement(factors_[i - 1]), -inf_ - i));
    out.finish();
    return out;
  }

  // Delta^{-k} x Delta^k
  Braid tau_power(int k) const {
    Braid out = *this;
    for (auto& f : out.factors_) f = tau(f, k);
    return out;
  }

  friend bool operator==(const Braid& a, const Braid& b) {
    return a.n_ == b.n_ && a.inf_ == b.inf_ && a.factors_ == b.factors_;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(inf_) * 1000003u + n_;
    for (const auto& f : factors_) h = h * 1099511628211ull ^ f.hash();
    return h;
  }

 private:
  void finish() {
    detail::settle(factors_);
    std::size_t lead = 0;
    while (lead < factors_.size() && factors_[lead].is_delta()) ++lead;
    if (lead > 0) {
      inf_ += static_cast<int>(lead);
      factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(lead));
    }
    while (!factors_.empty() && factors_.back().is_identity()) factors_.pop_back();
  }

  int n_ = 0;
  int inf_ = 0;
  std::vector<SimpleElement> factors_;
};

inline Braid power(const Braid& x, int k) {
  Braid base = k < 0 ? x.inverse() : x;
  long long e = k < 0 ? -static_cast<long long>(k) : k;
  Braid acc = Braid::identity(x.strands());
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

// c^{-1} x c
inline Braid conjugate(const Braid& x, const Braid& c) { return c.inverse() * x * c; }

inline Braid conjugate(const Braid& x, const SimpleElement& s) {
  return conjugate(x, Braid::from_simple(s));
}

// tau^{-p}(x_1), or the identity when there are no factors
inline SimpleElement initial_factor(const Braid& x) {
  if (x.factors().empty()) return SimpleElement::identity(x.strands());
  return tau(x.factors().front(), -x.inf());
}

// x_r, or Delta when there are no factors
inline SimpleElement final_factor(const Braid& x) {
  if (x.factors().empty()) return SimpleElement::delta(x.strands());
  return x.factors().back();
}

// tau^{-p}(x_1 ... x_r): the positive part moved to the left of Delta^p
inline Braid interior(const Braid& x) {
  std::vector<SimpleElement> f;
  for (const auto& s : x.factors()) f.push_back(tau(s, -x.inf()));
  return Braid::from_factors(x.strands(), 0, f);
}

// u is a prefix of v
inline bool prefix_leq(const Braid& u, const Braid& v) { return (u.inverse() * v).inf() >= 0; }

// Greatest common prefix of two positive elements.
inline Braid positive_meet(const Braid& a, const Braid& b) {
  if (!a.is_positive() || !b.is_positive()) throw std::invalid_argument("positive elements required");
  const int n = a.strands();
  auto head = [n](const Braid& x) {
    if (x.inf() > 0) return SimpleElement::delta(n);
    return x.factors().empty() ? SimpleElement::identity(n) : x.factors().front();
  };
  Braid g = Braid::identity(n);
  Braid ra = a, rb = b;
  for (;;) {
    SimpleElement m = meet(head(ra), head(rb));
    if (m.is_identity()) return g;
    Braid mb = Braid::from_simple(m);
    Braid mi = mb.inverse();
    g = g * mb;
    ra = mi * ra;
    rb = mi * rb;
  }
}

// Meet of a simple element with a positive element.
inline SimpleElement simple_meet(const SimpleElement& s, const Braid& w) {
  if (!w.is_positive()) throw std::invalid_argument("positive element required");
  if (w.inf() > 0) return s;
  if (w.factors().empty()) return SimpleElement::identity(s.strands());
  return meet(s, w.factors().front());
}

// The element as a simple element; throws if it is not one.
inline SimpleElement as_simple(const Braid& x) {
  if (x.inf() == 1 && x.factors().empty()) return SimpleElement::delta(x.strands());
  if (x.inf() == 0 && x.factors().empty()) return SimpleElement::identity(x.strands());
  if (x.inf() == 0 && x.factors().size() == 1) return x.factors().front();
  throw std::domain_error("element is not simple");
}

inline Braid multiply(const Braid& x, const Braid& y) { return x * y; }
inline Braid tau_element(const Braid& x, int k) { return x.tau_power(k); }

}  // namespace garside

template <>
struct std::hash<garside::Braid> {
  std::size_t operator()(const garside::Braid& b) const noexcept { return b.hash(); }
};
