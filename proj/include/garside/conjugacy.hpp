#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "garside/braid.hpp"

namespace garside {

// source^conjugator == target, with x^c = c^{-1} x c
struct ConjugacyWitness {
  Braid source;
  Braid conjugator;
  Braid target;

  bool verify() const { return conjugate(source, conjugator) == target; }
};

struct UssInvariants {
  int strands = 0;
  int inf = 0;
  int length = 0;

  friend bool operator==(const UssInvariants&, const UssInvariants&) = default;
};

inline UssInvariants invariants_of(const Braid& x) {
  return {x.strands(), x.inf(), x.canonical_length()};
}

inline Braid cycling(const Braid& x) {
  if (x.factors().empty()) return x;
  const auto& f = x.factors();
  std::vector<SimpleElement> seq(f.begin() + 1, f.end());
  seq.push_back(tau(f.front(), -x.inf()));
  return Braid::from_factors(x.strands(), x.inf(), seq);
}

inline Braid decycling(const Braid& x) {
  if (x.factors().empty()) return x;
  const auto& f = x.factors();
  std::vector<SimpleElement> seq;
  seq.push_back(tau(f.back(), x.inf()));
  seq.insert(seq.end(), f.begin(), f.end() - 1);
  return Braid::from_factors(x.strands(), x.inf(), seq);
}

inline Braid twisted_decycling(const Braid& x) { return decycling(x).tau_power(1); }

// conjugation by a prefix of the initial factor
inline Braid partial_cycling(const Braid& x, const SimpleElement& s) {
  if (!is_prefix(s, initial_factor(x))) throw std::invalid_argument("not a prefix of the initial factor");
  return conjugate(x, s);
}

// conjugation by a prefix of the complement of the final factor
inline Braid partial_twisted_decycling(const Braid& x, const SimpleElement& s) {
  if (!is_prefix(s, right_complement(final_factor(x))))
    throw std::invalid_argument("not a prefix of the complement of the final factor");
  return conjugate(x, s);
}

struct Reduction {
  Braid element;
  ConjugacyWitness witness;
};

struct PartialCyclingReduction {
  Braid element;
  ConjugacyWitness witness;
  std::vector<SimpleElement> prefixes;
};

namespace detail {

struct Move {
  Braid next;
  std::vector<SimpleElement> pieces;  // simple conjugators, in order
  Braid conjugator;
};

// Follows step() from cur until better(next, cur) or the trajectory closes.
// Only an improving run is committed.
template <class Step, class Better>
bool improve_along(Braid& cur, Braid& conj, std::vector<SimpleElement>* pieces, Step step,
                   Better better) {
  std::unordered_set<Braid> seen{cur};
  Braid y = cur;
  Braid c = Braid::identity(cur.strands());
  std::vector<SimpleElement> run;
  for (;;) {
    Move m = step(y);
    c = c * m.conjugator;
    if (pieces) run.insert(run.end(), m.pieces.begin(), m.pieces.end());
    if (better(m.next, cur)) {
      cur = m.next;
      conj = conj * c;
      if (pieces) pieces->insert(pieces->end(), run.begin(), run.end());
      return true;
    }
    if (!seen.insert(m.next).second) return false;
    y = m.next;
  }
}

inline Move cycling_move(const Braid& y) {
  SimpleElement s = initial_factor(y);
  return {cycling(y), {s}, Braid::from_simple(s)};
}

inline Move decycling_move(const Braid& y) {
  return {decycling(y), {}, Braid::from_simple(final_factor(y)).inverse()};
}

inline bool inf_grew(const Braid& a, const Braid& b) { return a.inf() > b.inf(); }
inline bool sup_shrank(const Braid& a, const Braid& b) { return a.sup() < b.sup(); }

// Cycles from an element of the super summit set to the first element of
// its closed cycling orbit.
inline void close_orbit(Braid& cur, Braid& conj, std::vector<SimpleElement>* pieces) {
  if (cur.factors().empty()) return;
  std::vector<Braid> traj{cur};
  std::unordered_map<Braid, std::size_t> index{{cur, 0}};
  std::size_t start = 0;
  for (;;) {
    Braid next = cycling(traj.back());
    auto it = index.find(next);
    if (it != index.end()) {
      start = it->second;
      break;
    }
    index.emplace(next, traj.size());
    traj.push_back(std::move(next));
  }
  for (std::size_t k = 0; k < start; ++k) {
    SimpleElement s = initial_factor(traj[k]);
    conj = conj * Braid::from_simple(s);
    if (pieces) pieces->push_back(s);
  }
  cur = traj[start];
}

}  // namespace detail

inline Reduction to_sss(const Braid& x) {
  Braid cur = x;
  Braid conj = Braid::identity(x.strands());
  while (!cur.factors().empty() &&
         detail::improve_along(cur, conj, nullptr, detail::cycling_move, detail::inf_grew)) {
  }
  while (!cur.factors().empty() &&
         detail::improve_along(cur, conj, nullptr, detail::decycling_move, detail::sup_shrank)) {
  }
  return {cur, {x, conj, cur}};
}

inline Reduction to_uss(const Braid& x) {
  Reduction r = to_sss(x);
  Braid cur = r.element;
  Braid conj = r.witness.conjugator;
  detail::close_orbit(cur, conj, nullptr);
  return {cur, {x, conj, cur}};
}

inline UssInvariants summit_invariants(const Braid& x) { return invariants_of(to_sss(x).element); }

// One decycling of tau^{-p}(x), realised as r-1 partial cyclings of x by the
// factors of tau^{-p}(x).  Requires x to have maximal infimum.
inline std::pair<Braid, std::vector<SimpleElement>> decycling_by_partial_cyclings(const Braid& x) {
  const int p = x.inf();
  const auto& f = x.factors();
  std::vector<SimpleElement> steps;
  Braid cur = x;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    SimpleElement y = tau(f[i], -p);
    if (!is_prefix(y, initial_factor(cur)))
      throw std::logic_error("decycling chain left the partial cycling regime");
    cur = conjugate(cur, y);
    steps.push_back(y);
  }
  return {cur, steps};
}

inline PartialCyclingReduction reduce_by_partial_cyclings(const Braid& x) {
  Braid cur = x;
  Braid conj = Braid::identity(x.strands());
  std::vector<SimpleElement> pieces;
  while (!cur.factors().empty() &&
         detail::improve_along(cur, conj, &pieces, detail::cycling_move, detail::inf_grew)) {
  }
  auto chain_move = [](const Braid& y) {
    auto [next, steps] = decycling_by_partial_cyclings(y);
    Braid c = Braid::identity(y.strands());
    for (const auto& s : steps) c = c * Braid::from_simple(s);
    return detail::Move{next, steps, c};
  };
  while (!cur.factors().empty() &&
         detail::improve_along(cur, conj, &pieces, chain_move, detail::sup_shrank)) {
  }
  detail::close_orbit(cur, conj, &pieces);
  return {cur, {x, conj, cur}, pieces};
}

inline bool uss_membership(const Braid& z, const UssInvariants& inv) {
  if (invariants_of(z) != inv) return false;
  if (z.factors().empty()) return true;
  std::unordered_set<Braid> seen;
  Braid y = cycling(z);
  while (!(y == z)) {
    if (!seen.insert(y).second) return false;
    y = cycling(y);
  }
  return true;
}

namespace detail {

// Data for the smallest simple s >= u with y^s in the super summit set.
class SummitClosure {
 public:
  explicit SummitClosure(const Braid& y) : p_(y.inf()), z_(y.factors()) {
    Braid yi = y.inverse();
    p_inv_ = yi.inf();
    z_inv_ = yi.factors();
  }

  // Smallest simple s with u <= s such that y^s keeps inf and sup.  For
  // y = Delta^p Z, inf(y^s) >= p iff tau^p(s) <= Z s iff Z\tau^p(s) <= s;
  // sup is handled through y^{-1}.
  SimpleElement operator()(SimpleElement s) const {
    for (;;) {
      SimpleElement s1 = join(s, through(z_, tau(s, p_)));
      SimpleElement s2 = join(s1, through(z_inv_, tau(s1, p_inv_)));
      if (s2 == s) return s;
      s = s2;
    }
  }

 private:
  // (z_1 ... z_k)^{-1} ((z_1 ... z_k) v lcm v)
  static SimpleElement through(const std::vector<SimpleElement>& z, SimpleElement v) {
    for (const auto& f : z) {
      if (v.is_identity()) break;
      v = left_quotient(f, join(f, v));
    }
    return v;
  }

  int p_;
  std::vector<SimpleElement> z_;
  int p_inv_ = 0;
  std::vector<SimpleElement> z_inv_;
};

// Smallest simple s with u <= s <= bound and y^s in the ultra summit set.
// bound must itself conjugate y into the ultra summit set.  Candidates are
// visited in order of length; every candidate is closed under the super
// summit condition, which is necessary for membership.
inline SimpleElement min_uss_conjugator_below(const Braid& y, const SimpleElement& u,
                                              const UssInvariants& inv,
                                              const SimpleElement& bound,
                                              const SummitClosure& closure) {
  const int n = y.strands();
  using Entry = std::pair<int, SimpleElement>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  std::unordered_set<SimpleElement> visited;
  SimpleElement start = closure(u);
  if (!is_prefix(start, bound)) throw std::logic_error("bound does not dominate the closure");
  queue.emplace(start.length(), start);
  visited.insert(start);
  while (!queue.empty()) {
    SimpleElement s = queue.top().second;
    queue.pop();
    if (uss_membership(conjugate(y, s), inv)) return s;
    for (int b = 1; b < n; ++b) {
      if (s.has_right_atom(b)) continue;
      SimpleElement t = s;
      t.append_atom(b);
      if (!is_prefix(t, bound)) continue;
      t = closure(t);
      if (!is_prefix(t, bound)) continue;
      if (visited.insert(t).second) queue.emplace(t.length(), t);
    }
  }
  throw std::logic_error("no ultra summit conjugator below the bound");
}

}  // namespace detail

// c_y(u): the smallest simple s with u <= s and y^s in the ultra summit set.
inline SimpleElement min_uss_conjugator(const Braid& y, const SimpleElement& u,
                                        const UssInvariants& inv) {
  if (u.is_identity()) throw std::invalid_argument("u must be nontrivial");
  if (!uss_membership(y, inv)) throw std::invalid_argument("y is not in the ultra summit set");
  detail::SummitClosure closure(y);
  return detail::min_uss_conjugator_below(y, u, inv, SimpleElement::delta(y.strands()), closure);
}

enum class AtomSide { black, grey, both };

// c_y(a) for each atom a on the requested side (prefix of the initial factor,
// prefix of the complement of the final factor, or either).  Entry i is for
// sigma_{i+1}; atoms off the requested side are left empty.
inline std::vector<std::optional<SimpleElement>> atom_conjugators(const Braid& y,
                                                                   const UssInvariants& inv,
                                                                   AtomSide side) {
  const int n = y.strands();
  std::vector<std::optional<SimpleElement>> out(n - 1);
  if (y.factors().empty()) return out;
  SimpleElement iota = initial_factor(y);
  SimpleElement dphi = right_complement(final_factor(y));
  detail::SummitClosure closure(y);
  for (int i = 1; i < n; ++i) {
    bool black = iota.has_left_atom(i) && side != AtomSide::grey;
    bool grey = dphi.has_left_atom(i) && side != AtomSide::black;
    if (!black && !grey) continue;
    SimpleElement bound = black && grey ? meet(iota, dphi) : black ? iota : dphi;
    out[i - 1] = detail::min_uss_conjugator_below(y, SimpleElement::atom(n, i), inv, bound, closure);
  }
  return out;
}

// Minimal elements among the computed c_y(a): c_y(a) is minimal iff every
// atom b below it has c_y(b) = c_y(a).  Result in atom order, no repeats.
inline std::vector<SimpleElement> minimal_among(const std::vector<std::optional<SimpleElement>>& cs) {
  std::vector<SimpleElement> out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!cs[i]) continue;
    const SimpleElement& c = *cs[i];
    bool minimal = true;
    for (std::size_t j = 0; j < cs.size() && minimal; ++j)
      if (c.has_left_atom(static_cast<int>(j) + 1) && (!cs[j] || !(*cs[j] == c))) minimal = false;
    if (minimal && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

inline std::vector<SimpleElement> minimal_simple_elements(const Braid& y, const UssInvariants& inv) {
  return minimal_among(atom_conjugators(y, inv, AtomSide::both));
}

inline bool is_rigid(const Braid& x) {
  if (x.factors().empty()) return false;
  return meet(initial_factor(x), right_complement(final_factor(x))).is_identity();
}

// Smallest m in 1..n with x^m = Delta^k for some k != 0.
inline std::optional<std::pair<int, int>> is_periodic(const Braid& x) {
  Braid acc = Braid::identity(x.strands());
  for (int m = 1; m <= x.strands(); ++m) {
    acc = acc * x;
    if (acc.factors().empty() && acc.inf() != 0) return std::make_pair(m, acc.inf());
  }
  return std::nullopt;
}

}  // namespace garside
