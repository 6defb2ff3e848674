#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "garside/conjugacy.hpp"
#include "garside/uss_graph.hpp"
#include "garside/word.hpp"

namespace garside {

struct ConjugacyResult {
  enum class Basis { witness, invariants_differ, components_disjoint, not_in_uss, class_exhausted };

  bool conjugate = false;
  std::optional<ConjugacyWitness> witness;
  Basis basis = Basis::witness;
};

namespace detail {

inline void require_same_strands(const Braid& x, const Braid& y) {
  if (x.strands() != y.strands()) throw std::invalid_argument("strand counts differ");
}

inline ConjugacyResult found(const Braid& x, const Braid& y, const Braid& alpha) {
  ConjugacyWitness w{x, alpha, y};
  if (!w.verify()) throw std::logic_error("conjugating element failed verification");
  return {true, w, ConjugacyResult::Basis::witness};
}

}  // namespace detail

// Reduce both to the ultra summit set, then intersect the black component
// of X' with the grey component of Y'.
inline ConjugacyResult solve(const Braid& x, const Braid& y) {
  detail::require_same_strands(x, y);
  Reduction rx = to_uss(x);
  Reduction ry = to_uss(y);
  UssInvariants inv = invariants_of(rx.element);
  if (invariants_of(ry.element) != inv) return {false, std::nullopt, ConjugacyResult::Basis::invariants_differ};
  GraphFragment black = black_component(rx.element, inv);
  GraphFragment grey = grey_component(ry.element, inv);
  std::optional<std::size_t> best_black, best_grey;
  std::string best_key;
  for (std::size_t v = 0; v < grey.size(); ++v) {
    auto hit = black.find(grey.vertices[v]);
    if (!hit) continue;
    std::string key = to_string(grey.vertices[v]);
    if (!best_grey || key < best_key) {
      best_key = key;
      best_black = hit;
      best_grey = v;
    }
  }
  if (!best_grey) return {false, std::nullopt, ConjugacyResult::Basis::components_disjoint};
  Braid alpha = rx.witness.conjugator * black.conjugators[*best_black] *
                grey.conjugators[*best_grey].inverse() * ry.witness.conjugator.inverse();
  return detail::found(x, y, alpha);
}

// Baseline: build the whole graph of x and look up y's representative.
inline ConjugacyResult solve_full_uss(const Braid& x, const Braid& y) {
  detail::require_same_strands(x, y);
  UssGraph g = build_graph(x);
  Reduction ry = to_uss(y);
  if (invariants_of(ry.element) != g.invariants)
    return {false, std::nullopt, ConjugacyResult::Basis::invariants_differ};
  auto v = g.find(ry.element);
  if (!v) return {false, std::nullopt, ConjugacyResult::Basis::not_in_uss};
  Braid alpha = g.to_base.conjugator * g.conjugators[*v] * ry.witness.conjugator.inverse();
  return detail::found(x, y, alpha);
}

// Every simple element of B_n, identity first.
inline std::vector<SimpleElement> all_simple_elements(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<SimpleElement> out;
  do {
    out.push_back(SimpleElement::from_permutation(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Test oracle: enumerate the super summit set of x by conjugating with every
// simple element.  nullopt when more than budget elements would be needed.
inline std::optional<ConjugacyResult> brute_force_conjugate(const Braid& x, const Braid& y,
                                                            std::size_t budget = 200000) {
  detail::require_same_strands(x, y);
  Reduction rx = to_sss(x);
  Reduction ry = to_sss(y);
  UssInvariants inv = invariants_of(rx.element);
  if (invariants_of(ry.element) != inv)
    return ConjugacyResult{false, std::nullopt, ConjugacyResult::Basis::invariants_differ};
  const auto simples = all_simple_elements(x.strands());
  std::vector<Braid> seen{rx.element};
  std::vector<Braid> path{Braid::identity(x.strands())};
  std::unordered_map<Braid, std::size_t> index{{rx.element, 0}};
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] == ry.element) {
      Braid alpha = rx.witness.conjugator * path[i] * ry.witness.conjugator.inverse();
      return detail::found(x, y, alpha);
    }
    for (const auto& s : simples) {
      Braid z = conjugate(seen[i], s);
      if (invariants_of(z) != inv || index.count(z)) continue;
      if (seen.size() >= budget) return std::nullopt;
      index.emplace(z, seen.size());
      seen.push_back(z);
      path.push_back(path[i] * Braid::from_simple(s));
    }
  }
  return ConjugacyResult{false, std::nullopt, ConjugacyResult::Basis::class_exhausted};
}

// The super summit set of x, enumerated by the oracle's search.
inline std::optional<std::vector<Braid>> brute_force_sss(const Braid& x, std::size_t budget = 200000) {
  Reduction rx = to_sss(x);
  UssInvariants inv = invariants_of(rx.element);
  const auto simples = all_simple_elements(x.strands());
  std::vector<Braid> seen{rx.element};
  std::unordered_map<Braid, std::size_t> index{{rx.element, 0}};
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (const auto& s : simples) {
      Braid z = conjugate(seen[i], s);
      if (invariants_of(z) != inv || index.count(z)) continue;
      if (seen.size() >= budget) return std::nullopt;
      index.emplace(z, seen.size());
      seen.push_back(z);
    }
  }
  return seen;
}

}  // namespace garside
