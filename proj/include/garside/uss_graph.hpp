#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "garside/conjugacy.hpp"

namespace garside {

enum class ArrowColor { black, grey, bicolored };

inline bool has_black(ArrowColor c) { return c != ArrowColor::grey; }
inline bool has_grey(ArrowColor c) { return c != ArrowColor::black; }

inline const char* color_name(ArrowColor c) {
  switch (c) {
    case ArrowColor::black: return "black";
    case ArrowColor::grey: return "grey";
    case ArrowColor::bicolored: return "bicolored";
  }
  return "?";
}

// black: label <= iota(y); grey: phi(y) label simple
inline ArrowColor arrow_color(const Braid& y, const SimpleElement& label) {
  bool black = is_prefix(label, initial_factor(y));
  bool grey = is_prefix(label, right_complement(final_factor(y)));
  if (black && grey) return ArrowColor::bicolored;
  if (black) return ArrowColor::black;
  if (grey) return ArrowColor::grey;
  throw std::logic_error("label is neither black nor grey");
}

struct LabeledArrow {
  SimpleElement label;
  ArrowColor color;
};

inline std::vector<LabeledArrow> colored(const Braid& y, const std::vector<SimpleElement>& labels) {
  std::vector<LabeledArrow> out;
  for (const auto& s : labels) out.push_back({s, arrow_color(y, s)});
  return out;
}

// All arrows leaving y, in the order of their smallest generating atom.
inline std::vector<LabeledArrow> arrows_at(const Braid& y, const UssInvariants& inv) {
  return colored(y, minimal_simple_elements(y, inv));
}

// Arrows leaving y whose label is a prefix of iota(y).
inline std::vector<LabeledArrow> black_arrows_at(const Braid& y, const UssInvariants& inv) {
  return colored(y, minimal_among(atom_conjugators(y, inv, AtomSide::black)));
}

// Arrows leaving y with phi(y) label simple.
inline std::vector<LabeledArrow> grey_arrows_at(const Braid& y, const UssInvariants& inv) {
  return colored(y, minimal_among(atom_conjugators(y, inv, AtomSide::grey)));
}

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  SimpleElement label;
  ArrowColor color = ArrowColor::black;
};

// Vertices reachable from a root, with conjugators from the root.
struct GraphFragment {
  Braid root;
  std::vector<Braid> vertices;
  std::vector<Braid> conjugators;  // root^conjugators[i] == vertices[i]
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::size_t>> outgoing;

  std::optional<std::size_t> find(const Braid& y) const {
    auto it = index_.find(y);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> arrow_from(std::size_t source, const SimpleElement& label) const {
    for (std::size_t a : outgoing[source])
      if (arrows[a].label == label) return a;
    return std::nullopt;
  }

  std::size_t size() const { return vertices.size(); }

  std::size_t add_vertex(const Braid& y, const Braid& conj) {
    auto [it, fresh] = index_.emplace(y, vertices.size());
    if (fresh) {
      vertices.push_back(y);
      conjugators.push_back(conj);
      outgoing.emplace_back();
    }
    return it->second;
  }

  void add_arrow(std::size_t source, std::size_t target, const SimpleElement& label, ArrowColor color) {
    if (arrow_from(source, label)) return;
    outgoing[source].push_back(arrows.size());
    arrows.push_back({source, target, label, color});
  }

 private:
  std::unordered_map<Braid, std::size_t> index_;
};

namespace detail {

template <class ArrowsAt>
GraphFragment explore(const Braid& root, ArrowsAt arrows_at_vertex) {
  GraphFragment g;
  g.root = root;
  g.add_vertex(root, Braid::identity(root.strands()));
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const Braid y = g.vertices[v];
    for (const auto& a : arrows_at_vertex(y)) {
      Braid t = conjugate(y, a.label);
      std::size_t id = g.add_vertex(t, g.conjugators[v] * Braid::from_simple(a.label));
      g.add_arrow(v, id, a.label, a.color);
    }
  }
  return g;
}

inline std::vector<std::vector<std::size_t>> components(const GraphFragment& g, bool black) {
  std::vector<std::size_t> parent(g.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& a : g.arrows) {
    if (black ? !has_black(a.color) : !has_grey(a.color)) continue;
    std::size_t x = root(a.source), y = root(a.target);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<std::vector<std::size_t>> out;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto [it, fresh] = slot.emplace(root(v), out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(v);
  }
  return out;
}

}  // namespace detail

// Black component: closure of y under minimal simple elements below iota.
inline GraphFragment black_component(const Braid& y, const UssInvariants& inv) {
  return detail::explore(y, [&](const Braid& v) { return black_arrows_at(v, inv); });
}

// Grey component: closure of y under minimal simple elements a with phi a simple.
inline GraphFragment grey_component(const Braid& y, const UssInvariants& inv) {
  return detail::explore(y, [&](const Braid& v) { return grey_arrows_at(v, inv); });
}

struct UssGraph : GraphFragment {
  UssInvariants invariants;
  ConjugacyWitness to_base;  // input -> root
  std::vector<std::size_t> orbit_of;
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> cycling_image;
  std::vector<std::vector<std::size_t>> black_components;
  std::vector<std::vector<std::size_t>> grey_components;

  ConjugacyWitness base_witness(std::size_t v) const { return {root, conjugators[v], vertices[v]}; }
};

inline UssGraph build_graph(const Braid& x) {
  Reduction r = to_uss(x);
  UssInvariants inv = invariants_of(r.element);
  UssGraph g;
  static_cast<GraphFragment&>(g) =
      detail::explore(r.element, [&](const Braid& v) { return arrows_at(v, inv); });
  g.invariants = inv;
  g.to_base = r.witness;

  g.cycling_image.resize(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto c = g.find(cycling(g.vertices[v]));
    if (!c) throw std::logic_error("ultra summit set not closed under cycling");
    g.cycling_image[v] = *c;
  }
  const std::size_t none = static_cast<std::size_t>(-1);
  g.orbit_of.assign(g.size(), none);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.orbit_of[v] != none) continue;
    std::vector<std::size_t> orbit;
    std::size_t w = v;
    do {
      g.orbit_of[w] = g.orbits.size();
      orbit.push_back(w);
      w = g.cycling_image[w];
    } while (w != v);
    g.orbits.push_back(std::move(orbit));
  }
  g.black_components = detail::components(g, true);
  g.grey_components = detail::components(g, false);
  return g;
}

// Minimal simple element at y that is a prefix of t (t != 1 with y^t in USS).
inline SimpleElement arrow_below(const Braid& y, const UssInvariants& inv, const SimpleElement& t) {
  for (const auto& s : minimal_simple_elements(y, inv))
    if (is_prefix(s, t)) return s;
  throw std::logic_error("no arrow below the given element");
}

struct PathSplit {
  std::vector<SimpleElement> first;
  std::vector<SimpleElement> second;
};

namespace detail {

inline SimpleElement head_of(const Braid& a) {
  if (a.inf() > 0) return SimpleElement::delta(a.strands());
  if (a.factors().empty()) return SimpleElement::identity(a.strands());
  return a.factors().front();
}

// Splits a positive conjugator with inf 0 into arrows, factor by factor.
inline void split_into_arrows(Braid& cur, const UssInvariants& inv, const Braid& alpha,
                              std::vector<SimpleElement>& out) {
  for (SimpleElement s : alpha.factors()) {
    while (!s.is_identity()) {
      SimpleElement a = arrow_below(cur, inv, s);
      out.push_back(a);
      cur = conjugate(cur, a);
      s = left_quotient(a, s);
    }
  }
}

inline void check_path_input(const Braid& y, const Braid& alpha, const UssInvariants& inv) {
  if (y.factors().empty()) throw std::invalid_argument("canonical length must be positive");
  if (!alpha.is_positive()) throw std::invalid_argument("conjugator must be positive");
  if (!uss_membership(y, inv) || !uss_membership(conjugate(y, alpha), inv))
    throw std::invalid_argument("endpoints must lie in the ultra summit set");
}

}  // namespace detail

// alpha = g_1...g_s b_1...b_t along a grey path followed by a black path.
inline PathSplit decompose_grey_black(const Braid& y, const Braid& alpha) {
  UssInvariants inv = invariants_of(y);
  detail::check_path_input(y, alpha, inv);
  PathSplit out;
  Braid cur = y, a = alpha;
  auto peel = [&](const SimpleElement& g) {
    out.first.push_back(g);
    cur = conjugate(cur, g);
    a = Braid::from_simple(g).inverse() * a;
  };
  while (a.inf() > 0) {
    auto greys = grey_arrows_at(cur, inv);
    peel(greys.front().label);
  }
  for (;;) {
    SimpleElement t = meet(right_complement(final_factor(cur)), detail::head_of(a));
    if (t.is_identity()) break;
    peel(arrow_below(cur, inv, t));
  }
  detail::split_into_arrows(cur, inv, a, out.second);
  return out;
}

// alpha = b_1...b_t g_1...g_s along a black path followed by a grey path.
inline PathSplit decompose_black_grey(const Braid& y, const Braid& alpha) {
  UssInvariants inv = invariants_of(y);
  detail::check_path_input(y, alpha, inv);
  PathSplit out;
  Braid cur = y, a = alpha;
  auto peel = [&](const SimpleElement& b) {
    out.first.push_back(b);
    cur = conjugate(cur, b);
    a = Braid::from_simple(b).inverse() * a;
  };
  while (a.inf() > 0) {
    auto blacks = black_arrows_at(cur, inv);
    peel(blacks.front().label);
  }
  for (;;) {
    // the complement of the final factor of cur^{-1} is iota(cur)
    SimpleElement t = meet(initial_factor(cur), detail::head_of(a));
    if (t.is_identity()) break;
    peel(arrow_below(cur, inv, t));
  }
  detail::split_into_arrows(cur, inv, a, out.second);
  return out;
}

struct QuotientArrow {
  std::size_t source = 0;  // orbit ids
  std::size_t target = 0;
  ArrowColor color = ArrowColor::black;
  std::size_t representative = 0;  // arrow id in the full graph
  std::size_t class_size = 0;
};

struct QuotientGraph {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<QuotientArrow> arrows;
  std::vector<std::size_t> class_of;  // full-graph arrow id -> quotient arrow id
};

}  // namespace garside
