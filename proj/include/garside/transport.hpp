#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "garside/uss_graph.hpp"

namespace garside {

// s^(1) = iota(y)^{-1} s iota(y^s), conjugating c(y) to c(y^s).
inline SimpleElement transport(const Braid& y, const SimpleElement& s) {
  Braid t = Braid::from_simple(initial_factor(y)).inverse() * Braid::from_simple(s) *
            Braid::from_simple(initial_factor(conjugate(y, s)));
  return as_simple(t);
}

namespace detail {

inline void require_rigid_long(const Braid& y) {
  if (!is_rigid(y) || y.canonical_length() < 2)
    throw std::invalid_argument("a rigid element of canonical length > 1 is required");
}

}  // namespace detail

// g^[b] = d(phi(y^b)) ^ (b^{-1} g iota(y^g))
inline SimpleElement partial_transport_grey(const Braid& y, const SimpleElement& g,
                                            const SimpleElement& b) {
  detail::require_rigid_long(y);
  if (!is_prefix(b, initial_factor(y))) throw std::invalid_argument("b is not black at y");
  if (!is_prefix(g, right_complement(final_factor(y)))) throw std::invalid_argument("g is not grey at y");
  Braid yb = conjugate(y, b);
  Braid yg = conjugate(y, g);
  Braid w = Braid::from_simple(b).inverse() * Braid::from_simple(g) *
            Braid::from_simple(initial_factor(yg));
  return simple_meet(right_complement(final_factor(yb)), w);
}

// b^[g] = iota(y^g) ^ (g^{-1} b d(phi(y^b)))
inline SimpleElement partial_transport_black(const Braid& y, const SimpleElement& b,
                                             const SimpleElement& g) {
  detail::require_rigid_long(y);
  if (!is_prefix(b, initial_factor(y))) throw std::invalid_argument("b is not black at y");
  if (!is_prefix(g, right_complement(final_factor(y)))) throw std::invalid_argument("g is not grey at y");
  Braid yb = conjugate(y, b);
  Braid yg = conjugate(y, g);
  Braid w = Braid::from_simple(g).inverse() * Braid::from_simple(b) *
            Braid::from_simple(right_complement(final_factor(yb)));
  return simple_meet(initial_factor(yg), w);
}

struct SquareCompletion {
  SimpleElement grey;   // g', grey at x
  SimpleElement black;  // b', black at x^{g'}
};

// For b black at x and g grey at x^b: g' = d(phi(x)) ^ bg and b' = g'^{-1} b g.
inline SquareCompletion complete_square_bg(const Braid& x, const SimpleElement& b,
                                           const SimpleElement& g) {
  detail::require_rigid_long(x);
  if (!is_prefix(b, initial_factor(x))) throw std::invalid_argument("b is not black at x");
  Braid xb = conjugate(x, b);
  if (!is_prefix(g, right_complement(final_factor(xb))))
    throw std::invalid_argument("g is not grey at x^b");
  if (!product_is_simple(b, g)) throw std::logic_error("bg is not simple");
  SimpleElement bg = compose(b, g);
  SimpleElement gp = meet(right_complement(final_factor(x)), bg);
  return {gp, left_quotient(gp, bg)};
}

// Vertices are cycling orbits; arrows are orbits of arrows under the shift
// (y, s) -> (c(y), s^(1)).
inline QuotientGraph quotient_graph(const UssGraph& g) {
  const std::size_t m = g.arrows.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t a = 0; a < m; ++a) {
    const Arrow& arr = g.arrows[a];
    SimpleElement s1 = transport(g.vertices[arr.source], arr.label);
    auto image = g.arrow_from(g.cycling_image[arr.source], s1);
    if (!image) throw std::logic_error("transport did not map an arrow to an arrow");
    if (g.arrows[*image].color != arr.color) throw std::logic_error("transport changed a color");
    std::size_t x = root(a), y = root(*image);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  QuotientGraph q;
  q.orbits = g.orbits;
  q.class_of.assign(m, 0);
  std::vector<std::size_t> slot(m, static_cast<std::size_t>(-1));
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t r = root(a);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = q.arrows.size();
      const Arrow& arr = g.arrows[a];
      q.arrows.push_back({g.orbit_of[arr.source], g.orbit_of[arr.target], arr.color, a, 0});
    }
    q.class_of[a] = slot[r];
    ++q.arrows[slot[r]].class_size;
  }
  return q;
}

}  // namespace garside
