#pragma once

#include <sstream>
#include <string>

#include "garside/transport.hpp"
#include "garside/uss_graph.hpp"
#include "garside/word.hpp"
#include "json.hpp"

namespace garside {

namespace detail {

inline std::string dot_edge_attributes(ArrowColor c) {
  switch (c) {
    case ArrowColor::black: return "color=\"black\"";
    case ArrowColor::grey: return "color=\"gray50\"";
    case ArrowColor::bicolored: return "color=\"black:gray50\", style=\"dashed\"";
  }
  return {};
}

}  // namespace detail

inline std::string export_dot(const GraphFragment& g) {
  std::ostringstream os;
  os << "digraph uss {\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    os << "  v" << v << " [label=\"" << to_string(g.vertices[v]) << "\"];\n";
  for (const auto& a : g.arrows)
    os << "  v" << a.source << " -> v" << a.target << " [label=\"" << a.label.word_string() << "\", "
       << detail::dot_edge_attributes(a.color) << "];\n";
  os << "}\n";
  return os.str();
}

inline std::string export_dot(const QuotientGraph& q, const UssGraph& g) {
  std::ostringstream os;
  os << "digraph quotient {\n";
  for (std::size_t o = 0; o < q.orbits.size(); ++o)
    os << "  o" << o << " [label=\"orbit " << o << " (" << q.orbits[o].size() << ")\"];\n";
  for (const auto& a : q.arrows)
    os << "  o" << a.source << " -> o" << a.target << " [label=\""
       << g.arrows[a.representative].label.word_string() << "\", "
       << detail::dot_edge_attributes(a.color) << "];\n";
  os << "}\n";
  return os.str();
}

inline nlohmann::ordered_json to_json(const UssGraph& g) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["n"] = g.invariants.strands;
  j["base"] = to_string(g.root);
  j["inf"] = g.invariants.inf;
  j["len"] = g.invariants.length;
  ordered_json vertices = ordered_json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    ordered_json vj;
    vj["id"] = v;
    vj["normal_form"] = to_string(g.vertices[v]);
    vj["orbit"] = g.orbit_of[v];
    vj["rigid"] = is_rigid(g.vertices[v]);
    vertices.push_back(std::move(vj));
  }
  j["vertices"] = std::move(vertices);
  ordered_json arrows = ordered_json::array();
  for (const auto& a : g.arrows) {
    ordered_json aj;
    aj["source"] = a.source;
    aj["target"] = a.target;
    aj["label"] = a.label.word_string();
    aj["color"] = color_name(a.color);
    arrows.push_back(std::move(aj));
  }
  j["arrows"] = std::move(arrows);
  j["black_components"] = g.black_components;
  j["grey_components"] = g.grey_components;
  return j;
}

inline std::string export_json(const UssGraph& g) { return to_json(g).dump(2) + "\n"; }

}  // namespace garside
