#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "garside/garside.hpp"

namespace garside::cli {

enum ExitCode : int { kOk = 0, kNotConjugate = 1, kUsage = 2, kInconclusive = 3 };

struct Invocation {
  int strands = 0;
  std::vector<std::string> words;
  std::string format = "text";
  std::string output;
  int exponent = 1;
  std::size_t budget = 200000;
};

namespace detail {

inline void print_fragment(std::ostream& os, const GraphFragment& g) {
  os << "vertices " << g.size() << "\n";
  for (std::size_t v = 0; v < g.size(); ++v) os << "  " << v << " " << to_string(g.vertices[v]) << "\n";
  os << "arrows " << g.arrows.size() << "\n";
  for (const auto& a : g.arrows)
    os << "  " << a.source << " -> " << a.target << " [" << a.label.word_string() << "] "
       << color_name(a.color) << "\n";
}

inline void print_partition(std::ostream& os, const char* name,
                            const std::vector<std::vector<std::size_t>>& parts) {
  os << name << " " << parts.size() << "\n";
  for (const auto& p : parts) {
    os << " ";
    for (std::size_t v : p) os << " " << v;
    os << "\n";
  }
}

inline Braid one_word(const Invocation& inv) {
  if (inv.words.size() != 1) throw CLI::ValidationError("expected exactly one braid word");
  return parse_braid(inv.words[0], inv.strands);
}

inline int dispatch(const std::string& cmd, const Invocation& inv, std::ostream& out) {
  if (cmd == "conjugate" || cmd == "oracle") {
    if (inv.words.size() != 2) throw CLI::ValidationError("expected two braid words: X -- Y");
    if (cmd == "oracle" && inv.strands > 5) throw CLI::ValidationError("oracle is limited to n <= 5");
    Braid x = parse_braid(inv.words[0], inv.strands);
    Braid y = parse_braid(inv.words[1], inv.strands);
    std::optional<ConjugacyResult> r =
        cmd == "conjugate" ? std::optional<ConjugacyResult>(solve(x, y)) : brute_force_conjugate(x, y, inv.budget);
    if (!r) {
      out << "INCONCLUSIVE\n";
      return kInconclusive;
    }
    if (!r->conjugate) {
      out << "FAIL\n";
      return kNotConjugate;
    }
    out << to_string(r->witness->conjugator) << "\n";
    return kOk;
  }

  const Braid x = one_word(inv);
  if (cmd == "nf") {
    out << to_string(x) << "\n";
  } else if (cmd == "inv") {
    out << to_string(x.inverse()) << "\n";
  } else if (cmd == "pow") {
    out << to_string(power(x, inv.exponent)) << "\n";
  } else if (cmd == "cycle") {
    out << to_string(cycling(x)) << "\n";
  } else if (cmd == "decycle") {
    out << to_string(decycling(x)) << "\n";
  } else if (cmd == "tdecycle") {
    out << to_string(twisted_decycling(x)) << "\n";
  } else if (cmd == "sss") {
    Reduction r = to_sss(x);
    out << to_string(r.element) << "\n";
    out << "conjugator " << to_string(r.witness.conjugator) << "\n";
  } else if (cmd == "uss") {
    Reduction r = to_uss(x);
    std::vector<Braid> orbit{r.element};
    for (Braid y = cycling(r.element); !(y == r.element); y = cycling(y)) orbit.push_back(y);
    for (const auto& y : orbit) out << to_string(y) << "\n";
    out << "orbit size " << orbit.size() << "\n";
    out << "conjugator " << to_string(r.witness.conjugator) << "\n";
  } else if (cmd == "rigid") {
    out << (is_rigid(x) ? "true" : "false") << "\n";
  } else if (cmd == "periodic") {
    auto p = is_periodic(x);
    if (p)
      out << "periodic m=" << p->first << " k=" << p->second << "\n";
    else
      out << "not periodic\n";
  } else if (cmd == "graph") {
    UssGraph g = build_graph(x);
    if (inv.format == "dot") {
      out << export_dot(g);
    } else if (inv.format == "json") {
      out << export_json(g);
    } else {
      print_fragment(out, g);
      print_partition(out, "orbits", g.orbits);
      print_partition(out, "black_components", g.black_components);
      print_partition(out, "grey_components", g.grey_components);
    }
  } else if (cmd == "black" || cmd == "grey") {
    Braid y = to_uss(x).element;
    UssInvariants uinv = invariants_of(y);
    GraphFragment g = cmd == "black" ? black_component(y, uinv) : grey_component(y, uinv);
    if (inv.format == "dot")
      out << export_dot(g);
    else if (inv.format == "json")
      throw CLI::ValidationError("json output is only available for graph");
    else
      print_fragment(out, g);
  } else if (cmd == "quotient") {
    UssGraph g = build_graph(x);
    QuotientGraph q = quotient_graph(g);
    if (inv.format == "dot") {
      out << export_dot(q, g);
    } else if (inv.format == "json") {
      throw CLI::ValidationError("json output is only available for graph");
    } else {
      print_partition(out, "orbits", q.orbits);
      out << "arrows " << q.arrows.size() << "\n";
      for (const auto& a : q.arrows)
        out << "  " << a.source << " -> " << a.target << " [" << g.arrows[a.representative].label.word_string()
            << "] " << color_name(a.color) << " x" << a.class_size << "\n";
    }
  }
  return kOk;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ultra summit set tools for braid groups"};
  app.require_subcommand(1);
  Invocation inv;

  struct Command {
    const char* name;
    const char* help;
    bool graphlike;
  };
  const std::vector<Command> commands = {
      {"nf", "left normal form", false},
      {"inv", "inverse", false},
      {"pow", "power (-k)", false},
      {"cycle", "cycling", false},
      {"decycle", "decycling", false},
      {"tdecycle", "twisted decycling", false},
      {"sss", "super summit representative and conjugator", false},
      {"uss", "ultra summit cycling orbit and conjugator", false},
      {"rigid", "rigidity test", false},
      {"periodic", "periodicity test", false},
      {"graph", "whole ultra summit graph", true},
      {"black", "black component of the ultra summit representative", true},
      {"grey", "grey component of the ultra summit representative", true},
      {"quotient", "quotient of the graph by cycling and transport", true},
      {"conjugate", "conjugacy search: X -- Y", false},
      {"oracle", "brute-force conjugacy search (n <= 5): X -- Y", false},
  };
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("-n,--strands", inv.strands, "number of strands")->required()->check(CLI::Range(2, kMaxStrands));
    sub->add_option("words", inv.words, "braid words");
    sub->add_option("-o,--output", inv.output, "write to a file instead of stdout");
    if (s.graphlike)
      sub->add_option("--format", inv.format, "text, dot or json")
          ->check(CLI::IsMember({"text", "dot", "json"}));
    if (std::string(s.name) == "pow") sub->add_option("-k,--exponent", inv.exponent, "exponent")->required();
    if (std::string(s.name) == "oracle") sub->add_option("--budget", inv.budget, "element budget");
  }

  // everything after a bare "--" is an operand
  std::vector<const char*> head;
  std::vector<std::string> tail;
  bool split = false;
  for (int i = 0; i < argc; ++i) {
    if (!split && i > 0 && std::string(argv[i]) == "--") {
      split = true;
      continue;
    }
    if (split)
      tail.emplace_back(argv[i]);
    else
      head.push_back(argv[i]);
  }

  try {
    app.parse(static_cast<int>(head.size()), head.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  inv.words.insert(inv.words.end(), tail.begin(), tail.end());
  const std::string cmd = app.get_subcommands().front()->get_name();
  std::ostringstream buffer;
  int code = kOk;
  try {
    code = detail::dispatch(cmd, inv, buffer);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (inv.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(inv.output);
    if (!file) {
      err << "error: cannot open " << inv.output << "\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace garside::cli
