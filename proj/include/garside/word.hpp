#pragma once

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "garside/braid.hpp"

namespace garside {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One token of a braid word: sigma_i^{+-1} or Delta^k.
struct Letter {
  enum class Kind { atom, delta } kind = Kind::atom;
  int value = 0;  // signed atom index, or the Delta exponent
};

struct BraidWord {
  int strands = 0;
  std::vector<Letter> letters;
};

namespace detail {

inline int parse_int(std::string_view tok, std::string_view whole) {
  int v = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || first == tok.data() + tok.size())
    throw ParseError("malformed token '" + std::string(tok) + "' in '" + std::string(whole) + "'");
  return v;
}

}  // namespace detail

// Tokens are separated by whitespace or '.'; a token is a nonzero signed
// integer, "D", or "D^<int>".
inline BraidWord parse_word(std::string_view text, int n) {
  if (n < 2 || n > kMaxStrands) throw ParseError("strand count must be in [2, 32]");
  BraidWord w{n, {}};
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '.') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '.') ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;
    if (tok.front() == 'D') {
      int k = 1;
      if (tok.size() > 1) {
        if (tok[1] != '^' || tok.size() == 2)
          throw ParseError("malformed token '" + std::string(tok) + "'");
        k = detail::parse_int(tok.substr(2), text);
      }
      w.letters.push_back({Letter::Kind::delta, k});
      continue;
    }
    int v = detail::parse_int(tok, text);
    if (v == 0 || v >= n || v <= -n)
      throw ParseError("generator index " + std::to_string(v) + " out of range for " +
                       std::to_string(n) + " strands");
    w.letters.push_back({Letter::Kind::atom, v});
  }
  return w;
}

inline Braid normalize(const BraidWord& w) {
  const int n = w.strands;
  Braid acc = Braid::identity(n);
  for (const auto& l : w.letters) {
    if (l.kind == Letter::Kind::delta)
      acc = acc * Braid::delta_power(n, l.value);
    else if (l.value > 0)
      acc = acc * Braid::atom(n, l.value);
    else
      acc = acc * Braid::atom_inverse(n, -l.value);
  }
  return acc;
}

inline Braid parse_braid(std::string_view text, int n) { return normalize(parse_word(text, n)); }

// "D^p . w_1 . w_2 ...", each w_i the smallest reduced word of x_i
inline std::string to_string(const Braid& x) {
  std::string s = "D^" + std::to_string(x.inf());
  for (const auto& f : x.factors()) s += " . " + f.word_string();
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Braid& x) { return os << to_string(x); }

inline std::ostream& operator<<(std::ostream& os, const SimpleElement& s) {
  return os << '[' << s.word_string() << ']';
}

inline SimpleElement parse_simple(std::string_view text, int n) {
  BraidWord w = parse_word(text, n);
  std::vector<int> letters;
  for (const auto& l : w.letters) {
    if (l.kind != Letter::Kind::atom || l.value < 0) throw ParseError("not a positive word");
    letters.push_back(l.value);
  }
  return SimpleElement::from_word(n, letters);
}

}  // namespace garside
