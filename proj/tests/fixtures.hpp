#pragma once

#include <string>
#include <vector>

#include "garside/garside.hpp"

namespace fixtures {

using garside::Braid;
using garside::parse_braid;
using garside::parse_simple;
using garside::SimpleElement;

struct Named {
  const char* name;
  int n;
  const char* word;
};

inline const Named kA{"A", 4, "1 2 3 2 . 2 1 3 . 1 3"};
inline const Named kB{"B", 6, "2 1 4 3 2 1 5 4 . 2 4"};
inline const Named kC{"C", 5, "4 1 2 3 4"};
inline const Named kD{"D", 4, "1 3 . 1"};
inline const Named kU{"U", 4, "1 2 1 3 2"};
inline const Named kE{"E", 12,
                      "2 1 7 6 5 4 3 8 7 11 10 . 1 2 3 2 1 4 3 10 . 1 3 4 10 . 1 10 . "
                      "1 10 9 8 7 11 . 1 2 7 11"};
inline const Named kF{"F", 12,
                      "3 2 1 4 6 8 7 6 9 10 11 10 . 1 2 4 3 2 1 5 7 10 11 10 . "
                      "3 5 7 10 11 10 . 3 5 7 6 8 10 11"};
// rigid element whose partial transports do not come from b v g
inline const Named kSquare{"X", 4, "2 . 2 1 3 2 . 2 1 3 . 1 2"};

inline Braid braid(const Named& f) { return parse_braid(f.word, f.n); }

// Normal forms listed factor by factor.
inline std::vector<SimpleElement> factors_of(const std::string& dotted, int n) {
  std::vector<SimpleElement> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t dot = dotted.find('.', start);
    out.push_back(parse_simple(dotted.substr(start, dot - start), n));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return out;
}

// A_{i,j}, i in 1..2, j in 1..3
inline const std::vector<std::vector<std::string>> kUssA = {
    {"1 2 3 2 . 2 1 3 . 1 3", "2 1 3 . 1 3 . 1 2 3 2", "1 3 . 1 2 3 2 . 2 1 3"},
    {"1 3 2 1 . 2 1 3 . 1 3", "2 1 3 . 1 3 . 1 3 2 1", "1 3 . 1 3 2 1 . 2 1 3"},
};

// B_{i,j}, i in 1..4, j in 1..2
inline const std::vector<std::vector<std::string>> kUssB = {
    {"2 1 4 3 2 1 5 4 . 2 4", "2 4 . 2 1 4 3 2 1 5 4"},
    {"2 1 3 4 3 2 5 4 . 2 4", "2 4 . 2 1 3 4 3 2 5 4"},
    {"1 4 3 2 1 5 4 . 2 1 4", "2 1 4 . 1 4 3 2 1 5 4"},
    {"2 1 3 2 4 5 4 . 2 4 5", "2 4 5 . 2 1 3 2 4 5 4"},
};

// delta = sigma_{n-1} ... sigma_1
inline Braid delta_n(int n) {
  std::string w;
  for (int i = n - 1; i >= 1; --i) w += std::to_string(i) + " ";
  return parse_braid(w, n);
}

// epsilon = delta sigma_1
inline Braid epsilon_n(int n) { return delta_n(n) * Braid::atom(n, 1); }

}  // namespace fixtures
