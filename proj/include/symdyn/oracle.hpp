#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/int_matrix.hpp"
#include "symdyn/verdict.hpp"

namespace symdyn {

struct EdgeSymbol {
  std::size_t from{0}, to{0};
  std::string name;
};

// The edge shift of an adjacency matrix: symbols are edges, a word is
// allowed when consecutive edges compose.
struct EdgeShift {
  IntMatrix matrix{1, 1};
  std::vector<EdgeSymbol> symbols;

  static EdgeShift canonical(const IntMatrix& a);
  static EdgeShift with_symbols(const IntMatrix& a, std::vector<EdgeSymbol> symbols);

  int symbol_index(const std::string& name) const;
  bool composable(int s1, int s2) const {
    return symbols[s1].to == symbols[s2].from;
  }
  // All allowed words of exactly the given length (symbol ids).
  std::vector<std::vector<int>> words(std::size_t length) const;
};

// Sliding block map with window k and delay d: on infinite sequences,
// y_i = table(x[i-d .. i-d+k)) for i >= d, while positions i < d are given
// by boundary tables keyed on the available prefix x[0 .. i+k-d).
struct BlockMap {
  unsigned window{1};
  unsigned delay{0};
  std::map<std::vector<int>, int> table;
  std::vector<std::map<std::vector<int>, int>> boundary;
};

// Pure sliding application: |w| >= k, output length |w| - k + 1.
std::vector<int> apply_block_map(const BlockMap& m, const EdgeShift& source,
                                 const std::vector<int>& w);

// Full application including the boundary positions; output length
// |w| - k + 1 + d.
std::vector<int> apply_block_map_full(const BlockMap& m, const std::vector<int>& w);

// Word-level conjugacy verification up to the bound: images allowed,
// injectivity and surjectivity on words of length L - k + 1. A yes is
// certified only up to L.
Verdict verify_conjugacy(const BlockMap& m, const EdgeShift& a, const EdgeShift& b,
                         std::size_t L);

// Word-level verification of a Matsumoto eventual conjugacy with constant
// delay, the symmetric identity for the supplied inverse, and two-sided
// composition checks.
Verdict verify_eventual_conjugacy_map(const BlockMap& m, const BlockMap& inverse,
                                      const EdgeShift& a, const EdgeShift& b, std::size_t L);

// Exhaustive search over block maps with window <= k_max; yes with the
// first map that verifies at bound L, unknown when the space is exhausted.
Verdict search_conjugacy(const EdgeShift& a, const EdgeShift& b, unsigned k_max, std::size_t L);

nlohmann::json block_map_to_json(const BlockMap& m, const EdgeShift& source,
                                 const EdgeShift& target);
BlockMap block_map_from_json(const nlohmann::json& j, const EdgeShift& source,
                             const EdgeShift& target);

nlohmann::json edge_shift_to_json(const EdgeShift& s);

}  // namespace symdyn
