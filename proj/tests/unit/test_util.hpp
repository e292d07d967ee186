#pragma once

#include <random>
#include <vector>

#include "symdyn/int_matrix.hpp"

namespace symdyn::testutil {

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long lo,
                               long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

// Square nonnegative matrix with no zero rows or columns (every vertex kept
// alive), sizes and entries bounded.
inline IntMatrix random_adjacency(std::mt19937& rng, std::size_t max_size, long max_entry) {
  std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
  std::size_t n = size_dist(rng);
  std::uniform_int_distribution<long> entry(0, max_entry);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  for (std::size_t i = 0; i < n; ++i) {
    bool row = false, col = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (m.at(i, j) > 0) row = true;
      if (m.at(j, i) > 0) col = true;
    }
    if (!row) m.at(i, pick(rng)) = 1;
    if (!col) m.at(pick(rng), i) = 1;
  }
  return m;
}

inline std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace symdyn::testutil
