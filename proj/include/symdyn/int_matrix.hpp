#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "symdyn/errors.hpp"

namespace symdyn {

// Dense matrix with exact arbitrary-precision integer entries.
// entry(i, j) counts edges i -> j when the matrix presents a graph.
// Values are immutable in practice: every operation returns a new matrix.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::vector<std::vector<mpz_class>> rows);
  static IntMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_nonnegative() const;
  bool is_zero() const;

  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  // Simultaneous permutation P.A.P^T: vertex i of the result is vertex perm[i]... see williams.
  IntMatrix permuted(const std::vector<std::size_t>& perm) const;

  std::string to_text() const;  // whitespace format, for diagnostics

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpz_class> data_;
};

// Structure flags of the directed multigraph presented by a square matrix.
struct GraphClass {
  bool irreducible{false};
  bool primitive{false};
  unsigned period{1};  // gcd of cycle lengths; 1 when the graph has no cycle
  bool permutation{false};
  bool has_zero_row{false};
  bool has_zero_column{false};
};

// A^m, exactly; A^0 is the identity.
IntMatrix power(const IntMatrix& a, unsigned m);

// Rank of A as a linear map over the rationals (fraction-free Bareiss).
std::size_t rank_over_rationals(const IntMatrix& a);

GraphClass classify_graph(const IntMatrix& a);

// Coefficients of det(xI - A), degree-descending: {1, c1, ..., cn}.
std::vector<mpz_class> char_poly(const IntMatrix& a);

struct EntropyResult {
  double value{0.0};
  // Set when the spectral radius is below 1 (zero or nilpotent matrix);
  // the entropy is then reported as 0.
  bool zero_warning{false};
};

// Natural logarithm of the Perron value, root isolated exactly and then
// bisected with dyadic rationals to width below 1e-13.
EntropyResult entropy(const IntMatrix& a);

}  // namespace symdyn
