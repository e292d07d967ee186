#pragma once

#include <vector>

#include "symdyn/int_matrix.hpp"
#include "symdyn/verdict.hpp"

namespace symdyn {

struct StabilizationIndex {
  unsigned value{1};                       // least n with rank(A^n) = rank(A^{n+1})
  std::vector<std::size_t> rank_sequence;  // ranks of A^1, ..., A^{value+1}
};

StabilizationIndex stabilization_index(const IntMatrix& a);

// Decides whether the one-sided shifts of A and B have conjugate higher
// powers. With n = max of the stabilization indices, a yes requires a joint
// vertex bijection conjugating the total amalgamations of the n-th and
// (n+1)-st powers simultaneously; per-power conjugacy is cross-checked on
// the window [n, n + extra_powers] and any disagreement with the joint
// answer is surfaced as unknown.
Verdict decide_conjugate_higher_powers(const IntMatrix& a, const IntMatrix& b,
                                       unsigned extra_powers = 3);

}  // namespace symdyn
