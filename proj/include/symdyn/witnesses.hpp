#pragma once

#include <optional>
#include <vector>

#include "symdyn/int_matrix.hpp"
#include "symdyn/verdict.hpp"

namespace symdyn {

// A = R.S and S.R = B, both rectangular nonnegative.
struct ElementarySSEWitness {
  IntMatrix R, S;
};

// A^lag = R.S, B^lag = S.R, A.R = R.B, B.S = S.A.
struct SEWitness {
  IntMatrix R, S;
  unsigned lag{1};
};

// A = S.R1, B = S.R2, R1.S = R2.S.
struct BalancedWitness {
  IntMatrix S, R1, R2;
};

Verdict verify_elementary_sse(const IntMatrix& a, const IntMatrix& b,
                              const ElementarySSEWitness& w);

// Links of a strong shift equivalence chain; each witness may connect its
// pair in either orientation, which the verifier detects and reports.
Verdict verify_sse_chain(const std::vector<IntMatrix>& matrices,
                         const std::vector<ElementarySSEWitness>& links);

Verdict verify_shift_equivalence(const IntMatrix& a, const IntMatrix& b, const SEWitness& w);

Verdict verify_balanced(const IntMatrix& a, const IntMatrix& b, const BalancedWitness& w);

// Chain link kinds for balanced strong shift equivalence up to conjugacy:
// an elementary balanced step, a conjugating permutation, or a total
// amalgamation in either direction.
struct BalancedChainLink {
  enum class Kind { balanced, permutation, amalgamation } kind{Kind::balanced};
  std::optional<BalancedWitness> balanced;
  std::optional<std::vector<std::size_t>> permutation;
};

Verdict verify_balanced_chain(const std::vector<IntMatrix>& matrices,
                              const std::vector<BalancedChainLink>& links);

struct SearchBounds {
  std::size_t inner_max{2};  // bound on the inner dimension (balanced search)
  long entry_max{1};         // bound on witness entries
};

// Bounded certificate search. Yes with the lexicographically least witness
// found; unknown when the bounded space is exhausted. Never no.
Verdict search_elementary(const IntMatrix& a, const IntMatrix& b, const SearchBounds& bounds);
Verdict search_balanced(const IntMatrix& a, const IntMatrix& b, const SearchBounds& bounds);

}  // namespace symdyn
