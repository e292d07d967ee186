#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "symdyn/int_matrix.hpp"

namespace symdyn {

// U.M.V = D with U, V unimodular and D diagonal with a divisibility chain,
// zeros last. Deterministic: pivot of minimal absolute value, ties broken
// by lowest (row, col).
struct SmithDecomposition {
  IntMatrix U, D, V;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// Finitely generated abelian group in invariant-factor form, with an
// optional distinguished element stored in Smith coordinates: one residue
// per torsion factor (reduced mod the factor), one integer per free
// generator.
struct FGAbelianGroup {
  std::vector<mpz_class> torsion;  // invariant factors > 1, each divides the next
  std::size_t free_rank{0};
  std::optional<std::vector<mpz_class>> distinguished;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  bool same_abstract_group(const FGAbelianGroup& o) const {
    return torsion == o.torsion && free_rank == o.free_rank;
  }
  mpz_class order() const;  // 0 when infinite
};

// Cokernel of Id - A; free_rank also reports the rank of ker(Id - A).
FGAbelianGroup bowen_franks(const IntMatrix& a);

// bowen_franks(A) together with the class of the all-ones vector.
FGAbelianGroup unit_class(const IntMatrix& a);

// Exact det(Id - A) and its sign.
std::pair<mpz_class, int> det_id_minus(const IntMatrix& a);

// Bareiss determinant of a square matrix.
mpz_class determinant(const IntMatrix& a);

}  // namespace symdyn
