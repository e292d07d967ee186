#pragma once

#include "symdyn/int_matrix.hpp"
#include "symdyn/verdict.hpp"
#include "symdyn/zlinalg.hpp"

namespace symdyn {

struct FlowInvariant {
  FGAbelianGroup group;
  int det_sign{0};
};

struct COEInvariant {
  // Group with the class of (1,...,1) in the cokernel of (Id - A)^T as its
  // distinguished element; the transpose makes the class invariant under
  // one-sided conjugacy in the edge convention entry(i,j) = #edges i -> j.
  FGAbelianGroup group;
  mpz_class det;
};

FlowInvariant flow_invariant(const IntMatrix& a);
COEInvariant coe_invariant(const IntMatrix& a);

// Complete classifiers for irreducible nonpermutation matrices; other
// inputs raise PreconditionError naming the failing hypothesis.
Verdict flow_equivalent(const IntMatrix& a, const IntMatrix& b);
Verdict continuous_orbit_equivalent(const IntMatrix& a, const IntMatrix& b);

// Is there a group isomorphism carrying one distinguished element to the
// other? Exact for finite groups within the enumeration budget; shortcuts
// handle zero classes and cyclic groups; otherwise unknown.
Verdict unital_bf_isomorphic(const FGAbelianGroup& g, const FGAbelianGroup& h);

}  // namespace symdyn
