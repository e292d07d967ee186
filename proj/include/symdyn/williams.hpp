#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "symdyn/int_matrix.hpp"
#include "symdyn/verdict.hpp"

namespace symdyn {

// One amalgamation step: the set of (current-index) columns that were
// merged, and the matrix after the merge.
struct AmalgamationStep {
  std::vector<std::size_t> merged;
  IntMatrix result;
};

struct AmalgamationTrace {
  IntMatrix start;
  std::vector<AmalgamationStep> steps;
  IntMatrix final_matrix;
  std::vector<std::size_t> partition;  // start vertex -> final vertex index

  nlohmann::json to_json() const;
};

// Chooses which class of pairwise-identical columns to merge next; receives
// all classes of size >= 2 (each sorted ascending) and returns an index into
// that list. The default picks the class containing the lowest column index.
using MergeChoice = std::function<std::size_t(const std::vector<std::vector<std::size_t>>&)>;

AmalgamationTrace total_amalgamation(const IntMatrix& a, const MergeChoice& choice = {});

// A permutation p with A(i,j) = B(p[i], p[j]) for all i, j, if one exists.
std::optional<std::vector<std::size_t>> permutation_equivalent(const IntMatrix& a,
                                                               const IntMatrix& b);

// Complete decision for one-sided conjugacy: total amalgamations must agree
// up to permutation. Never returns unknown.
Verdict decide_one_sided_conjugacy(const IntMatrix& a, const IntMatrix& b);

// Partition of the relevant edge set of one vertex: blocks of edge ids.
// Out-split ids enumerate the vertex's out-edges by (target, copy);
// in-split ids enumerate its in-edges by (source, copy).
struct SplitSpec {
  std::size_t vertex{0};
  std::vector<std::vector<std::size_t>> blocks;
};

// Elementary strong shift equivalence data: first = R.S and S.R = second.
struct SplitResult {
  IntMatrix matrix;
  IntMatrix witness_r;
  IntMatrix witness_s;
  // verify_elementary_sse(first, second, {R, S}) accepts, where
  // (first, second) = (A, split) for out-splits and (split, A) for in-splits.
};

SplitResult out_split(const IntMatrix& a, const SplitSpec& spec);
SplitResult in_split(const IntMatrix& a, const SplitSpec& spec);

// Replaces one i -> j edge by a length-two path through a fresh last vertex.
IntMatrix symbol_expand(const IntMatrix& a, std::size_t i, std::size_t j,
                        std::size_t multiplicity_index = 0);

}  // namespace symdyn
