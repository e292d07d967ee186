#pragma once

#include <set>
#include <string>
#include <vector>

#include "symdyn/int_matrix.hpp"
#include "symdyn/verdict.hpp"

namespace symdyn {

struct LabelledEdge {
  std::size_t from{0}, to{0};
  std::string label;
};

// Finite labelled multigraph presenting a sofic shift.
struct LabelledGraph {
  std::size_t vertices{0};
  std::vector<std::string> alphabet;
  std::vector<LabelledEdge> edges;
};

void validate_graph(const LabelledGraph& g);

// Iteratively removes vertices with no outgoing or no incoming edges.
// The result may have zero vertices (empty shift).
LabelledGraph essential_part(const LabelledGraph& g);

using Word = std::vector<std::string>;

// All words of length 0..max_len in the language, including the empty word.
std::set<Word> language(const LabelledGraph& g, std::size_t max_len);

bool word_in_language(const LabelledGraph& g, const Word& w);

// Cover graphs carry their states as subsets of the right-resolved
// presentation, for diagnostics and containment checks.
struct CoverResult {
  LabelledGraph cover;
  std::vector<std::vector<std::size_t>> states;
};

CoverResult krieger_cover(const LabelledGraph& g);
CoverResult fischer_cover(const LabelledGraph& g);

bool sofic_irreducible(const LabelledGraph& g);

// Exact decision; the bound only limits the reported counterexample search.
Verdict is_intrinsically_synchronizing(const LabelledGraph& g, const Word& w,
                                       std::size_t bound = 8);

// Confirms one concrete (nu, omega) pair: nu.w and w.omega allowed but
// nu.w.omega not.
bool confirms_not_synchronizing(const LabelledGraph& g, const Word& w, const Word& nu,
                                const Word& omega);

bool labelled_graph_isomorphic(const LabelledGraph& a, const LabelledGraph& b);

// even-shift | odd-shift | full:N | golden-mean
LabelledGraph preset_graph(const std::string& name);

// SFT presentation of an adjacency matrix with pairwise distinct edge labels.
LabelledGraph from_matrix_distinct_labels(const IntMatrix& a);

Word word_from_string(const LabelledGraph& g, const std::string& text);
std::string word_to_string(const Word& w);

}  // namespace symdyn
