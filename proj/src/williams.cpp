#include "symdyn/williams.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symdyn/io.hpp"

namespace symdyn {

nlohmann::json AmalgamationTrace::to_json() const {
  nlohmann::json j;
  j["start"] = matrix_to_json(start);
  j["steps"] = nlohmann::json::array();
  for (const auto& s : steps)
    j["steps"].push_back({{"merged", s.merged}, {"result", matrix_to_json(s.result)}});
  j["final"] = matrix_to_json(final_matrix);
  j["partition"] = partition;
  return j;
}

namespace {

std::vector<std::vector<std::size_t>> identical_column_classes(const IntMatrix& m) {
  std::map<std::vector<mpz_class>, std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<mpz_class> col(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m.at(i, j);
    groups[col].push_back(j);
  }
  std::vector<std::vector<std::size_t>> classes;
  for (auto& [col, idxs] : groups)
    if (idxs.size() >= 2) classes.push_back(idxs);
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return classes;
}

// Merge one class of identical columns: keep the lowest index, add rows.
IntMatrix merge_class(const IntMatrix& m, const std::vector<std::size_t>& cls,
                      std::vector<std::size_t>& vertex_map) {
  const std::size_t n = m.rows();
  std::set<std::size_t> drop(cls.begin() + 1, cls.end());
  vertex_map.assign(n, 0);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (drop.count(v))
      vertex_map[v] = SIZE_MAX;  // resolved to the kept representative below
    else
      vertex_map[v] = next++;
  }
  for (std::size_t v : drop) vertex_map[v] = vertex_map[cls.front()];
  IntMatrix out(next, next);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (drop.count(j)) continue;  // identical columns: keep one copy
      out.at(vertex_map[i], vertex_map[j]) += m.at(i, j);
    }
  return out;
}

}  // namespace

AmalgamationTrace total_amalgamation(const IntMatrix& a, const MergeChoice& choice) {
  if (!a.is_square()) throw DimensionError("total_amalgamation requires a square matrix");
  if (!a.is_nonnegative()) throw DataError("total_amalgamation requires a nonnegative matrix");
  AmalgamationTrace trace{a, {}, a, {}};
  trace.partition.resize(a.rows());
  for (std::size_t v = 0; v < a.rows(); ++v) trace.partition[v] = v;

  IntMatrix cur = a;
  for (;;) {
    auto classes = identical_column_classes(cur);
    if (classes.empty()) break;
    std::size_t pick = choice ? choice(classes) : 0;
    if (pick >= classes.size()) throw std::logic_error("merge choice out of range");
    std::vector<std::size_t> vmap;
    cur = merge_class(cur, classes[pick], vmap);
    for (auto& p : trace.partition) p = vmap[p];
    trace.steps.push_back({classes[pick], cur});
  }
  trace.final_matrix = cur;
  return trace;
}

namespace {

// Multiset signature of a vertex used to prune the bijection search.
std::vector<std::string> vertex_signature(const IntMatrix& m, std::size_t v) {
  std::vector<mpz_class> row(m.cols()), col(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.at(v, j);
  for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m.at(i, v);
  std::sort(row.begin(), row.end());
  std::sort(col.begin(), col.end());
  std::vector<std::string> sig;
  sig.push_back(m.at(v, v).get_str());
  for (const auto& x : row) sig.push_back(x.get_str());
  sig.push_back("|");
  for (const auto& x : col) sig.push_back(x.get_str());
  return sig;
}

bool extend_permutation(const IntMatrix& a, const IntMatrix& b,
                        const std::vector<std::vector<std::size_t>>& candidates,
                        std::vector<std::size_t>& perm, std::vector<char>& used, std::size_t v) {
  const std::size_t n = a.rows();
  if (v == n) return true;
  for (std::size_t w : candidates[v]) {
    if (used[w]) continue;
    bool ok = a.at(v, v) == b.at(w, w);
    for (std::size_t u = 0; u < v && ok; ++u)
      ok = a.at(v, u) == b.at(w, perm[u]) && a.at(u, v) == b.at(perm[u], w);
    if (!ok) continue;
    perm[v] = w;
    used[w] = 1;
    if (extend_permutation(a, b, candidates, perm, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> permutation_equivalent(const IntMatrix& a,
                                                               const IntMatrix& b) {
  if (!a.is_square() || !b.is_square()) throw DimensionError("permutation_equivalent needs square matrices");
  if (a.rows() != b.rows()) return std::nullopt;
  const std::size_t n = a.rows();
  std::vector<std::vector<std::size_t>> candidates(n);
  std::map<std::vector<std::string>, std::vector<std::size_t>> by_sig;
  for (std::size_t w = 0; w < n; ++w) by_sig[vertex_signature(b, w)].push_back(w);
  for (std::size_t v = 0; v < n; ++v) {
    auto it = by_sig.find(vertex_signature(a, v));
    if (it == by_sig.end()) return std::nullopt;
    candidates[v] = it->second;
  }
  std::vector<std::size_t> perm(n);
  std::vector<char> used(n, 0);
  if (extend_permutation(a, b, candidates, perm, used, 0)) return perm;
  return std::nullopt;
}

Verdict decide_one_sided_conjugacy(const IntMatrix& a, const IntMatrix& b) {
  auto ta = total_amalgamation(a);
  auto tb = total_amalgamation(b);
  if (ta.final_matrix.rows() != tb.final_matrix.rows()) {
    return Verdict::no({{"reason", "size"},
                        {"left_size", ta.final_matrix.rows()},
                        {"right_size", tb.final_matrix.rows()}});
  }
  auto perm = permutation_equivalent(ta.final_matrix, tb.final_matrix);
  if (!perm) {
    return Verdict::no({{"reason", "no_conjugating_permutation"},
                        {"left_total", matrix_to_json(ta.final_matrix)},
                        {"right_total", matrix_to_json(tb.final_matrix)}});
  }
  return Verdict::yes({{"left_trace", ta.to_json()},
                       {"right_trace", tb.to_json()},
                       {"permutation", *perm}});
}

namespace {

void validate_blocks(const SplitSpec& spec, std::size_t degree, const char* kind) {
  std::vector<char> seen(degree, 0);
  if (spec.blocks.empty()) throw SpecError(std::string(kind) + ": no blocks given");
  for (const auto& blk : spec.blocks) {
    if (blk.empty()) throw SpecError(std::string(kind) + ": empty block");
    for (auto e : blk) {
      if (e >= degree) throw SpecError(std::string(kind) + ": edge id out of range");
      if (seen[e]) throw SpecError(std::string(kind) + ": edge id repeated across blocks");
      seen[e] = 1;
    }
  }
  for (std::size_t e = 0; e < degree; ++e)
    if (!seen[e]) throw SpecError(std::string(kind) + ": blocks do not cover all edges");
}

}  // namespace

SplitResult out_split(const IntMatrix& a, const SplitSpec& spec) {
  if (!a.is_square()) throw DimensionError("out_split requires a square matrix");
  if (!a.is_nonnegative()) throw DataError("out_split requires a nonnegative matrix");
  const std::size_t n = a.rows();
  const std::size_t v = spec.vertex;
  if (v >= n) throw SpecError("out_split: vertex out of range");

  // Out-edges of v, enumerated by (target, copy).
  std::vector<std::size_t> edge_target;
  for (std::size_t j = 0; j < n; ++j)
    for (mpz_class t = 0; t < a.at(v, j); ++t) edge_target.push_back(j);
  validate_blocks(spec, edge_target.size(), "out_split");

  const std::size_t p = spec.blocks.size();
  const std::size_t m = n + p - 1;
  // New index of old vertex u; copies of v occupy v..v+p-1.
  auto new_index = [&](std::size_t u) { return u < v ? u : u + p - 1; };

  // S(v_k, u) = number of out-edges of v in block k ending at u;
  // unsplit rows carry their original edges.
  IntMatrix s(m, n);
  for (std::size_t u = 0; u < n; ++u) {
    if (u == v) continue;
    for (std::size_t j = 0; j < n; ++j) s.at(new_index(u), j) = a.at(u, j);
  }
  for (std::size_t k = 0; k < p; ++k)
    for (auto e : spec.blocks[k]) s.at(v + k, edge_target[e]) += 1;

  // R(u, u_k) = 1 for every copy of u.
  IntMatrix r(n, m);
  for (std::size_t u = 0; u < n; ++u) {
    if (u == v)
      for (std::size_t k = 0; k < p; ++k) r.at(u, v + k) = 1;
    else
      r.at(u, new_index(u)) = 1;
  }

  return SplitResult{s * r, r, s};  // A = R.S, split = S.R
}

SplitResult in_split(const IntMatrix& a, const SplitSpec& spec) {
  if (!a.is_square()) throw DimensionError("in_split requires a square matrix");
  if (!a.is_nonnegative()) throw DataError("in_split requires a nonnegative matrix");
  const std::size_t n = a.rows();
  const std::size_t v = spec.vertex;
  if (v >= n) throw SpecError("in_split: vertex out of range");

  // In-edges of v, enumerated by (source, copy).
  std::vector<std::size_t> edge_source;
  for (std::size_t i = 0; i < n; ++i)
    for (mpz_class t = 0; t < a.at(i, v); ++t) edge_source.push_back(i);
  validate_blocks(spec, edge_source.size(), "in_split");

  const std::size_t p = spec.blocks.size();
  const std::size_t m = n + p - 1;
  auto new_index = [&](std::size_t u) { return u < v ? u : u + p - 1; };

  // S(u, v_k) = number of edges u -> v in block k; unsplit columns carry
  // their original edges.
  IntMatrix s(n, m);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == v) continue;
      s.at(u, new_index(j)) = a.at(u, j);
    }
  for (std::size_t k = 0; k < p; ++k)
    for (auto e : spec.blocks[k]) s.at(edge_source[e], v + k) += 1;

  // R(u_k, u) = 1 for every copy of u.
  IntMatrix r(m, n);
  for (std::size_t u = 0; u < n; ++u) {
    if (u == v)
      for (std::size_t k = 0; k < p; ++k) r.at(v + k, u) = 1;
    else
      r.at(new_index(u), u) = 1;
  }

  return SplitResult{r * s, r, s};  // split = R.S, A = S.R
}

IntMatrix symbol_expand(const IntMatrix& a, std::size_t i, std::size_t j,
                        std::size_t multiplicity_index) {
  if (!a.is_square()) throw DimensionError("symbol_expand requires a square matrix");
  const std::size_t n = a.rows();
  if (i >= n || j >= n) throw DataError("symbol_expand: vertex out of range");
  if (a.at(i, j) < 1) throw DataError("symbol_expand: no such edge, entry is zero");
  if (mpz_class(static_cast<unsigned long>(multiplicity_index)) >= a.at(i, j))
    throw DataError("symbol_expand: multiplicity index out of range");
  IntMatrix out(n + 1, n + 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = a.at(r, c);
  out.at(i, j) -= 1;
  out.at(i, n) += 1;
  out.at(n, j) += 1;
  return out;
}

}  // namespace symdyn
