#include "symdyn/eventual.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symdyn/io.hpp"
#include "symdyn/williams.hpp"

namespace symdyn {

StabilizationIndex stabilization_index(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("stabilization_index requires a square matrix");
  StabilizationIndex idx;
  IntMatrix p = a;
  idx.rank_sequence.push_back(rank_over_rationals(p));
  for (unsigned n = 1;; ++n) {
    p = p * a;
    idx.rank_sequence.push_back(rank_over_rationals(p));
    if (idx.rank_sequence[n] == idx.rank_sequence[n - 1]) {
      idx.value = n;
      break;
    }
  }
  return idx;
}

namespace {

// Canonical partition key: vertex -> class index, in first-appearance order.
std::vector<std::size_t> normalized_partition(const std::vector<std::size_t>& part) {
  std::map<std::size_t, std::size_t> remap;
  std::vector<std::size_t> out;
  out.reserve(part.size());
  for (auto p : part) {
    auto [it, inserted] = remap.emplace(p, remap.size());
    out.push_back(it->second);
  }
  return out;
}

bool joint_permutation(const IntMatrix& a1, const IntMatrix& a2, const IntMatrix& b1,
                       const IntMatrix& b2, std::vector<std::size_t>& perm,
                       std::vector<char>& used, std::size_t v) {
  const std::size_t n = a1.rows();
  if (v == n) return true;
  for (std::size_t w = 0; w < n; ++w) {
    if (used[w]) continue;
    bool ok = a1.at(v, v) == b1.at(w, w) && a2.at(v, v) == b2.at(w, w);
    for (std::size_t u = 0; u < v && ok; ++u)
      ok = a1.at(v, u) == b1.at(w, perm[u]) && a1.at(u, v) == b1.at(perm[u], w) &&
           a2.at(v, u) == b2.at(w, perm[u]) && a2.at(u, v) == b2.at(perm[u], w);
    if (!ok) continue;
    perm[v] = w;
    used[w] = 1;
    if (joint_permutation(a1, a2, b1, b2, perm, used, v + 1)) return true;
    used[w] = 0;
  }
  return false;
}

// Join (finest common coarsening) of two partitions given as class maps.
std::vector<std::size_t> partition_join(const std::vector<std::size_t>& p,
                                        const std::vector<std::size_t>& q) {
  const std::size_t n = p.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };
  std::map<std::size_t, std::size_t> firstp, firstq;
  for (std::size_t i = 0; i < n; ++i) {
    auto [itp, newp] = firstp.emplace(p[i], i);
    if (!newp) unite(i, itp->second);
    auto [itq, newq] = firstq.emplace(q[i], i);
    if (!newq) unite(i, itq->second);
  }
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = find(i);
  return normalized_partition(out);
}

// Class index of each n-class / (n+1)-class inside the join.
std::vector<std::size_t> classes_to_join(const std::vector<std::size_t>& part,
                                         const std::vector<std::size_t>& join,
                                         std::size_t nclasses) {
  std::vector<std::size_t> owner(nclasses, SIZE_MAX);
  for (std::size_t v = 0; v < part.size(); ++v) owner[part[v]] = join[v];
  return owner;
}

// Enumerate all conjugating bijections (not just the first).
void all_permutations(const IntMatrix& a, const IntMatrix& b, std::vector<std::size_t>& perm,
                      std::vector<char>& used, std::size_t v,
                      std::vector<std::vector<std::size_t>>& out, std::size_t cap) {
  const std::size_t n = a.rows();
  if (out.size() >= cap) return;
  if (v == n) {
    out.push_back(perm);
    return;
  }
  for (std::size_t w = 0; w < n; ++w) {
    if (used[w]) continue;
    bool ok = a.at(v, v) == b.at(w, w);
    for (std::size_t u = 0; u < v && ok; ++u)
      ok = a.at(v, u) == b.at(w, perm[u]) && a.at(u, v) == b.at(perm[u], w);
    if (!ok) continue;
    perm[v] = w;
    used[w] = 1;
    all_permutations(a, b, perm, used, v + 1, out, cap);
    used[w] = 0;
  }
}

}  // namespace

Verdict decide_conjugate_higher_powers(const IntMatrix& a, const IntMatrix& b,
                                       unsigned extra_powers) {
  if (!a.is_square() || !b.is_square())
    throw DimensionError("decide_conjugate_higher_powers requires square matrices");
  if (!a.is_nonnegative() || !b.is_nonnegative())
    throw DataError("decide_conjugate_higher_powers requires nonnegative matrices");

  const auto na = stabilization_index(a);
  const auto nb = stabilization_index(b);
  const unsigned n = std::max(na.value, nb.value);

  auto ta1 = total_amalgamation(power(a, n));
  auto ta2 = total_amalgamation(power(a, n + 1));
  auto tb1 = total_amalgamation(power(b, n));
  auto tb2 = total_amalgamation(power(b, n + 1));

  nlohmann::json diag;
  diag["n"] = n;
  diag["rank_sequence_left"] = na.rank_sequence;
  diag["rank_sequence_right"] = nb.rank_sequence;
  diag["total_sizes"] = {
      {"left", {ta1.final_matrix.rows(), ta2.final_matrix.rows()}},
      {"right", {tb1.final_matrix.rows(), tb2.final_matrix.rows()}}};

  // Per-power cross-check window.
  nlohmann::json per_power = nlohmann::json::array();
  bool window_all_yes = true;
  bool window_base_no = false;
  for (unsigned m = n; m <= n + std::max(1u, extra_powers); ++m) {
    auto v = decide_one_sided_conjugacy(power(a, m), power(b, m));
    per_power.push_back({{"power", m}, {"conjugate", v.is_yes()}});
    if (!v.is_yes()) {
      window_all_yes = false;
      if (m <= n + 1) window_base_no = true;
    }
  }
  diag["per_power"] = per_power;

  if (ta1.final_matrix.rows() != tb1.final_matrix.rows() ||
      ta2.final_matrix.rows() != tb2.final_matrix.rows()) {
    diag["reason"] = "size";
    return Verdict::no(diag);
  }

  auto pa1 = normalized_partition(ta1.partition);
  auto pa2 = normalized_partition(ta2.partition);
  auto pb1 = normalized_partition(tb1.partition);
  auto pb2 = normalized_partition(tb2.partition);

  bool joint_yes = false;
  nlohmann::json cert;
  if (pa1 == pa2 && pb1 == pb2) {
    // The n-th and (n+1)-st amalgamations identify the same vertex classes
    // on each side; search one bijection conjugating both powers at once.
    std::vector<std::size_t> perm(ta1.final_matrix.rows());
    std::vector<char> used(perm.size(), 0);
    if (joint_permutation(ta1.final_matrix, ta2.final_matrix, tb1.final_matrix, tb2.final_matrix,
                          perm, used, 0)) {
      joint_yes = true;
      cert = {{"n", n},
              {"permutation", perm},
              {"left_totals", {matrix_to_json(ta1.final_matrix), matrix_to_json(ta2.final_matrix)}},
              {"right_totals", {matrix_to_json(tb1.final_matrix), matrix_to_json(tb2.final_matrix)}}};
    }
  } else {
    // The class sets differ between the two powers; search pairs of
    // bijections linked through the join of the two partitions.
    auto ja = partition_join(pa1, pa2);
    auto jb = partition_join(pb1, pb2);
    auto owner_a1 = classes_to_join(pa1, ja, ta1.final_matrix.rows());
    auto owner_a2 = classes_to_join(pa2, ja, ta2.final_matrix.rows());
    auto owner_b1 = classes_to_join(pb1, jb, tb1.final_matrix.rows());
    auto owner_b2 = classes_to_join(pb2, jb, tb2.final_matrix.rows());

    constexpr std::size_t kCap = 20000;
    std::vector<std::vector<std::size_t>> perms1, perms2;
    {
      std::vector<std::size_t> perm(ta1.final_matrix.rows());
      std::vector<char> used(perm.size(), 0);
      all_permutations(ta1.final_matrix, tb1.final_matrix, perm, used, 0, perms1, kCap);
    }
    {
      std::vector<std::size_t> perm(ta2.final_matrix.rows());
      std::vector<char> used(perm.size(), 0);
      all_permutations(ta2.final_matrix, tb2.final_matrix, perm, used, 0, perms2, kCap);
    }
    for (const auto& p1 : perms1) {
      // induced join map of p1, if well-defined
      std::map<std::size_t, std::size_t> jmap1;
      bool ok = true;
      for (std::size_t c = 0; c < p1.size() && ok; ++c) {
        auto [it, inserted] = jmap1.emplace(owner_a1[c], owner_b1[p1[c]]);
        if (!inserted && it->second != owner_b1[p1[c]]) ok = false;
      }
      if (!ok) continue;
      for (const auto& p2 : perms2) {
        std::map<std::size_t, std::size_t> jmap2;
        bool ok2 = true;
        for (std::size_t c = 0; c < p2.size() && ok2; ++c) {
          auto [it, inserted] = jmap2.emplace(owner_a2[c], owner_b2[p2[c]]);
          if (!inserted && it->second != owner_b2[p2[c]]) ok2 = false;
        }
        if (ok2 && jmap1 == jmap2) {
          joint_yes = true;
          cert = {{"n", n}, {"permutation_n", p1}, {"permutation_n_plus_1", p2}};
          break;
        }
      }
      if (joint_yes) break;
    }
    if (!joint_yes && window_all_yes) {
      diag["reason"] = "linked_bijection_search_inconclusive";
      return Verdict::unknown(
          "the n-th and (n+1)-st amalgamation partitions differ and no linked bijection pair "
          "was found although the powers are individually conjugate",
          diag);
    }
  }

  if (joint_yes && window_all_yes) {
    cert["per_power"] = per_power;
    return Verdict::yes(cert);
  }
  if (!joint_yes && (window_base_no || !window_all_yes)) {
    diag["reason"] = window_base_no ? "per_power_not_conjugate" : "no_joint_permutation";
    return Verdict::no(diag);
  }
  // Disagreement between the joint answer and the per-power window.
  diag["joint"] = joint_yes;
  return Verdict::unknown("joint-permutation answer disagrees with the per-power cross-check", diag);
}

}  // namespace symdyn
