#include "symdyn/classifiers.hpp"

#include <algorithm>
#include <functional>

#include "symdyn/io.hpp"

namespace symdyn {

namespace {

void require_hypotheses(const IntMatrix& a, const char* which) {
  if (!a.is_square()) throw DimensionError(std::string(which) + ": matrix must be square");
  if (!a.is_nonnegative()) throw DataError(std::string(which) + ": matrix must be nonnegative");
  auto cls = classify_graph(a);
  if (!cls.irreducible)
    throw PreconditionError(std::string(which) + ": matrix is not irreducible");
  if (cls.permutation)
    throw PreconditionError(std::string(which) + ": matrix is a permutation matrix");
}

nlohmann::json invariant_json(const FlowInvariant& f) {
  return {{"group", group_to_json(f.group)}, {"det_sign", f.det_sign}};
}

}  // namespace

FlowInvariant flow_invariant(const IntMatrix& a) {
  return FlowInvariant{bowen_franks(a), det_id_minus(a).second};
}

COEInvariant coe_invariant(const IntMatrix& a) {
  // The unit class is taken in the cokernel of the transposed Id - A: with
  // entry(i, j) counting edges i -> j, only the transposed class is an
  // orbit-equivalence invariant (the group and determinant are
  // transpose-insensitive, the distinguished class is not).
  return COEInvariant{unit_class(a.transpose()), det_id_minus(a).first};
}

Verdict flow_equivalent(const IntMatrix& a, const IntMatrix& b) {
  require_hypotheses(a, "flow_equivalent(left)");
  require_hypotheses(b, "flow_equivalent(right)");
  auto fa = flow_invariant(a);
  auto fb = flow_invariant(b);
  nlohmann::json sides = {{"left", invariant_json(fa)}, {"right", invariant_json(fb)}};
  if (!fa.group.same_abstract_group(fb.group)) {
    sides["reason"] = "bowen_franks_group";
    return Verdict::no(sides);
  }
  if (fa.det_sign != fb.det_sign) {
    sides["reason"] = "det_sign";
    return Verdict::no(sides);
  }
  return Verdict::yes(sides);
}

namespace {

// Multiplication in ⊕ Z/d_i (+ free part): componentwise with reduction.
std::vector<mpz_class> reduce_coords(std::vector<mpz_class> x,
                                     const std::vector<mpz_class>& torsion) {
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x[i].get_mpz_t(), torsion[i].get_mpz_t());
    x[i] = r;
  }
  return x;
}

// Order of the subgroup of ⊕ Z/d_i generated by the columns of M, computed
// as the index through a Smith form of [M | diag(d)].
bool columns_generate(const IntMatrix& m, const std::vector<mpz_class>& torsion) {
  const std::size_t k = torsion.size();
  IntMatrix stacked(k, m.cols() + k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) stacked.at(i, j) = m.at(i, j);
    stacked.at(i, m.cols() + i) = torsion[i];
  }
  auto snf = smith_normal_form(stacked);
  mpz_class coker(1);
  for (std::size_t i = 0; i < k; ++i) {
    if (snf.D.at(i, i) == 0) return false;
    coker *= snf.D.at(i, i);
  }
  return coker == 1;
}

}  // namespace

Verdict unital_bf_isomorphic(const FGAbelianGroup& g, const FGAbelianGroup& h) {
  if (!g.distinguished || !h.distinguished)
    throw DataError("unital comparison requires distinguished elements on both groups");
  if (g.torsion != h.torsion || g.free_rank != h.free_rank) {
    return Verdict::no({{"reason", "abstract_group"},
                        {"left", group_to_json(g)},
                        {"right", group_to_json(h)}});
  }
  const auto& u = *g.distinguished;
  const auto& v = *h.distinguished;
  bool u_zero = std::all_of(u.begin(), u.end(), [](const mpz_class& x) { return x == 0; });
  bool v_zero = std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
  if (u_zero && v_zero) return Verdict::yes({{"reason", "both classes are zero"}});
  if (u_zero != v_zero)
    return Verdict::no({{"reason", "unit_class"}, {"left_zero", u_zero}, {"right_zero", v_zero}});

  if (g.free_rank == 0 && g.torsion.size() == 1) {
    // Cyclic: automorphisms are the units, so classes match iff the element
    // orders agree.
    mpz_class d = g.torsion[0];
    mpz_class ou = d / gcd(u[0], d);
    mpz_class ov = d / gcd(v[0], d);
    if (ou == ov) return Verdict::yes({{"reason", "cyclic_order"}, {"order", mpz_to_json(ou)}});
    return Verdict::no({{"reason", "unit_class_order"},
                        {"left_order", mpz_to_json(ou)},
                        {"right_order", mpz_to_json(ov)}});
  }
  if (g.free_rank > 0)
    return Verdict::unknown("infinite group beyond the zero/nonzero shortcut");

  mpz_class order = g.order();
  if (order > 1000000)
    return Verdict::unknown("group order exceeds the automorphism enumeration bound");

  // Enumerate generator-image assignments in Smith coordinates, lowest
  // assignment first, with a global work budget.
  const std::size_t k = g.torsion.size();
  const unsigned long budget = 2000000;
  unsigned long steps = 0;
  IntMatrix m(k, k);
  std::function<bool(std::size_t, std::size_t)> assign = [&](std::size_t col,
                                                             std::size_t row) -> bool {
    if (++steps > budget) return false;
    if (col == k) {
      // phi(u) in Smith coordinates
      std::vector<mpz_class> img(k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) img[i] += m.at(i, j) * u[j];
      img = reduce_coords(std::move(img), g.torsion);
      if (img != v) return false;
      return columns_generate(m, g.torsion);
    }
    if (row == k) {
      // column col must define a homomorphism image of generator col:
      // d_col * phi(e_col) = 0, i.e. d_j | d_col * m(j, col).
      for (std::size_t j = 0; j < k; ++j)
        if ((g.torsion[col] * m.at(j, col)) % g.torsion[j] != 0) return false;
      return assign(col + 1, 0);
    }
    for (mpz_class val(0); val < g.torsion[row]; ++val) {
      m.at(row, col) = val;
      if (assign(col, row + 1)) return true;
      if (steps > budget) return false;
    }
    m.at(row, col) = 0;
    return false;
  };
  if (assign(0, 0)) {
    nlohmann::json mat = matrix_to_json(m);
    return Verdict::yes({{"automorphism", mat}});
  }
  if (steps > budget) return Verdict::unknown("automorphism enumeration budget exhausted");
  return Verdict::no({{"reason", "no automorphism carries one class to the other"}});
}

Verdict continuous_orbit_equivalent(const IntMatrix& a, const IntMatrix& b) {
  require_hypotheses(a, "continuous_orbit_equivalent(left)");
  require_hypotheses(b, "continuous_orbit_equivalent(right)");
  auto ca = coe_invariant(a);
  auto cb = coe_invariant(b);
  nlohmann::json sides = {
      {"left", {{"group", group_to_json(ca.group)}, {"det", mpz_to_json(ca.det)}}},
      {"right", {{"group", group_to_json(cb.group)}, {"det", mpz_to_json(cb.det)}}}};
  if (ca.det != cb.det) {
    sides["reason"] = "det";
    return Verdict::no(sides);
  }
  auto unital = unital_bf_isomorphic(ca.group, cb.group);
  if (unital.is_unknown()) {
    return Verdict::unknown("unital isomorphism test: " + unital.diagnostics, sides);
  }
  if (unital.is_no()) {
    sides["reason"] = "unital_class";
    sides["detail"] = unital.obstruction;
    return Verdict::no(sides);
  }
  sides["unital"] = unital.certificate;
  return Verdict::yes(sides);
}

}  // namespace symdyn
