#include "symdyn/zlinalg.hpp"

#include <algorithm>
#include <tuple>

namespace symdyn {

mpz_class FGAbelianGroup::order() const {
  if (free_rank > 0) return 0;
  mpz_class o(1);
  for (const auto& d : torsion) o *= d;
  return o;
}

namespace {

struct SmithState {
  IntMatrix u, d, v;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  // row[a] -= q * row[b]
  void row_sub(std::size_t a, std::size_t b, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) -= q * d.at(b, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) -= q * u.at(b, j);
  }
  // col[a] -= q * col[b]
  void col_sub(std::size_t a, std::size_t b, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, a) -= q * d.at(i, b);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) -= q * v.at(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < d.cols(); ++j) d.at(a, j) = -d.at(a, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
  }
  // col[a] += col[b]
  void col_add(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < d.rows(); ++i) d.at(i, a) += d.at(i, b);
    for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) += v.at(i, b);
  }

  bool find_pivot(std::size_t s, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    mpz_class best;
    for (std::size_t i = s; i < d.rows(); ++i)
      for (std::size_t j = s; j < d.cols(); ++j) {
        const mpz_class& x = d.at(i, j);
        if (x == 0) continue;
        mpz_class ax = abs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    return found;
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithState st{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  const std::size_t k = std::min(m.rows(), m.cols());

  for (std::size_t s = 0; s < k; ++s) {
    std::size_t pi = s, pj = s;
    if (!st.find_pivot(s, pi, pj)) break;
    st.swap_rows(s, pi);
    st.swap_cols(s, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = s + 1; i < st.d.rows(); ++i) {
        if (st.d.at(i, s) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), st.d.at(i, s).get_mpz_t(), st.d.at(s, s).get_mpz_t());
        st.row_sub(i, s, q);
        if (st.d.at(i, s) != 0) {
          // remainder has smaller absolute value: promote it to pivot
          st.swap_rows(s, i);
          clean = false;
        }
      }
      for (std::size_t j = s + 1; j < st.d.cols(); ++j) {
        if (st.d.at(s, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), st.d.at(s, j).get_mpz_t(), st.d.at(s, s).get_mpz_t());
        st.col_sub(j, s, q);
        if (st.d.at(s, j) != 0) {
          st.swap_cols(s, j);
          clean = false;
        }
      }
      if (clean) break;
    }
    if (st.d.at(s, s) < 0) st.negate_row(s);
  }

  // Enforce the divisibility chain d_i | d_{i+1}.
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const mpz_class& a = st.d.at(i, i);
      const mpz_class& b = st.d.at(i + 1, i + 1);
      if (a == 0 && b != 0) {
        st.swap_rows(i, i + 1);
        st.swap_cols(i, i + 1);
        changed = true;
        continue;
      }
      if (a != 0 && b % a != 0) {
        st.col_add(i, i + 1);
        // re-diagonalize the 2x2 block
        for (;;) {
          bool clean = true;
          if (st.d.at(i + 1, i) != 0) {
            if (abs(st.d.at(i + 1, i)) < abs(st.d.at(i, i))) {
              st.swap_rows(i, i + 1);
              clean = false;
            }
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), st.d.at(i + 1, i).get_mpz_t(), st.d.at(i, i).get_mpz_t());
            st.row_sub(i + 1, i, q);
            if (st.d.at(i + 1, i) != 0) {
              st.swap_rows(i, i + 1);
              clean = false;
            }
          }
          if (st.d.at(i, i + 1) != 0) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), st.d.at(i, i + 1).get_mpz_t(), st.d.at(i, i).get_mpz_t());
            st.col_sub(i + 1, i, q);
            if (st.d.at(i, i + 1) != 0) {
              st.swap_cols(i, i + 1);
              clean = false;
            }
          }
          if (clean) break;
        }
        if (st.d.at(i, i) < 0) st.negate_row(i);
        if (st.d.at(i + 1, i + 1) < 0) st.negate_row(i + 1);
        changed = true;
      }
    }
    if (!changed) break;
  }

  return SmithDecomposition{st.u, st.d, st.v};
}

FGAbelianGroup bowen_franks(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("bowen_franks requires a square matrix");
  auto snf = smith_normal_form(IntMatrix::identity(a.rows()) - a);
  FGAbelianGroup g;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const mpz_class& d = snf.D.at(i, i);
    if (d == 0)
      ++g.free_rank;
    else if (d > 1)
      g.torsion.push_back(d);
  }
  return g;
}

FGAbelianGroup unit_class(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("unit_class requires a square matrix");
  const std::size_t n = a.rows();
  auto snf = smith_normal_form(IntMatrix::identity(n) - a);
  FGAbelianGroup g;
  std::vector<mpz_class> coords;
  // w = U.(1,...,1); coordinate i lives in Z/d_i (dropped when d_i = 1).
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class w(0);
    for (std::size_t j = 0; j < n; ++j) w += snf.U.at(i, j);
    const mpz_class& d = snf.D.at(i, i);
    if (d == 0) {
      ++g.free_rank;
      coords.push_back(w);
    } else if (d > 1) {
      g.torsion.push_back(d);
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), w.get_mpz_t(), d.get_mpz_t());
      coords.push_back(r);
    }
  }
  // Smith order is torsion-first along the diagonal except that zeros come
  // last, which matches the coords order: torsion entries precede free ones.
  g.distinguished = std::move(coords);
  return g;
}

mpz_class determinant(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("determinant requires a square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<mpz_class>> w(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = a.at(i, j);
  mpz_class prev(1);
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && w[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(w[piv], w[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        w[i][j] = (w[c][c] * w[i][j] - w[i][c] * w[c][j]) / prev;
      w[i][c] = 0;
    }
    prev = w[c][c];
  }
  return sign * w[n - 1][n - 1];
}

std::pair<mpz_class, int> det_id_minus(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("det_id_minus requires a square matrix");
  mpz_class d = determinant(IntMatrix::identity(a.rows()) - a);
  return {d, sgn(d)};
}

}  // namespace symdyn
