#include "symdyn/int_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace symdyn {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix must have at least one row and column");
  data_.assign(rows * cols, mpz_class(0));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<mpz_class>> rows) {
  if (rows.empty() || rows.front().empty())
    throw DimensionError("matrix must have at least one row and column");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged rows in matrix literal");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<mpz_class>> conv;
  conv.reserve(rows.size());
  for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
  return from_rows(std::move(conv));
}

bool IntMatrix::is_nonnegative() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x >= 0; });
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("product shape mismatch: " + std::to_string(a.rows_) + "x" +
                         std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                         std::to_string(b.cols_));
  IntMatrix c(a.rows_, b.cols_);
  mpz_class acc;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        acc = aik * b.at(k, j);
        c.at(i, j) += acc;
      }
    }
  }
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("difference shape mismatch");
  IntMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& perm) const {
  if (!is_square() || perm.size() != rows_) throw DimensionError("permutation size mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(perm[i], perm[j]) = at(i, j);
  return out;
}

std::string IntMatrix::to_text() const {
  std::ostringstream os;
  os << rows_ << ' ' << cols_ << '\n';
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j).get_str();
    }
    os << '\n';
  }
  return os.str();
}

IntMatrix power(const IntMatrix& a, unsigned m) {
  if (!a.is_square()) throw DimensionError("power requires a square matrix");
  IntMatrix result = IntMatrix::identity(a.rows());
  for (unsigned i = 0; i < m; ++i) result = result * a;
  return result;
}

std::size_t rank_over_rationals(const IntMatrix& a) {
  // Bareiss fraction-free elimination; only the rank is extracted.
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<mpz_class>> w(m, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = a.at(i, j);

  mpz_class prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && w[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(w[piv], w[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        w[i][j] = (w[rank][col] * w[i][j] - w[i][col] * w[rank][j]) / prev;
      }
      w[i][col] = 0;
    }
    prev = w[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

// Tarjan-free strongly connected components (iterative Kosaraju).
std::vector<std::size_t> scc_ids(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.at(i, j) > 0) {
        fwd[i].push_back(j);
        bwd[j].push_back(i);
      }
  std::vector<std::size_t> order;
  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < fwd[v].size()) {
        std::size_t w = fwd[v][idx++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<std::size_t> comp(n, n);
  std::size_t ncomp = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != n) continue;
    std::vector<std::size_t> stack{*it};
    comp[*it] = ncomp;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : bwd[v])
        if (comp[w] == n) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  return comp;
}

// gcd of cycle lengths within one strongly connected component; 0 when the
// component carries no edge.
unsigned component_period(const IntMatrix& a, const std::vector<std::size_t>& comp,
                          std::size_t id, std::size_t root) {
  const std::size_t n = a.rows();
  std::vector<long> level(n, -1);
  std::vector<std::size_t> queue{root};
  level[root] = 0;
  mpz_class g(0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::size_t v = queue[qi];
    for (std::size_t w = 0; w < n; ++w) {
      if (a.at(v, w) == 0 || comp[w] != id) continue;
      if (level[w] < 0) {
        level[w] = level[v] + 1;
        queue.push_back(w);
      }
      mpz_class diff = level[v] + 1 - level[w];
      g = gcd(g, diff);
    }
  }
  return static_cast<unsigned>(mpz_class(abs(g)).get_ui());
}

}  // namespace

GraphClass classify_graph(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("classify_graph requires a square matrix");
  const std::size_t n = a.rows();
  GraphClass gc;

  for (std::size_t i = 0; i < n; ++i) {
    bool zr = true, zc = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (a.at(i, j) != 0) zr = false;
      if (a.at(j, i) != 0) zc = false;
    }
    gc.has_zero_row |= zr;
    gc.has_zero_column |= zc;
  }

  auto comp = scc_ids(a);
  std::size_t ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
  gc.irreducible = (ncomp == 1) && !a.is_zero();

  // Period: gcd over the cyclic components; 1 when the graph is acyclic.
  mpz_class g(0);
  for (std::size_t id = 0; id < ncomp; ++id) {
    std::size_t root = n;
    bool has_edge = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (comp[v] != id) continue;
      if (root == n) root = v;
      for (std::size_t w = 0; w < n; ++w)
        if (comp[w] == id && a.at(v, w) > 0) has_edge = true;
    }
    if (!has_edge) continue;
    unsigned p = component_period(a, comp, id, root);
    if (p != 0) g = gcd(g, mpz_class(p));
  }
  gc.period = g == 0 ? 1u : static_cast<unsigned>(g.get_ui());

  gc.primitive = gc.irreducible && gc.period == 1;

  gc.permutation = true;
  for (std::size_t i = 0; i < n && gc.permutation; ++i) {
    mpz_class rs(0), cs(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (a.at(i, j) < 0 || a.at(i, j) > 1 || a.at(j, i) > 1) gc.permutation = false;
      rs += a.at(i, j);
      cs += a.at(j, i);
    }
    if (rs != 1 || cs != 1) gc.permutation = false;
  }
  return gc;
}

std::vector<mpz_class> char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("char_poly requires a square matrix");
  // Faddeev-LeVerrier; every division is exact over the integers.
  const std::size_t n = a.rows();
  std::vector<mpz_class> coeffs;
  coeffs.reserve(n + 1);
  coeffs.emplace_back(1);
  IntMatrix m(n, n);
  mpz_class c(1);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c;
    m = a * shifted;
    mpz_class tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += m.at(i, i);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), tr.get_mpz_t(), mpz_class(k).get_mpz_t());
    if (r != 0) throw std::logic_error("char_poly: inexact trace division");
    c = -q;
    coeffs.push_back(c);
  }
  return coeffs;
}

namespace {

// Exact sign of p(x) at x = num / 2^shift for an integer-coefficient
// polynomial given degree-descending.
int poly_sign_at_dyadic(const std::vector<mpz_class>& p, const mpz_class& num, unsigned shift) {
  mpz_class acc(0);
  mpz_class scale(1);
  // p(num/2^s) * 2^(s*deg) = sum p[i] * num^(deg-i) * 2^(s*i)
  const std::size_t deg = p.size() - 1;
  std::vector<mpz_class> pw(deg + 1);
  pw[0] = 1;
  for (std::size_t i = 1; i <= deg; ++i) pw[i] = pw[i - 1] * num;
  mpz_class two_s = mpz_class(1) << shift;
  mpz_class twopow(1);
  for (std::size_t i = 0; i <= deg; ++i) {
    acc += p[i] * pw[deg - i] * twopow;
    twopow *= two_s;
  }
  return sgn(acc);
}

// Sturm chain of an integer polynomial (degree-descending coefficients),
// built with positive-multiplier pseudo-remainders so that sign variation
// counts V(a) - V(b) give the number of distinct real roots in (a, b].
std::vector<std::vector<mpz_class>> sturm_chain(std::vector<mpz_class> p) {
  auto strip = [](std::vector<mpz_class>& q) {
    std::size_t lead = 0;
    while (lead < q.size() && q[lead] == 0) ++lead;
    q.erase(q.begin(), q.begin() + lead);
  };
  auto content_reduce = [](std::vector<mpz_class>& q) {
    mpz_class g(0);
    for (const auto& c : q) g = gcd(g, c);
    if (g > 1)
      for (auto& c : q) c /= g;
  };
  auto derivative = [](const std::vector<mpz_class>& q) {
    std::vector<mpz_class> d;
    const std::size_t deg = q.size() - 1;
    for (std::size_t i = 0; i < deg; ++i) d.push_back(q[i] * mpz_class(deg - i));
    return d;
  };
  // remainder of u by v up to a positive scalar factor
  auto positive_prem = [&](std::vector<mpz_class> u, const std::vector<mpz_class>& v) {
    mpz_class scale = abs(v.front());
    while (true) {
      strip(u);
      if (u.size() < v.size()) break;
      for (auto& c : u) c *= scale;
      mpz_class q = u.front() / v.front();
      for (std::size_t i = 0; i < v.size(); ++i) u[i] -= q * v[i];
    }
    return u;
  };
  std::vector<std::vector<mpz_class>> chain;
  strip(p);
  if (p.empty()) return chain;
  content_reduce(p);
  chain.push_back(p);
  if (p.size() == 1) return chain;
  auto d = derivative(p);
  strip(d);
  content_reduce(d);
  chain.push_back(d);
  while (chain.back().size() > 1) {
    auto r = positive_prem(chain[chain.size() - 2], chain.back());
    strip(r);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    content_reduce(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

// Exact division q = p / g for integer polynomials with g | p over the
// rationals; the result is primitive with positive leading coefficient.
std::vector<mpz_class> exact_divide(std::vector<mpz_class> rem,
                                    const std::vector<mpz_class>& g) {
  std::vector<mpz_class> quot;
  while (rem.size() >= g.size()) {
    if (rem.front() == 0) {
      rem.erase(rem.begin());
      quot.push_back(0);
      continue;
    }
    mpz_class gc = gcd(rem.front(), g.front());
    mpz_class scale = g.front() / gc;
    if (scale != 1) {
      for (auto& c : rem) c *= scale;
      for (auto& c : quot) c *= scale;
    }
    mpz_class q = rem.front() / g.front();
    quot.push_back(q);
    for (std::size_t i = 0; i < g.size(); ++i) rem[i] -= q * g[i];
    rem.erase(rem.begin());
  }
  mpz_class content(0);
  for (const auto& c : quot) content = gcd(content, c);
  if (content > 1)
    for (auto& c : quot) c /= content;
  if (!quot.empty() && quot.front() < 0)
    for (auto& c : quot) c = -c;
  return quot;
}

int sign_variations_at_dyadic(const std::vector<std::vector<mpz_class>>& chain,
                              const mpz_class& num, unsigned shift) {
  int variations = 0, last = 0;
  for (const auto& q : chain) {
    int s = poly_sign_at_dyadic(q, num, shift);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int sign_variations_at_infinity(const std::vector<std::vector<mpz_class>>& chain) {
  int variations = 0, last = 0;
  for (const auto& q : chain) {
    int s = sgn(q.front());
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

EntropyResult entropy(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("entropy requires a square matrix");
  if (!a.is_nonnegative()) throw DataError("entropy requires a nonnegative matrix");
  EntropyResult res;
  if (a.is_zero()) {
    res.zero_warning = true;
    return res;
  }
  const std::size_t n = a.rows();
  mpz_class max_row(0);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class s(0);
    for (std::size_t j = 0; j < n; ++j) s += a.at(i, j);
    if (s > max_row) max_row = s;
  }
  auto chain = sturm_chain(char_poly(a));
  if (!chain.empty() && chain.back().size() > 1) {
    // repeated roots: divide by gcd(p, p') -- the chain's last element --
    // so that sign variations are well defined at root points
    auto reduced = exact_divide(chain.front(), chain.back());
    chain = sturm_chain(reduced);
  }
  const int v_inf = sign_variations_at_infinity(chain);
  auto roots_greater_than = [&](const mpz_class& num, unsigned shift) {
    return sign_variations_at_dyadic(chain, num, shift) - v_inf;
  };

  // The spectral radius of a nonnegative integer matrix is its largest real
  // eigenvalue; it is 0 exactly for nilpotent matrices and otherwise lies in
  // [1, max row sum]. Binary search on the count of roots to the right.
  if (roots_greater_than(0, 0) <= 0) {
    res.zero_warning = true;
    return res;
  }
  mpz_class lo_num(0), hi_num(max_row);
  unsigned shift = 0;
  if (lo_num == hi_num) hi_num += 1;
  for (int iter = 0; iter < 60; ++iter) {
    mpz_class mid = lo_num + hi_num;
    ++shift;
    lo_num *= 2;
    hi_num *= 2;
    if (roots_greater_than(mid, shift) >= 1)
      lo_num = mid;
    else
      hi_num = mid;
  }
  double lambda = mpq_class(mpq_class(lo_num + hi_num) / (mpz_class(1) << (shift + 1))).get_d();
  res.value = std::log(lambda);
  return res;
}

}  // namespace symdyn
