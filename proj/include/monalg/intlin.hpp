// Exact integer and rational linear algebra: Hermite-style column reduction
// for lattice membership, fraction-free determinants, binomial-matrix
// determinants checked against their closed product formula, and Frobenius
// numbers for coprime pairs. No floating point anywhere.
#pragma once

#include "monalg/intmath.hpp"

#include <algorithm>
#include <optional>

namespace monalg {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMat {
 public:
  IntMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

  static IntMat from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return IntMat(0, 0);
    IntMat m(cols[0].size(), cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw input_error("from_columns: ragged input");
      for (size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Int& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  Vec mul(const Vec& x) const {
    if (x.size() != cols_) throw input_error("IntMat::mul: dimension mismatch");
    Vec r(rows_, 0);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * x[j];
    return r;
  }

 private:
  size_t rows_, cols_;
  std::vector<Int> e_;
};

// Solve basis * x = target over the integers, where the columns of `basis`
// generate the lattice. Column echelon form is reached by integer column
// operations (gcd steps), mirrored on a transform matrix so a solution in
// echelon coordinates pulls back to the original generators.
inline std::optional<Vec> lattice_solve(const IntMat& basis, const Vec& target) {
  const size_t d = basis.rows(), n = basis.cols();
  if (target.size() != d) throw input_error("lattice_solve: dimension mismatch");
  if (n == 0) {
    if (is_zero_vec(target)) return Vec{};
    return std::nullopt;
  }

  IntMat h(d, n);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < n; ++j) h.at(i, j) = basis.at(i, j);
  IntMat u(n, n);
  for (size_t j = 0; j < n; ++j) u.at(j, j) = 1;

  auto col_addmul = [&](size_t dst, size_t src, const Int& q) {
    for (size_t i = 0; i < d; ++i) h.at(i, dst) += q * h.at(i, src);
    for (size_t i = 0; i < n; ++i) u.at(i, dst) += q * u.at(i, src);
  };
  auto col_swap = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < d; ++i) std::swap(h.at(i, a), h.at(i, b));
    for (size_t i = 0; i < n; ++i) std::swap(u.at(i, a), u.at(i, b));
  };
  auto col_negate = [&](size_t c) {
    for (size_t i = 0; i < d; ++i) h.at(i, c) = -h.at(i, c);
    for (size_t i = 0; i < n; ++i) u.at(i, c) = -u.at(i, c);
  };

  std::vector<size_t> pivot_row;
  size_t k = 0;  // next pivot column
  for (size_t r = 0; r < d && k < n; ++r) {
    // Reduce row r across columns k..n-1 until at most one nonzero remains.
    while (true) {
      size_t best = n;
      for (size_t j = k; j < n; ++j)
        if (h.at(r, j) != 0 && (best == n || abs(h.at(r, j)) < abs(h.at(r, best)))) best = j;
      if (best == n) break;  // row is zero on the active columns
      bool others = false;
      for (size_t j = k; j < n; ++j) {
        if (j == best || h.at(r, j) == 0) continue;
        Int q = h.at(r, j) / h.at(r, best);
        col_addmul(j, best, -q);
        if (h.at(r, j) != 0) others = true;
      }
      if (!others) {
        col_swap(k, best);
        if (h.at(r, k) < 0) col_negate(k);
        pivot_row.push_back(r);
        ++k;
        break;
      }
    }
  }

  // Forward substitution over the staircase; divisions must be exact.
  Vec y(n, 0);
  Vec residual = target;
  for (size_t j = 0; j < pivot_row.size(); ++j) {
    size_t r = pivot_row[j];
    const Int& p = h.at(r, j);
    if (residual[r] % p != 0) return std::nullopt;
    Int yj = residual[r] / p;
    y[j] = yj;
    if (yj != 0)
      for (size_t i = 0; i < d; ++i) residual[i] -= yj * h.at(i, j);
  }
  if (!is_zero_vec(residual)) return std::nullopt;

  Vec x = u.mul(y);
  if (basis.mul(x) != target) throw invariant_error("lattice_solve: verification failed");
  return x;
}

inline std::optional<Vec> lattice_solve(const std::vector<Vec>& basis_cols, const Vec& target) {
  return lattice_solve(IntMat::from_columns(basis_cols), target);
}

// Fraction-free (Bareiss) determinant of a square integer matrix.
inline Int bareiss_det(IntMat m) {
  if (m.rows() != m.cols()) throw input_error("bareiss_det: non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

// Determinant of the (p+1)x(p+1) matrix with entry (i,j) = binomial(a_i, j),
// 0 <= j <= p, for strictly increasing positive a. Evaluated both by
// fraction-free elimination and by the closed product formula
// prod_{i<j} (a_j - a_i) / (p! (p-1)! ... 2!); the two must agree.
inline Int binom_det(const std::vector<Int>& a) {
  if (a.empty()) throw input_error("binom_det: empty input");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0) throw input_error("binom_det: entries must be positive");
    if (i > 0 && a[i] <= a[i - 1]) throw input_error("binom_det: entries must be strictly increasing");
  }
  const size_t p1 = a.size();
  IntMat m(p1, p1);
  for (size_t i = 0; i < p1; ++i)
    for (size_t j = 0; j < p1; ++j) m.at(i, j) = binomial(a[i], Int(j));
  Int elim = bareiss_det(m);

  Int num = 1;
  for (size_t i = 0; i < p1; ++i)
    for (size_t j = i + 1; j < p1; ++j) num *= a[j] - a[i];
  Int den = 1;
  for (size_t k = 2; k < p1; ++k) den *= factorial(static_cast<unsigned>(k));
  if (num % den != 0) throw invariant_error("binom_det: closed formula not integral");
  Int closed = num / den;

  if (closed != elim) throw invariant_error("binom_det: elimination and closed formula disagree");
  if (closed <= 0) throw invariant_error("binom_det: result not positive");
  return closed;
}

// Largest integer not representable as a nonnegative combination of the
// coprime pair (j1, j2): j1*j2 - j1 - j2. Everything above it is representable.
inline Int frobenius_pair(const Int& j1, const Int& j2) {
  if (j1 <= 0 || j2 <= 0) throw input_error("frobenius_pair: inputs must be positive");
  if (gcd(j1, j2) != 1) throw input_error("frobenius_pair: inputs must be coprime");
  return j1 * j2 - j1 - j2;
}

// ---- rational elimination helpers ---------------------------------------

struct QMat {
  size_t rows = 0, cols = 0;
  std::vector<Rat> e;
  QMat(size_t r, size_t c) : rows(r), cols(c), e(r * c, Rat(0)) {}
  Rat& at(size_t i, size_t j) { return e[i * cols + j]; }
  const Rat& at(size_t i, size_t j) const { return e[i * cols + j]; }
};

// Particular solution of A y = t over Q, or nullopt when inconsistent.
inline std::optional<QVec> gauss_solve(QMat a, QVec t) {
  if (t.size() != a.rows) throw input_error("gauss_solve: dimension mismatch");
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < a.cols && r < a.rows; ++c) {
    size_t p = r;
    while (p < a.rows && a.at(p, c) == 0) ++p;
    if (p == a.rows) continue;
    if (p != r) {
      for (size_t j = 0; j < a.cols; ++j) std::swap(a.at(r, j), a.at(p, j));
      std::swap(t[r], t[p]);
    }
    Rat inv = Rat(1) / a.at(r, c);
    for (size_t j = c; j < a.cols; ++j) a.at(r, j) *= inv;
    t[r] *= inv;
    for (size_t i = 0; i < a.rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (size_t j = c; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
      t[i] -= f * t[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < a.rows; ++i)
    if (t[i] != 0) return std::nullopt;
  QVec y(a.cols, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) y[pivot_col[i]] = t[i];
  return y;
}

// Basis of the nullspace of A over Q (free columns set to 1).
inline std::vector<QVec> gauss_nullspace(QMat a) {
  std::vector<size_t> pivot_col(a.cols, SIZE_MAX);
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < a.cols && r < a.rows; ++c) {
    size_t p = r;
    while (p < a.rows && a.at(p, c) == 0) ++p;
    if (p == a.rows) continue;
    if (p != r)
      for (size_t j = 0; j < a.cols; ++j) std::swap(a.at(r, j), a.at(p, j));
    Rat inv = Rat(1) / a.at(r, c);
    for (size_t j = c; j < a.cols; ++j) a.at(r, j) *= inv;
    for (size_t i = 0; i < a.rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (size_t j = c; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivot_col[c] = r;
    pivots.push_back(c);
    ++r;
  }
  std::vector<QVec> basis;
  for (size_t c = 0; c < a.cols; ++c) {
    if (pivot_col[c] != SIZE_MAX) continue;
    QVec v(a.cols, Rat(0));
    v[c] = 1;
    for (size_t pc : pivots) v[pc] = -a.at(pivot_col[pc], c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Integer feasibility of A y = t with optional per-row moduli (0 = exact row):
// rows with modulus m are congruences mod m, realized by adjoining m*e_r
// columns to the lattice. Returns the y-part of a solution.
inline std::optional<Vec> integer_solve_mod(const IntMat& a, const Vec& t, const Vec& moduli) {
  const size_t rows = a.rows(), cols = a.cols();
  if (t.size() != rows || moduli.size() != rows) throw input_error("integer_solve_mod: dimension mismatch");
  size_t extra = 0;
  for (const Int& m : moduli)
    if (m != 0) ++extra;
  IntMat full(rows, cols + extra);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) full.at(i, j) = a.at(i, j);
  size_t k = cols;
  for (size_t i = 0; i < rows; ++i)
    if (moduli[i] != 0) full.at(i, k++) = moduli[i];
  auto sol = lattice_solve(full, t);
  if (!sol) return std::nullopt;
  Vec y(sol->begin(), sol->begin() + cols);
  return y;
}

}  // namespace monalg
