#pragma once

// Exact integer and rational linear algebra: Hermite and Smith normal
// forms, saturated kernel lattices, lattice quotients, and feasibility of
// rational linear systems. Everything is arbitrary precision.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hypertoric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
// mpq_class keeps every entry canonical: lowest terms, positive denominator.
using RatVector = std::vector<Rational>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer floor_of(const Rational& q) {
  return floor_div(q.get_num(), q.get_den());
}

// Fractional part in [0, 1).
inline Rational frac_of(const Rational& q) {
  Rational f = q - Rational(floor_of(q));
  f.canonicalize();
  return f;
}

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("ragged matrix columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix select_rows(std::span<const std::size_t> idx) const {
    IntMatrix m(idx.size(), cols_);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t j = 0; j < cols_; ++j) m(r, j) = (*this)(idx[r], j);
    return m;
  }
  IntMatrix select_cols(std::span<const std::size_t> idx) const {
    IntMatrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t c = 0; c < idx.size(); ++c) m(i, c) = (*this)(i, idx[c]);
    return m;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
  }

  // Row operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend IntVector operator*(const IntMatrix& a, const IntVector& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    IntVector y(a.rows_, Integer(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

inline RatVector multiply(const IntMatrix& a, const RatVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  RatVector y(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += Rational(a(i, j)) * x[j];
  return y;
}

// Bareiss fraction-free elimination; returns the rank, destroys `m`.
inline std::size_t bareiss_rank(IntMatrix m) {
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, rank);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer v = m(rank, c) * m(i, j) - m(i, c) * m(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

inline std::size_t rank(const IntMatrix& m) { return bareiss_rank(m); }

inline Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

struct HermiteResult {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, u * m == h
};

// Row-style HNF: h is in row echelon form, pivots are positive, and the
// entries above each pivot lie in [0, pivot). Pivoting picks the smallest
// nonzero absolute value in the current column.
inline HermiteResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      have_pivot = true;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Integer q = floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

struct SmithResult {
  IntMatrix s;  // diagonal, s(i,i) | s(i+1,i+1), nonnegative
  IntMatrix u;  // unimodular row transform
  IntMatrix v;  // unimodular column transform, u * m * v == s
};

inline SmithResult smith_normal_form(const IntMatrix& m) {
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t diag = std::min(s.rows(), s.cols());
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = s.rows(), pj = s.cols();
      for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
          if (s(i, j) == 0) continue;
          if (pi == s.rows() || abs(s(i, j)) < abs(s(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == s.rows()) return {std::move(s), std::move(u), std::move(v)};
      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Integer q = floor_div(s(i, t), s(t, t));
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Integer q = floor_div(s(t, j), s(t, t));
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and go again.
      std::size_t bad = s.rows();
      for (std::size_t i = t + 1; i < s.rows() && bad == s.rows(); ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == s.rows()) break;
      s.add_row_multiple(t, bad, Integer(1));
      u.add_row_multiple(t, bad, Integer(1));
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

inline IntVector invariant_factors(const IntMatrix& m) {
  SmithResult snf = smith_normal_form(m);
  IntVector out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (snf.s(i, i) != 0) out.push_back(snf.s(i, i));
  return out;
}

// Columns form a Z-basis of ker(beta) ∩ Z^n, canonicalized so that the
// transpose is in Hermite normal form.
inline IntMatrix integer_kernel_basis(const IntMatrix& beta) {
  const std::size_t n = beta.cols();
  HermiteResult hr = hermite_normal_form(beta.transpose());
  auto row_is_zero = [&](std::size_t i) {
    for (std::size_t j = 0; j < hr.h.cols(); ++j)
      if (hr.h(i, j) != 0) return false;
    return true;
  };
  std::size_t r = 0;
  while (r < hr.h.rows() && !row_is_zero(r)) ++r;
  std::vector<IntVector> kernel_rows;
  for (std::size_t i = r; i < n; ++i) kernel_rows.push_back(hr.u.row(i));
  if (kernel_rows.empty()) return IntMatrix(n, 0);
  IntMatrix canon = hermite_normal_form(IntMatrix::from_rows(kernel_rows, n)).h;
  return canon.transpose();
}

// Some x in Z^n with a*x == b, if one exists.
inline std::optional<IntVector> integer_solve(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("integer_solve: shape mismatch");
  SmithResult snf = smith_normal_form(a);
  IntVector y = snf.u * b;
  IntVector z(a.cols(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const bool on_diag = i < a.cols();
    const Integer d = on_diag ? snf.s(i, i) : Integer(0);
    if (d == 0) {
      if (y[i] != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(y[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), y[i].get_mpz_t(), d.get_mpz_t());
    z[i] = q;
  }
  return snf.v * z;
}

// Solution of a*x == b over Q (free variables set to zero), or nullopt
// when rank(a) < rank(a|b).
inline std::optional<RatVector> rational_feasible(const IntMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("rational_feasible: shape mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<RatVector> aug(m, RatVector(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(a(i, j));
    aug[i][n] = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && aug[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(aug[p], aug[r]);
    const Rational inv = 1 / aug[r][c];
    for (std::size_t j = c; j <= n; ++j) aug[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (aug[i][n] != 0) return std::nullopt;
  RatVector x(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = aug[i][n];
  return x;
}

// Inverse of a unimodular matrix.
inline IntMatrix unimodular_inverse(const IntMatrix& u) {
  const std::size_t n = u.rows();
  if (u.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  IntMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n, Rational(0));
    e[j] = 1;
    auto x = rational_feasible(u, e);
    if (!x) throw std::invalid_argument("matrix is singular");
    for (std::size_t i = 0; i < n; ++i) {
      if ((*x)[i].get_den() != 1) throw std::invalid_argument("matrix is not unimodular");
      inv(i, j) = (*x)[i].get_num();
    }
  }
  return inv;
}

struct LatticeQuotient {
  IntVector invariant_factors;      // nontrivial only, each divides the next
  std::vector<IntVector> coset_reps;  // one generator per cyclic factor

  Integer order() const {
    Integer o = 1;
    for (const auto& f : invariant_factors) o *= f;
    return o;
  }
};

// (span_Q(vectors) ∩ Z^d) / span_Z(vectors) for Q-independent vectors.
inline LatticeQuotient lattice_quotient(const std::vector<IntVector>& vectors, std::size_t d) {
  IntMatrix m = IntMatrix::from_columns(vectors, d);
  if (rank(m) != vectors.size())
    throw std::invalid_argument("lattice_quotient: vectors are linearly dependent");
  SmithResult snf = smith_normal_form(m);
  // m*v = u^{-1}*s, so the first |vectors| columns of u^{-1} are a basis of
  // the saturation and s(i,i) times column i spans the sublattice.
  IntMatrix uinv = unimodular_inverse(snf.u);
  LatticeQuotient q;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (snf.s(i, i) == 1) continue;
    q.invariant_factors.push_back(snf.s(i, i));
    q.coset_reps.push_back(uinv.column(i));
  }
  return q;
}

}  // namespace hypertoric
