#pragma once

// Dense exact linear algebra over the rationals. Ranks and null spaces go
// through fraction-free (Bareiss) elimination on integer-scaled rows.

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nilsym/error.hpp"
#include "nilsym/rational.hpp"

namespace nilsym {

using Vector = std::vector<Rational>;

/// Row-major dense matrix. T only needs to be a commutative ring element
/// constructible from 0 and 1.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      assert(rows[r].size() == cols);
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      assert(cols[c].size() == rows);
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }
  bool is_symmetric() const { return is_square() && *this == transpose(); }
  bool is_skew() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r; c < cols_; ++c)
        if (!((*this)(r, c) + (*this)(c, r) == T(0))) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= T(-1); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    assert(a.cols_ == v.size());
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<mpz_class>;

// ---------------------------------------------------------------------------
// vector helpers

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v[i] = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vector operator+(Vector a, const Vector& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector operator*(const Rational& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

inline Rational dot(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

/// u^T G v
inline Rational inner(const QMatrix& gram, const Vector& u, const Vector& v) {
  return dot(u, gram * v);
}

// ---------------------------------------------------------------------------
// fraction-free elimination

/// Integer row echelon form of a rational matrix (each row first scaled by
/// the lcm of its denominators, which leaves the row space unchanged).
struct Echelon {
  ZMatrix rows;                       // only the first pivots.size() rows are nonzero
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
  std::vector<std::size_t> row_order; // original index of each echelon row
  int swap_sign = 1;
};

inline ZMatrix integer_rows(const QMatrix& m) {
  ZMatrix a(m.rows(), m.cols(), mpz_class(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_class d = m(r, c).denominator();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      if (x.is_zero()) continue;
      a(r, c) = x.numerator() * (l / x.denominator());
    }
  }
  return a;
}

/// Bareiss elimination. After step r every entry below the pivot rows is an
/// (r+1)-minor of the input, so every division is exact.
inline Echelon bareiss_echelon(ZMatrix a) {
  Echelon e;
  e.row_order.resize(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) e.row_order[i] = i;
  mpz_class prev = 1;
  mpz_class tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      a.swap_rows(p, r);
      std::swap(e.row_order[p], e.row_order[r]);
      e.swap_sign = -e.swap_sign;
    }
    const mpz_class pivot = a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const mpz_class lead = a(i, c);
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        tmp = pivot * a(i, j) - lead * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = pivot;
    e.pivots.push_back(c);
    ++r;
  }
  e.rows = std::move(a);
  return e;
}

inline Echelon row_echelon(const QMatrix& m) { return bareiss_echelon(integer_rows(m)); }

inline std::size_t rank(const QMatrix& m) { return row_echelon(m).pivots.size(); }

inline std::size_t rank(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(QMatrix::from_rows(vectors, dim));
}

/// Basis of {x : m x = 0}. Each basis vector has a 1 in one free coordinate
/// and 0 in the others.
inline std::vector<Vector> null_space(const QMatrix& m) {
  const std::size_t n = m.cols();
  Echelon e = row_echelon(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x = zero_vector(n);
    x[f] = 1;
    for (std::size_t t = e.pivots.size(); t-- > 0;) {
      const std::size_t pc = e.pivots[t];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < n; ++j)
        if (e.rows(t, j) != 0 && !x[j].is_zero()) s += Rational(e.rows(t, j)) * x[j];
      x[pc] = -s / Rational(e.rows(t, pc));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

inline Rational determinant(const QMatrix& m) {
  assert(m.is_square());
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // det(m) = det(integer rows) / product of row scalings
  Rational scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_class d = m(r, c).denominator();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    scale *= Rational(l);
  }
  Echelon e = row_echelon(m);
  if (e.pivots.size() < n) return 0;
  return Rational(e.rows(n - 1, n - 1)) * Rational(e.swap_sign) / scale;
}

/// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<QMatrix> inverse(const QMatrix& m) {
  assert(m.is_square());
  const std::size_t n = m.rows();
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
        if (!inv(c, j).is_zero()) inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in
/// order (pivot columns of the matrix whose columns are the vectors).
inline std::vector<std::size_t> independent_subset(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  return row_echelon(QMatrix::from_columns(vectors, dim)).pivots;
}

inline bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  std::vector<Vector> ext = basis;
  ext.push_back(v);
  return rank(ext, v.size()) == rank(basis, v.size());
}

/// Span(a) == span(b) as subspaces of the ambient space.
inline bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t dim) {
  std::size_t ra = rank(a, dim);
  if (ra != rank(b, dim)) return false;
  std::vector<Vector> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return rank(all, dim) == ra;
}

/// G-orthogonalization without normalization (stays inside the rationals).
/// Input must be linearly independent.
inline std::vector<Vector> gram_schmidt(const std::vector<Vector>& vectors, const QMatrix& gram) {
  std::vector<Vector> out;
  std::vector<Rational> norms;
  for (const auto& v : vectors) {
    Vector w = v;
    for (std::size_t i = 0; i < out.size(); ++i) {
      Rational c = inner(gram, out[i], v) / norms[i];
      if (!c.is_zero()) w = w - c * out[i];
    }
    norms.push_back(inner(gram, w, w));
    out.push_back(std::move(w));
  }
  return out;
}

/// Coordinates of v in the (independent) basis, or nullopt when v is not in
/// its span.
inline std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v) {
  const std::size_t n = v.size();
  const std::size_t k = basis.size();
  // Solve [basis | v] via the null space of [basis | -v].
  std::vector<Vector> cols = basis;
  cols.push_back(Rational(-1) * v);
  auto ns = null_space(QMatrix::from_columns(cols, n));
  for (const auto& x : ns) {
    if (x[k].is_zero()) continue;
    Vector c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = x[i] / x[k];
    return c;
  }
  if (is_zero(v)) return zero_vector(k);
  return std::nullopt;
}

}  // namespace nilsym
