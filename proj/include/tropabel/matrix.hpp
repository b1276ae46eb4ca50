#pragma once

// Dense row-major matrices over Integer and Rational, with the handful of
// exact operations the lattice code needs (products, determinant, inverse).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "tropabel/error.hpp"
#include "tropabel/rational.hpp"

namespace tropabel {

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      require(r.size() == cols_, ErrorKind::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      require(cols[j].size() == rows, ErrorKind::DimensionMismatch, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::vector<T> column(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  [[nodiscard]] std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  void set_column(std::size_t j, const std::vector<T>& v) {
    require(v.size() == rows_, ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Columns [first, first+count).
  [[nodiscard]] Matrix columns(std::size_t first, std::size_t count) const {
    Matrix m(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    return m;
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

  [[nodiscard]] const std::vector<T>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  /// Shape first, then row-major lexicographic.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::DimensionMismatch, "matrix sum shape");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::DimensionMismatch, "matrix difference shape");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x *= s;
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorKind::DimensionMismatch, "matrix product shape");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    require(a.cols_ == v.size(), ErrorKind::DimensionMismatch, "matrix-vector shape");
    std::vector<T> r(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) r[i] += a(i, k) * v[k];
    return r;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// [a | b]
template <typename T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.rows() == b.rows(), ErrorKind::DimensionMismatch, "hconcat row mismatch");
  Matrix<T> m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

template <typename T>
std::vector<T> operator+(std::vector<T> a, const std::vector<T>& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector sum length");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
template <typename T>
std::vector<T> operator-(std::vector<T> a, const std::vector<T>& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "vector difference length");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
template <typename T>
std::vector<T> operator-(std::vector<T> a) {
  for (auto& x : a) x = -x;
  return a;
}
template <typename T>
std::vector<T> scaled(const T& s, std::vector<T> a) {
  for (auto& x : a) x *= s;
  return a;
}
template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "dot length");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RationalVector to_rational(const IntVector& v) {
  return RationalVector(v.begin(), v.end());
}

inline RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

inline bool is_integral(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); });
}

inline bool is_integral(const RationalMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](const Rational& q) { return is_integral(q); });
}

inline IntVector to_integer(const RationalVector& v) {
  IntVector r;
  r.reserve(v.size());
  for (const auto& q : v) r.push_back(to_integer(q));
  return r;
}

inline IntMatrix to_integer(const RationalMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_integer(m(i, j));
  return r;
}

/// Least common multiple of all entry denominators (1 for integral input).
inline Integer common_denominator(const RationalMatrix& m) {
  Integer d = 1;
  for (const auto& q : m.data()) d = lcm_int(d, denominator_of(q));
  return d;
}

inline Integer common_denominator(const RationalVector& v) {
  Integer d = 1;
  for (const auto& q : v) d = lcm_int(d, denominator_of(q));
  return d;
}

inline bool is_symmetric(const RationalMatrix& m) { return m.is_square() && m == m.transpose(); }

inline Rational determinant(RationalMatrix a) {
  require(a.is_square(), ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

inline Integer determinant(const IntMatrix& a) { return to_integer(determinant(to_rational(a))); }

/// Inverse by Gauss-Jordan elimination; nullopt when singular.
inline std::optional<RationalMatrix> try_inverse(RationalMatrix a) {
  require(a.is_square(), ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

inline RationalMatrix inverse(const RationalMatrix& a) {
  auto inv = try_inverse(a);
  require(inv.has_value(), ErrorKind::SingularLattice, "matrix is singular");
  return *inv;
}

} // namespace tropabel
