#pragma once

// Hermite and Smith normal forms over the integers.
//
// HNF convention (column style): for an integer matrix m of shape g x n and
// row rank g, hnf(m) returns unimodular U with m*U = [H | 0], where H is
// g x g lower triangular with positive diagonal and 0 <= H(i,j) < H(i,i)
// for j < i. The column span determines H uniquely.

#include <cstddef>
#include <optional>
#include <utility>

#include "tropabel/matrix.hpp"

namespace tropabel {

struct ExtendedGcd {
  Integer g, x, y; // x*a + y*b = g >= 0
};

inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

namespace detail {

inline void column_combine(IntMatrix& m, std::size_t ci, std::size_t cj, const Integer& a, const Integer& b,
                           const Integer& c, const Integer& d) {
  // (col_i, col_j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer vi = m(r, ci), vj = m(r, cj);
    m(r, ci) = a * vi + b * vj;
    m(r, cj) = c * vi + d * vj;
  }
}

inline void column_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  // col_dst -= q * col_src
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

inline void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

} // namespace detail

struct HnfResult {
  IntMatrix h; // g x g
  IntMatrix u; // n x n unimodular, m*u = [h | 0]
};

inline HnfResult hnf(const IntMatrix& m) {
  const std::size_t g = m.rows(), n = m.cols();
  require(n >= g, ErrorKind::RankDeficient, "fewer generators than ambient rank");
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(n);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(i, j) == 0) continue;
      Integer p = a(i, i), q = a(i, j);
      auto [d, x, y] = extended_gcd(p, q);
      Integer pd = p / d, qd = q / d;
      detail::column_combine(a, i, j, x, y, -qd, pd);
      detail::column_combine(u, i, j, x, y, -qd, pd);
    }
    require(a(i, i) != 0, ErrorKind::RankDeficient, "generators do not span a full-rank lattice");
    if (a(i, i) < 0) {
      for (std::size_t r = 0; r < g; ++r) a(r, i) = -a(r, i);
      for (std::size_t r = 0; r < n; ++r) u(r, i) = -u(r, i);
    }
    for (std::size_t j = 0; j < i; ++j) {
      Integer q = floor_div(a(i, j), a(i, i));
      detail::column_axpy(a, j, i, q);
      detail::column_axpy(u, j, i, q);
    }
  }
  return {a.columns(0, g), std::move(u)};
}

struct SnfResult {
  IntMatrix u; // left unimodular
  IntMatrix d; // diagonal, d(0,0) | d(1,1) | ...
  IntMatrix w; // right unimodular; u*m*w = d
  [[nodiscard]] IntVector diagonal() const {
    IntVector v;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) v.push_back(d(i, i));
    return v;
  }
};

inline SnfResult snf(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix w = IntMatrix::identity(cols);
  const std::size_t k = std::min(rows, cols);
  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      // pivot: smallest nonzero |entry| in the trailing block
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (!piv || abs_int(a(i, j)) < abs_int(a(piv->first, piv->second)))) piv = {{i, j}};
      if (!piv) break;
      detail::swap_rows(a, t, piv->first);
      detail::swap_rows(u, t, piv->first);
      detail::swap_cols(a, t, piv->second);
      detail::swap_cols(w, t, piv->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Integer q = a(i, t) / a(t, t);
        detail::row_axpy(a, i, t, q);
        detail::row_axpy(u, i, t, q);
        dirty = dirty || a(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Integer q = a(t, j) / a(t, t);
        detail::column_axpy(a, j, t, q);
        detail::column_axpy(w, j, t, q);
        dirty = dirty || a(t, j) != 0;
      }
      if (dirty) continue;

      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      // row_t += row_bad, then the next pass shrinks the pivot
      detail::row_axpy(a, t, *bad_row, Integer(-1));
      detail::row_axpy(u, t, *bad_row, Integer(-1));
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
    }
  }
  return {std::move(u), std::move(a), std::move(w)};
}

/// Some integer x with a*x = b, for `a` of full row rank; nullopt if none.
inline std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  require(b.size() == a.rows(), ErrorKind::DimensionMismatch, "right-hand side length");
  auto [h, u] = hnf(a);
  const std::size_t g = a.rows();
  IntVector y(a.cols(), Integer(0));
  for (std::size_t i = 0; i < g; ++i) {
    Integer s = b[i];
    for (std::size_t j = 0; j < i; ++j) s -= h(i, j) * y[j];
    if (s % h(i, i) != 0) return std::nullopt;
    y[i] = s / h(i, i);
  }
  return u * y;
}

/// Z-basis (as columns) of {x : a*x = 0}, for `a` of full row rank.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  auto u = hnf(a).u;
  return u.columns(a.rows(), a.cols() - a.rows());
}

} // namespace tropabel
