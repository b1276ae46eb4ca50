#pragma once

// Finite-index sublattices of Z^g and full-rank lattices in Q^g, always held
// in the canonical column HNF so that structural equality is lattice
// equality.

#include <cstddef>
#include <optional>
#include <vector>

#include "tropabel/matrix.hpp"
#include "tropabel/normal_form.hpp"

namespace tropabel {

class Sublattice {
public:
  Sublattice() = default;

  /// Lattice spanned by the columns of `generators` (g x n, rank g).
  explicit Sublattice(const IntMatrix& generators) : basis_(hnf(generators).h) {}

  static Sublattice full(std::size_t g) { return Sublattice(IntMatrix::identity(g)); }
  static Sublattice scaled(std::size_t g, const Integer& k) {
    return Sublattice(IntMatrix(k * IntMatrix::identity(g)));
  }
  static Sublattice from_columns(std::size_t g, const std::vector<IntVector>& cols) {
    return Sublattice(IntMatrix::from_columns(g, cols));
  }
  /// Trusts that `h` is already in canonical HNF; checked.
  static Sublattice from_hnf(const IntMatrix& h) {
    Sublattice s(h);
    require(s.basis_ == h, ErrorKind::Validation, "lattice basis is not in canonical HNF");
    return s;
  }

  [[nodiscard]] std::size_t rank() const noexcept { return basis_.rows(); }
  [[nodiscard]] const IntMatrix& basis() const noexcept { return basis_; }
  [[nodiscard]] IntVector basis_vector(std::size_t j) const { return basis_.column(j); }

  /// [Z^g : this] = |det|, the product of the HNF diagonal.
  [[nodiscard]] Integer index() const {
    Integer d = 1;
    for (std::size_t i = 0; i < rank(); ++i) d *= basis_(i, i);
    return d;
  }

  /// Integer coefficients of v in the basis, if v lies in the lattice.
  [[nodiscard]] std::optional<IntVector> coordinates(const IntVector& v) const {
    require(v.size() == rank(), ErrorKind::DimensionMismatch, "vector length differs from lattice rank");
    IntVector x(rank(), Integer(0));
    for (std::size_t i = 0; i < rank(); ++i) {
      Integer s = v[i];
      for (std::size_t j = 0; j < i; ++j) s -= basis_(i, j) * x[j];
      if (s % basis_(i, i) != 0) return std::nullopt;
      x[i] = s / basis_(i, i);
    }
    return x;
  }

  /// Rational coefficients of v (always defined since the basis is nonsingular).
  [[nodiscard]] RationalVector rational_coordinates(const RationalVector& v) const {
    require(v.size() == rank(), ErrorKind::DimensionMismatch, "vector length differs from lattice rank");
    RationalVector x(rank(), Rational(0));
    for (std::size_t i = 0; i < rank(); ++i) {
      Rational s = v[i];
      for (std::size_t j = 0; j < i; ++j) s -= Rational(basis_(i, j)) * x[j];
      x[i] = s / Rational(basis_(i, i));
    }
    return x;
  }

  [[nodiscard]] bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

  [[nodiscard]] bool contains(const Sublattice& other) const {
    require(other.rank() == rank(), ErrorKind::DimensionMismatch, "lattice ranks differ");
    for (std::size_t j = 0; j < rank(); ++j)
      if (!contains(other.basis_vector(j))) return false;
    return true;
  }

  friend bool operator==(const Sublattice& a, const Sublattice& b) { return a.basis_ == b.basis_; }
  friend bool operator<(const Sublattice& a, const Sublattice& b) { return a.basis_ < b.basis_; }

private:
  IntMatrix basis_;
};

inline Sublattice sum(const Sublattice& a, const Sublattice& b) {
  require(a.rank() == b.rank(), ErrorKind::DimensionMismatch, "lattice ranks differ");
  return Sublattice(hconcat(a.basis(), b.basis()));
}

/// a ∩ b via the integer kernel of [A | -B].
inline Sublattice intersect(const Sublattice& a, const Sublattice& b) {
  require(a.rank() == b.rank(), ErrorKind::DimensionMismatch, "lattice ranks differ");
  const std::size_t g = a.rank();
  IntMatrix neg_b = Integer(-1) * b.basis();
  IntMatrix kernel = integer_kernel(hconcat(a.basis(), neg_b));
  // kernel columns are (u; w) with A u = B w; keep A u
  IntMatrix top(g, kernel.cols());
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < kernel.cols(); ++j) top(i, j) = kernel(i, j);
  return Sublattice(a.basis() * top);
}

inline bool is_subset(const Sublattice& small, const Sublattice& big) { return big.contains(small); }

/// Full-rank lattice in Q^g. The basis is hnf(D*G)/D for any common
/// denominator D of the generators, which does not depend on D.
class RationalLattice {
public:
  RationalLattice() = default;

  explicit RationalLattice(const RationalMatrix& generators) {
    Integer den = common_denominator(generators);
    IntMatrix scaled = to_integer(RationalMatrix(Rational(den) * generators));
    basis_ = Rational(1) / Rational(den) * to_rational(hnf(scaled).h);
  }

  static RationalLattice integral(std::size_t g) { return RationalLattice(RationalMatrix::identity(g)); }

  [[nodiscard]] std::size_t rank() const noexcept { return basis_.rows(); }
  [[nodiscard]] const RationalMatrix& basis() const noexcept { return basis_; }

  [[nodiscard]] Rational covolume() const { return determinant(basis_); }

  [[nodiscard]] RationalVector rational_coordinates(const RationalVector& v) const {
    require(v.size() == rank(), ErrorKind::DimensionMismatch, "vector length differs from lattice rank");
    RationalVector x(rank(), Rational(0));
    for (std::size_t i = 0; i < rank(); ++i) {
      Rational s = v[i];
      for (std::size_t j = 0; j < i; ++j) s -= basis_(i, j) * x[j];
      x[i] = s / basis_(i, i);
    }
    return x;
  }

  [[nodiscard]] bool contains(const RationalVector& v) const { return is_integral(rational_coordinates(v)); }

  friend bool operator==(const RationalLattice& a, const RationalLattice& b) { return a.basis_ == b.basis_; }

private:
  RationalMatrix basis_;
};

/// The representative v - L*k (k integral) whose coordinates in the basis L
/// lie in [0,1)^g.
inline RationalVector reduce_mod_lattice(const RationalVector& v, const RationalMatrix& lattice_basis) {
  require(lattice_basis.is_square() && lattice_basis.rows() == v.size(), ErrorKind::DimensionMismatch,
          "lattice basis shape does not match vector");
  auto inv = try_inverse(lattice_basis);
  require(inv.has_value(), ErrorKind::SingularLattice, "lattice basis is singular");
  RationalVector c = *inv * v;
  for (auto& x : c) x = frac_of(x);
  return lattice_basis * c;
}

inline RationalVector reduce_mod_lattice(const RationalVector& v, const RationalLattice& l) {
  return reduce_mod_lattice(v, l.basis());
}

inline RationalVector reduce_mod_lattice(const RationalVector& v, const Sublattice& l) {
  return reduce_mod_lattice(v, to_rational(l.basis()));
}

} // namespace tropabel
