#pragma once

// Lattices Λ = Z^g in a real torus N_R (tropical) or in (K*)^g (analytic).

#include <vector>

#include "tropabel/lattice.hpp"
#include "tropabel/monomial.hpp"

namespace tropabel {

/// Column j of V is trop(λ_j) in N_Q.
class TropTorus {
public:
  TropTorus() = default;
  explicit TropTorus(RationalMatrix v) : v_(std::move(v)) {
    require(v_.is_square() && v_.rows() > 0, ErrorKind::DimensionMismatch, "valuation matrix must be square");
    require(determinant(v_) != 0, ErrorKind::SingularLattice, "valuation matrix is singular");
  }
  static TropTorus standard(std::size_t g) { return TropTorus(RationalMatrix::identity(g)); }

  [[nodiscard]] std::size_t rank() const noexcept { return v_.rows(); }
  [[nodiscard]] const RationalMatrix& v() const noexcept { return v_; }

  /// Image of λ ∈ Λ (in basis coordinates) in N_Q.
  [[nodiscard]] RationalVector trop(const IntVector& lambda) const { return v_ * to_rational(lambda); }

  friend bool operator==(const TropTorus&, const TropTorus&) = default;

private:
  RationalMatrix v_;
};

class NATorus {
public:
  NATorus() = default;
  explicit NATorus(std::vector<MultiplicativePoint> generators) : gens_(std::move(generators)) {
    const std::size_t g = gens_.size();
    require(g > 0, ErrorKind::DimensionMismatch, "torus needs at least one generator");
    for (const auto& p : gens_) require(p.size() == g, ErrorKind::DimensionMismatch, "generator length must equal g");
    trop_ = TropTorus(valuation_matrix());
  }

  [[nodiscard]] std::size_t rank() const noexcept { return gens_.size(); }
  [[nodiscard]] const std::vector<MultiplicativePoint>& generators() const noexcept { return gens_; }
  [[nodiscard]] const TropTorus& tropicalization() const noexcept { return trop_; }
  [[nodiscard]] const RationalMatrix& v() const noexcept { return trop_.v(); }

  /// ∏_j λ_j^{a_j} as a point of (K*)^g.
  [[nodiscard]] MultiplicativePoint embed(const IntVector& a) const {
    require(a.size() == rank(), ErrorKind::DimensionMismatch, "lattice vector length");
    MultiplicativePoint out(rank());
    for (std::size_t j = 0; j < rank(); ++j)
      if (a[j] != 0) out = multiply(out, power(gens_[j], a[j]));
    return out;
  }

private:
  [[nodiscard]] RationalMatrix valuation_matrix() const {
    RationalMatrix v(rank(), rank());
    for (std::size_t j = 0; j < rank(); ++j)
      for (std::size_t i = 0; i < rank(); ++i) v(i, j) = gens_[j][i].valuation();
    return v;
  }

  std::vector<MultiplicativePoint> gens_;
  TropTorus trop_;
};

} // namespace tropabel
