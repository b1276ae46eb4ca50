#pragma once

// Néron–Severi classes H: Λ → M_Q (column j = H(λ_j)), their pairings, and
// the lattices Γ_H ⊆ Λ' ⊆ Λ_H ⊆ Λ and M ⊆ M_H, N_H ⊆ N they determine.

#include <algorithm>
#include <vector>

#include "tropabel/finite_group.hpp"
#include "tropabel/torus.hpp"

namespace tropabel {

inline void check_class_shape(const RationalMatrix& h, std::size_t g) {
  require(h.rows() == g && h.cols() == g, ErrorKind::DimensionMismatch, "NS class must be g x g");
}

/// V^T H symmetric, i.e. [λ,λ']^R = [λ',λ]^R.
inline bool is_R_symmetric(const RationalMatrix& h, const RationalMatrix& v) {
  check_class_shape(h, v.rows());
  return is_symmetric(v.transpose() * h);
}

inline Rational real_pairing(const RationalMatrix& v, const RationalMatrix& h, const IntVector& a, const IntVector& b) {
  return dot(to_rational(a), (v.transpose() * h) * to_rational(b));
}

/// {λ : H(λ) ∈ Z^g}. With U·(D·H)·W = diag(s), the condition reads
/// s_i·(W^{-1}λ)_i ≡ 0 mod D.
inline Sublattice large_lattice(const RationalMatrix& h) {
  require(h.is_square(), ErrorKind::DimensionMismatch, "NS class must be square");
  const std::size_t g = h.rows();
  Integer den = common_denominator(h);
  auto s = snf(to_integer(Rational(den) * h));
  IntMatrix scaled = s.w;
  for (std::size_t i = 0; i < g; ++i) {
    Integer c = s.d(i, i) == 0 ? Integer(1) : Integer(den / gcd_int(den, s.d(i, i)));
    for (std::size_t r = 0; r < g; ++r) scaled(r, i) *= c;
  }
  return Sublattice(scaled);
}

/// N_H = {n : H^T n ∈ Z^g}.
inline Sublattice n_large(const RationalMatrix& h) { return large_lattice(h.transpose()); }

/// M_H = M + H(Λ).
inline RationalLattice m_large(const RationalMatrix& h) {
  return RationalLattice(hconcat(RationalMatrix::identity(h.rows()), h));
}

/// [M_H : M] = 1 / covolume(M_H).
inline Integer m_large_index(const RationalMatrix& h) { return to_integer(Rational(1) / m_large(h).covolume()); }

/// [λ,λ']_H = ⟨λ, H(λ')⟩, defined for λ' ∈ Λ_H.
inline ValuedMonomial gm_pairing(const NATorus& t, const RationalMatrix& h, const IntVector& a, const IntVector& b) {
  check_class_shape(h, t.rank());
  RationalVector hb = h * to_rational(b);
  require(is_integral(hb), ErrorKind::NotInLargeLattice, "H(λ') is not integral");
  return eval_character(t.embed(a), to_integer(hb));
}

/// B(γ,λ) = [γ,λ]_H / [λ,γ]_H on Λ_H.
inline ValuedMonomial b_pairing(const NATorus& t, const RationalMatrix& h, const IntVector& a, const IntVector& b) {
  return gm_pairing(t, h, a, b) / gm_pairing(t, h, b, a);
}

inline bool is_Gm_symmetric_on(const NATorus& t, const RationalMatrix& h, const Sublattice& sub) {
  const std::size_t g = t.rank();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      if (gm_pairing(t, h, sub.basis_vector(i), sub.basis_vector(j)) !=
          gm_pairing(t, h, sub.basis_vector(j), sub.basis_vector(i)))
        return false;
  for (std::size_t i = 0; i < g; ++i) (void)gm_pairing(t, h, sub.basis_vector(i), sub.basis_vector(i));
  return true;
}

inline bool is_Gm_symmetric(const NATorus& t, const RationalMatrix& h) {
  return is_Gm_symmetric_on(t, h, Sublattice::full(t.rank()));
}

/// Phases θ_ik of B(b_i, b_k) on the basis of Λ_H. B must take root-of-unity
/// values; otherwise H does not come from an algebraic class on this torus.
inline RationalMatrix b_phases(const NATorus& t, const RationalMatrix& h, const Sublattice& large) {
  const std::size_t g = t.rank();
  RationalMatrix theta(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t k = 0; k < g; ++k) {
      ValuedMonomial b = b_pairing(t, h, large.basis_vector(i), large.basis_vector(k));
      require(b.torsion_order().has_value(), ErrorKind::NotAlgebraic,
              "pairing B is not torsion: H is not an algebraic class for this torus");
      theta(i, k) = b.phase();
    }
  return theta;
}

/// Γ_H = {γ ∈ Λ_H : B(γ,λ) = 1 for all λ ∈ Λ_H}.
inline Sublattice small_lattice(const NATorus& t, const RationalMatrix& h) {
  Sublattice large = large_lattice(h);
  RationalMatrix theta = b_phases(t, h, large);
  Sublattice coeffs = large_lattice(theta.transpose());
  return Sublattice(large.basis() * coeffs.basis());
}

/// The value of the extension of [−,γ] to M_H at m = m0 + H(λ').
inline ValuedMonomial extended_pairing(const NATorus& t, const RationalMatrix& h, const IntVector& gamma,
                                       const IntVector& m0, const IntVector& lambda_prime) {
  require(small_lattice(t, h).contains(gamma), ErrorKind::NotInSmallLattice, "γ is not in Γ_H");
  return eval_character(t.embed(gamma), m0) * gm_pairing(t, h, lambda_prime, gamma);
}

namespace detail {

inline bool isotropic(const NATorus& t, const RationalMatrix& h, const std::vector<IntVector>& lifts) {
  for (std::size_t i = 0; i < lifts.size(); ++i)
    for (std::size_t j = i + 1; j < lifts.size(); ++j)
      if (!b_pairing(t, h, lifts[i], lifts[j]).is_one()) return false;
  return true;
}

} // namespace detail

/// Sublattices Γ_H ⊆ Λ' ⊆ Λ_H whose image in Λ_H/Γ_H is maximal B-isotropic,
/// sorted by HNF basis.
inline std::vector<Sublattice> admissible_lattices(const NATorus& t, const RationalMatrix& h,
                                                   long long bound = kDefaultEnumerationBound) {
  Sublattice large = large_lattice(h);
  Sublattice small = small_lattice(t, h);
  FiniteAbelianGroup q = quotient(large, small);

  std::vector<Sublattice> isotropic;
  for (const auto& s : enumerate_subgroups(q, bound)) {
    std::vector<IntVector> lifts;
    for (const auto& c : s.generators) lifts.push_back(q.lift(c));
    if (detail::isotropic(t, h, lifts)) isotropic.push_back(preimage(q, small, s));
  }
  std::vector<Sublattice> maximal;
  for (const auto& a : isotropic) {
    bool dominated = std::any_of(isotropic.begin(), isotropic.end(),
                                 [&](const Sublattice& b) { return !(a == b) && b.contains(a); });
    if (!dominated) maximal.push_back(a);
  }
  require(!maximal.empty(), ErrorKind::InternalInconsistency, "no maximal isotropic subgroup found");
  const Integer index = maximal.front().index();
  for (const auto& m : maximal)
    require(m.index() == index, ErrorKind::InternalInconsistency, "maximal isotropic lattices of unequal index");
  // [Λ_H:Λ']² = [Λ_H:Γ_H]
  require(index * index == small.index() * large.index(),
          ErrorKind::InternalInconsistency, "admissible index is not the square root of |Λ_H/Γ_H|");
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

/// n(H) = [Λ : Λ'] for any admissible Λ'.
inline Integer rank_of_class(const NATorus& t, const RationalMatrix& h, long long bound = kDefaultEnumerationBound) {
  return admissible_lattices(t, h, bound).front().index();
}

} // namespace tropabel
