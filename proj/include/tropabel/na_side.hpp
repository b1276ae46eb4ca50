#pragma once

// Factors of automorphy (H, r) on T/Λ, characters of Λ, and their
// tropicalizations.

#include <algorithm>
#include <vector>

#include "tropabel/trop_char.hpp"

namespace tropabel {

/// A homomorphism Λ → K*, given by its values on the basis.
struct NACharacter {
  std::vector<ValuedMonomial> values;

  [[nodiscard]] ValuedMonomial at(const IntVector& lambda) const { return eval_character(values, lambda); }

  friend bool operator==(const NACharacter&, const NACharacter&) = default;
  friend bool operator<(const NACharacter& a, const NACharacter& b) { return a.values < b.values; }
};

inline NACharacter multiply(const NACharacter& a, const NACharacter& b) {
  return {tropabel::multiply(a.values, b.values)};
}

/// λ ↦ ⟨λ, m⟩ for m ∈ M.
inline NACharacter character_of(const NATorus& t, const IntVector& m) {
  NACharacter out;
  for (std::size_t j = 0; j < t.rank(); ++j) out.values.push_back(eval_character(t.generators()[j], m));
  return out;
}

class NALineBundle {
public:
  NALineBundle() = default;
  NALineBundle(const NATorus& t, Sublattice lattice, RationalMatrix h, std::vector<ValuedMonomial> r_basis)
      : lattice_(std::move(lattice)), h_(std::move(h)), r_(std::move(r_basis)) {
    check_class_shape(h_, t.rank());
    require(lattice_.rank() == t.rank() && r_.size() == t.rank(), ErrorKind::DimensionMismatch,
            "line bundle data has the wrong length");
    require(is_Gm_symmetric_on(t, h_, lattice_), ErrorKind::Validation, "H is not G_m-symmetric on the lattice");
  }

  [[nodiscard]] const Sublattice& lattice() const noexcept { return lattice_; }
  [[nodiscard]] const RationalMatrix& h() const noexcept { return h_; }
  [[nodiscard]] const std::vector<ValuedMonomial>& r_basis() const noexcept { return r_; }

  friend bool operator==(const NALineBundle&, const NALineBundle&) = default;
  friend bool operator<(const NALineBundle& a, const NALineBundle& b) {
    if (!(a.lattice_ == b.lattice_)) return a.lattice_ < b.lattice_;
    if (!(a.h_ == b.h_)) return a.h_ < b.h_;
    return a.r_ < b.r_;
  }

private:
  Sublattice lattice_;
  RationalMatrix h_;
  std::vector<ValuedMonomial> r_;
};

/// r(Σ a_j b_j) = ∏ r_j^{a_j} ∏_{i<j} [b_i,b_j]^{a_i a_j} ∏_i [b_i,b_i]^{a_i(a_i−1)/2}.
inline ValuedMonomial extend_r(const NATorus& t, const NALineBundle& b, const IntVector& lambda) {
  auto a = b.lattice().coordinates(lambda);
  require(a.has_value(), ErrorKind::NotInLattice, "vector is not in the bundle lattice");
  const std::size_t g = t.rank();
  ValuedMonomial out;
  for (std::size_t i = 0; i < g; ++i) {
    const Integer& ai = (*a)[i];
    if (ai == 0) continue;
    IntVector bi = b.lattice().basis_vector(i);
    out *= b.r_basis()[i].pow(ai);
    out *= gm_pairing(t, b.h(), bi, bi).pow(ai * (ai - 1) / 2);
    for (std::size_t j = i + 1; j < g; ++j)
      if ((*a)[j] != 0) out *= gm_pairing(t, b.h(), bi, b.lattice().basis_vector(j)).pow(ai * (*a)[j]);
  }
  return out;
}

/// The same factor of automorphy on a sublattice.
inline NALineBundle restrict_to(const NATorus& t, const NALineBundle& b, const Sublattice& sub) {
  require(b.lattice().contains(sub), ErrorKind::NotContained, "restriction target is not a sublattice");
  std::vector<ValuedMonomial> r;
  for (std::size_t k = 0; k < t.rank(); ++k) r.push_back(extend_r(t, b, sub.basis_vector(k)));
  return {t, sub, b.h(), std::move(r)};
}

/// r^trop(λ) = ν(r(λ)) − ½[λ,λ]^R_H on the lattice basis.
inline TropLineBundle tropicalize_line_bundle(const NATorus& t, const NALineBundle& b) {
  RationalVector l(t.rank());
  for (std::size_t k = 0; k < t.rank(); ++k) {
    IntVector bk = b.lattice().basis_vector(k);
    l[k] = b.r_basis()[k].valuation() - real_pairing(t.v(), b.h(), bk, bk) / 2;
  }
  return {b.lattice(), b.h(), std::move(l)};
}

/// Twist by a character of Λ.
inline NALineBundle tensor_character(const NATorus& t, const NALineBundle& b, const NACharacter& chi) {
  std::vector<ValuedMonomial> r = b.r_basis();
  for (std::size_t k = 0; k < r.size(); ++k) r[k] *= chi.at(b.lattice().basis_vector(k));
  return {t, b.lattice(), b.h(), std::move(r)};
}

/// T_x^* with r'(λ)/r(λ) = ⟨x, H(λ)⟩. Its tropicalization is the tropical
/// translate by −trop(x).
inline NALineBundle translate(const NATorus& t, const NALineBundle& b, const MultiplicativePoint& x) {
  std::vector<ValuedMonomial> r = b.r_basis();
  for (std::size_t k = 0; k < r.size(); ++k) {
    RationalVector hk = b.h() * to_rational(b.lattice().basis_vector(k));
    r[k] *= eval_character(x, to_integer(hk));
  }
  return {t, b.lattice(), b.h(), std::move(r)};
}

/// Point of Hom(Γ_H,Q)/(M + H(Λ)) attached to a simple bundle given on an admissible lattice.
inline ModuliPoint tropicalize_simple(const NATorus& t, const RationalMatrix& h, const Sublattice& admissible,
                                      const NALineBundle& b, long long bound = kDefaultEnumerationBound) {
  auto lattices = admissible_lattices(t, h, bound);
  require(std::find(lattices.begin(), lattices.end(), admissible) != lattices.end(), ErrorKind::NotAdmissible,
          "lattice is not H-admissible");
  require(b.lattice() == admissible, ErrorKind::LatticeMismatch, "bundle is not given on the admissible lattice");
  require(b.h() == h, ErrorKind::SlopeMismatch, "bundle class differs from H");
  Sublattice gamma = small_lattice(t, h);
  TropLineBundle on_gamma = tropicalize_line_bundle(t, restrict_to(t, b, gamma));
  return moduli_point(t.tropicalization(), Sublattice::full(t.rank()), on_gamma, gamma, h);
}

/// ρ = χ_1 ⊕ … ⊕ χ_r, kept sorted.
class NASemisimpleRep {
public:
  NASemisimpleRep() = default;
  explicit NASemisimpleRep(std::vector<NACharacter> characters) : chars_(std::move(characters)) {
    require(!chars_.empty(), ErrorKind::EmptyBundle, "representation of rank 0");
    for (const auto& c : chars_)
      require(c.values.size() == chars_.front().values.size(), ErrorKind::DimensionMismatch, "characters of different lattices");
    std::sort(chars_.begin(), chars_.end());
  }

  [[nodiscard]] std::size_t r() const noexcept { return chars_.size(); }
  [[nodiscard]] std::size_t g() const { return chars_.front().values.size(); }
  [[nodiscard]] const std::vector<NACharacter>& characters() const noexcept { return chars_; }

  friend bool operator==(const NASemisimpleRep&, const NASemisimpleRep&) = default;

private:
  std::vector<NACharacter> chars_;
};

/// Diagonal representation with entries ν∘χ_i.
inline TropRepresentation trop_rep(const NASemisimpleRep& rho) {
  std::vector<TropGLElement> images;
  for (std::size_t j = 0; j < rho.g(); ++j) {
    RationalVector d;
    for (const auto& c : rho.characters()) d.push_back(c.values[j].valuation());
    images.push_back(TropGLElement::diagonal(std::move(d)));
  }
  return {rho.r(), std::move(images)};
}

/// E(ρ) = ⊕ L(0, χ_i).
inline std::vector<NALineBundle> eta_A(const NATorus& t, const NASemisimpleRep& rho) {
  const std::size_t g = t.rank();
  require(rho.g() == g, ErrorKind::DimensionMismatch, "representation and torus ranks differ");
  std::vector<NALineBundle> out;
  for (const auto& c : rho.characters()) out.emplace_back(t, Sublattice::full(g), RationalMatrix(g, g), c.values);
  std::sort(out.begin(), out.end());
  return out;
}

/// χ_2/χ_1 = ⟨·, m⟩ for some m ∈ M.
inline bool characters_equal_mod_M(const NATorus& t, const NACharacter& a, const NACharacter& b) {
  const std::size_t g = t.rank();
  require(a.values.size() == g && b.values.size() == g, ErrorKind::DimensionMismatch, "character length");
  RationalVector nu(g);
  for (std::size_t j = 0; j < g; ++j) nu[j] = (b.values[j] / a.values[j]).valuation();
  RationalVector m = inverse(t.v().transpose()) * nu;
  if (!is_integral(m)) return false;
  return multiply(a, character_of(t, to_integer(m))) == b;
}

struct SquareCheck {
  SymPoint via_analytic; // tropicalize each summand of η_A(ρ)
  SymPoint via_tropical; // η^trop of ρ^trop
  bool commutes;
};

inline SquareCheck verify_commuting_square(const NATorus& t, const NASemisimpleRep& rho) {
  const std::size_t g = t.rank();
  const Sublattice lambda = Sublattice::full(g);
  const RationalMatrix zero(g, g);
  const TropTorus& tt = t.tropicalization();

  std::vector<ModuliPoint> analytic;
  for (const auto& b : eta_A(t, rho))
    analytic.push_back(moduli_point(tt, lambda, tropicalize_line_bundle(t, b), lambda, zero));
  std::vector<ModuliPoint> tropical;
  const TropVectorBundle bundle = eta_trop(trop_rep(rho));
  for (const auto& s : bundle.summands()) tropical.push_back(moduli_point(tt, lambda, s, lambda, zero));

  SquareCheck out{sym_point(analytic), sym_point(tropical), false};
  out.commutes = out.via_analytic == out.via_tropical;
  return out;
}

} // namespace tropabel
