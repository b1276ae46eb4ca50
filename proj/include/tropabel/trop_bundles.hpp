#pragma once

// Tropical line and vector bundles on N_R/Λ_base. A vector bundle is stored
// as its indecomposable summands: pairs (free cover N_R/Λ_i, line bundle
// L(H_i, l_i) on it). H is kept in Λ-coordinates (column j = H(λ_j)), so its
// Q-linear extension is the matrix itself; l holds values on the HNF basis
// of Λ_i.

#include <algorithm>
#include <vector>

#include "tropabel/finite_group.hpp"
#include "tropabel/ns_pairings.hpp"
#include "tropabel/torus.hpp"

namespace tropabel {

class TropLineBundle {
public:
  TropLineBundle() = default;
  TropLineBundle(Sublattice lattice, RationalMatrix h, RationalVector l)
      : lattice_(std::move(lattice)), h_(std::move(h)), l_(std::move(l)) {
    const std::size_t g = lattice_.rank();
    check_class_shape(h_, g);
    require(l_.size() == g, ErrorKind::DimensionMismatch, "covector length must equal g");
    require(is_integral(h_ * to_rational(lattice_.basis())), ErrorKind::Validation,
            "H must be integral on the bundle lattice");
  }

  [[nodiscard]] const Sublattice& lattice() const noexcept { return lattice_; }
  [[nodiscard]] const RationalMatrix& h() const noexcept { return h_; }
  [[nodiscard]] const RationalVector& l() const noexcept { return l_; }
  [[nodiscard]] std::size_t rank() const noexcept { return lattice_.rank(); }

  /// Value of l at a vector of the lattice.
  [[nodiscard]] Rational value(const IntVector& lambda) const {
    auto c = lattice_.coordinates(lambda);
    require(c.has_value(), ErrorKind::NotInLattice, "vector is not in the bundle lattice");
    return dot(to_rational(*c), l_);
  }

  [[nodiscard]] bool is_R_symmetric(const TropTorus& t) const { return tropabel::is_R_symmetric(h_, t.v()); }

  friend bool operator==(const TropLineBundle& a, const TropLineBundle& b) {
    return a.lattice_ == b.lattice_ && a.h_ == b.h_ && a.l_ == b.l_;
  }
  friend bool operator<(const TropLineBundle& a, const TropLineBundle& b) {
    if (!(a.lattice_ == b.lattice_)) return a.lattice_ < b.lattice_;
    if (!(a.h_ == b.h_)) return a.h_ < b.h_;
    return a.l_ < b.l_;
  }

private:
  Sublattice lattice_;
  RationalMatrix h_;
  RationalVector l_;
};

class TropVectorBundle {
public:
  TropVectorBundle() = default;
  TropVectorBundle(Sublattice base, std::vector<TropLineBundle> summands)
      : base_(std::move(base)), summands_(std::move(summands)) {
    for (const auto& s : summands_) {
      require(s.rank() == base_.rank(), ErrorKind::AmbientMismatch, "summand rank differs from base");
      require(base_.contains(s.lattice()), ErrorKind::AmbientMismatch, "summand lattice is not inside the base");
    }
    std::sort(summands_.begin(), summands_.end());
  }
  explicit TropVectorBundle(std::size_t g, std::vector<TropLineBundle> summands = {})
      : TropVectorBundle(Sublattice::full(g), std::move(summands)) {}
  static TropVectorBundle line(const TropLineBundle& l) { return TropVectorBundle(l.lattice(), {l}); }

  [[nodiscard]] const Sublattice& base() const noexcept { return base_; }
  [[nodiscard]] const std::vector<TropLineBundle>& summands() const noexcept { return summands_; }
  [[nodiscard]] std::size_t ambient_rank() const noexcept { return base_.rank(); }
  [[nodiscard]] bool empty() const noexcept { return summands_.empty(); }

  [[nodiscard]] Integer summand_rank(const TropLineBundle& s) const { return s.lattice().index() / base_.index(); }

  [[nodiscard]] Integer rank() const {
    Integer r = 0;
    for (const auto& s : summands_) r += summand_rank(s);
    return r;
  }

  friend bool operator==(const TropVectorBundle&, const TropVectorBundle&) = default;

private:
  Sublattice base_;
  std::vector<TropLineBundle> summands_;
};

/// l on the basis of a sublattice of the bundle lattice.
inline RationalVector restrict_covector(const Sublattice& from, const RationalVector& l, const Sublattice& to) {
  require(from.contains(to), ErrorKind::NotContained, "restriction target is not a sublattice");
  RationalMatrix c = inverse(to_rational(from.basis())) * to_rational(to.basis());
  return c.transpose() * l;
}

inline TropLineBundle restrict_to(const TropLineBundle& s, const Sublattice& sub) {
  return {sub, s.h(), restrict_covector(s.lattice(), s.l(), sub)};
}

/// Values of x ↦ ⟨x, m⟩ on the basis of a lattice; m ranges over the columns of ms.
inline RationalMatrix character_values(const TropTorus& t, const Sublattice& lattice, const RationalMatrix& ms) {
  return to_rational(lattice.basis()).transpose() * t.v().transpose() * ms;
}

/// T_x^{-1} L(H,l) = L(H, l − H(x)) for x ∈ N_Q.
inline TropLineBundle translate(const TropTorus& t, const TropLineBundle& s, const RationalVector& x) {
  require(x.size() == s.rank(), ErrorKind::DimensionMismatch, "translation vector length");
  RationalVector hx = s.h() * (inverse(t.v()) * x);
  RationalVector shift = character_values(t, s.lattice(), RationalMatrix::from_columns(s.rank(), {hx})).column(0);
  return {s.lattice(), s.h(), s.l() - shift};
}

inline TropLineBundle translate_by_lattice(const TropTorus& t, const TropLineBundle& s, const IntVector& lambda) {
  return translate(t, s, t.trop(lambda));
}

inline TropVectorBundle translate(const TropTorus& t, const TropVectorBundle& e, const RationalVector& x) {
  std::vector<TropLineBundle> out;
  for (const auto& s : e.summands()) out.push_back(translate(t, s, x));
  return {e.base(), std::move(out)};
}

inline TropVectorBundle direct_sum(const TropVectorBundle& a, const TropVectorBundle& b) {
  require(a.base() == b.base(), ErrorKind::AmbientMismatch, "bundles live on different tori");
  std::vector<TropLineBundle> out = a.summands();
  out.insert(out.end(), b.summands().begin(), b.summands().end());
  return {a.base(), std::move(out)};
}

/// Canonical representatives (in the fundamental box of `sub`) of base/sub.
inline std::vector<IntVector> coset_representatives(const Sublattice& base, const Sublattice& sub) {
  FiniteAbelianGroup q = quotient(base, sub);
  std::vector<IntVector> reps;
  for (const auto& c : q.elements()) reps.push_back(to_integer(reduce_mod_lattice(to_rational(q.lift(c)), sub)));
  std::sort(reps.begin(), reps.end());
  return reps;
}

/// Components of the fibre product of two summands: one per coset δ of
/// base/(Λ_1+Λ_2), each on Λ_1∩Λ_2, with the second factor translated by δ.
inline std::vector<TropLineBundle> tensor_summands(const TropTorus& t, const Sublattice& base, const TropLineBundle& a,
                                                   const TropLineBundle& b) {
  Sublattice meet = intersect(a.lattice(), b.lattice());
  RationalVector la = restrict_covector(a.lattice(), a.l(), meet);
  std::vector<TropLineBundle> out;
  for (const auto& delta : coset_representatives(base, sum(a.lattice(), b.lattice()))) {
    TropLineBundle moved = translate_by_lattice(t, b, delta);
    RationalVector lb = restrict_covector(b.lattice(), moved.l(), meet);
    out.emplace_back(meet, a.h() + b.h(), la + lb);
  }
  return out;
}

inline TropVectorBundle tensor(const TropTorus& t, const TropVectorBundle& a, const TropVectorBundle& b) {
  require(a.base() == b.base(), ErrorKind::AmbientMismatch, "bundles live on different tori");
  std::vector<TropLineBundle> out;
  for (const auto& sa : a.summands())
    for (const auto& sb : b.summands()) {
      auto parts = tensor_summands(t, a.base(), sa, sb);
      out.insert(out.end(), parts.begin(), parts.end());
    }
  return {a.base(), std::move(out)};
}

/// Pullback along N_R/sub → N_R/base.
inline TropVectorBundle pullback(const TropTorus& t, const TropVectorBundle& e, const Sublattice& sub) {
  require(sub.rank() == e.ambient_rank() && e.base().contains(sub), ErrorKind::AmbientMismatch,
          "pullback lattice is not a sublattice of the base");
  std::vector<TropLineBundle> out;
  for (const auto& s : e.summands()) {
    Sublattice meet = intersect(s.lattice(), sub);
    for (const auto& delta : coset_representatives(e.base(), sum(s.lattice(), sub)))
      out.push_back(restrict_to(translate_by_lattice(t, s, delta), meet));
  }
  return {sub, std::move(out)};
}

/// Pushforward along N_R/base → N_R/super.
inline TropVectorBundle pushforward(const TropVectorBundle& e, const Sublattice& super) {
  require(super.rank() == e.ambient_rank() && super.contains(e.base()), ErrorKind::AmbientMismatch,
          "pushforward target does not contain the base");
  return {super, e.summands()};
}

/// Rank-weighted average of the summand classes.
inline RationalMatrix slope(const TropVectorBundle& e) {
  require(!e.empty(), ErrorKind::EmptyBundle, "slope of the zero bundle");
  const std::size_t g = e.ambient_rank();
  RationalMatrix acc(g, g);
  for (const auto& s : e.summands()) acc = acc + Rational(e.summand_rank(s)) * s.h();
  return (Rational(1) / Rational(e.rank())) * acc;
}

inline bool is_homogeneous(const TropVectorBundle& e) {
  return std::all_of(e.summands().begin(), e.summands().end(), [](const TropLineBundle& s) { return s.h().is_zero(); });
}

inline bool is_semi_homogeneous(const TropVectorBundle& e) {
  return std::all_of(e.summands().begin(), e.summands().end(),
                     [&](const TropLineBundle& s) { return s.h() == e.summands().front().h(); });
}

inline bool gamma_compatible(const TropVectorBundle& e, const Sublattice& gamma) {
  return std::all_of(e.summands().begin(), e.summands().end(),
                     [&](const TropLineBundle& s) { return s.lattice().contains(gamma); });
}

/// M|_Λ' + H(base)|_Λ' as a lattice of covectors on the basis of Λ'.
inline RationalLattice translation_lattice(const TropTorus& t, const Sublattice& lattice, const RationalMatrix& h,
                                           const Sublattice& base) {
  const std::size_t g = lattice.rank();
  return RationalLattice(character_values(t, lattice, hconcat(RationalMatrix::identity(g), h * to_rational(base.basis()))));
}

/// f_*L(H,l) ≅ f_*L(H',l') for two bundles on the same cover of N_R/base.
inline bool iso_pushforward(const TropTorus& t, const Sublattice& base, const TropLineBundle& a, const TropLineBundle& b) {
  require(a.lattice() == b.lattice(), ErrorKind::LatticeMismatch, "bundles live on different covers");
  if (!(a.h() == b.h())) return false;
  return translation_lattice(t, a.lattice(), a.h(), base).contains(a.l() - b.l());
}

/// Compare on a common cover contained in both lattices.
inline bool equivalent_via(const TropTorus& t, const Sublattice& base, const TropLineBundle& a, const TropLineBundle& b,
                           const Sublattice& cover) {
  require(a.lattice().contains(cover) && b.lattice().contains(cover), ErrorKind::NotContained,
          "cover does not dominate both bundles");
  return iso_pushforward(t, base, restrict_to(a, cover), restrict_to(b, cover));
}

inline bool equivalent(const TropTorus& t, const Sublattice& base, const TropLineBundle& a, const TropLineBundle& b) {
  require(a.rank() == b.rank(), ErrorKind::AmbientMismatch, "bundles live on different tori");
  return equivalent_via(t, base, a, b, intersect(a.lattice(), b.lattice()));
}

/// Summand-wise equivalence of two vector bundles as multisets.
inline bool equivalent(const TropTorus& t, const TropVectorBundle& a, const TropVectorBundle& b) {
  require(a.base() == b.base(), ErrorKind::AmbientMismatch, "bundles live on different tori");
  if (a.summands().size() != b.summands().size()) return false;
  std::vector<bool> used(b.summands().size(), false);
  for (const auto& s : a.summands()) {
    bool matched = false;
    for (std::size_t j = 0; j < b.summands().size() && !matched; ++j)
      if (!used[j] && equivalent(t, a.base(), s, b.summands()[j])) used[j] = matched = true;
    if (!matched) return false;
  }
  return true;
}

struct ModuliPoint {
  Sublattice gamma;
  RationalMatrix h;
  RationalVector coords; // values on the basis of Γ, reduced into the box of M'
  friend bool operator==(const ModuliPoint&, const ModuliPoint&) = default;
};

/// Class of l|_Γ in Hom(Γ,Q)/(M + H(base))|_Γ.
inline ModuliPoint moduli_point(const TropTorus& t, const Sublattice& base, const TropLineBundle& s,
                                const Sublattice& gamma, const RationalMatrix& h) {
  require(s.lattice().contains(gamma), ErrorKind::NotCompatible, "Γ is not contained in the bundle lattice");
  require(s.h() == h, ErrorKind::SlopeMismatch, "bundle class differs from the requested class");
  RationalVector on_gamma = restrict_covector(s.lattice(), s.l(), gamma);
  return {gamma, h, reduce_mod_lattice(on_gamma, translation_lattice(t, gamma, h, base))};
}

struct SymPoint {
  Sublattice gamma;
  RationalMatrix h;
  std::vector<RationalVector> coords;
  friend bool operator==(const SymPoint&, const SymPoint&) = default;
};

inline SymPoint sym_point(const std::vector<ModuliPoint>& points) {
  require(!points.empty(), ErrorKind::EmptyBundle, "symmetric power of no points");
  SymPoint out{points.front().gamma, points.front().h, {}};
  for (const auto& p : points) {
    require(p.gamma == out.gamma && p.h == out.h, ErrorKind::MixedClasses, "points have different Γ or H");
    out.coords.push_back(p.coords);
  }
  std::sort(out.coords.begin(), out.coords.end());
  return out;
}

} // namespace tropabel
