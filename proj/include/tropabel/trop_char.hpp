#pragma once

// Representations Λ → GL_r(T) = S_r ⋉ Q^r and their correspondence with
// homogeneous tropical vector bundles.

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "tropabel/trop_bundles.hpp"

namespace tropabel {

/// Min-plus matrix entry; nullopt is +∞.
using TropEntry = std::optional<Rational>;
using TropMatrix = std::vector<std::vector<TropEntry>>;

/// (σ, d) acting by (Ax)_i = d_i + x_{σ^{-1}(i)}. perm[i] = σ(i), 0-based.
class TropGLElement {
public:
  TropGLElement() = default;
  TropGLElement(std::vector<std::size_t> perm, RationalVector d) : perm_(std::move(perm)), d_(std::move(d)) {
    require(perm_.size() == d_.size(), ErrorKind::SizeMismatch, "permutation and translation sizes differ");
    std::vector<bool> seen(perm_.size(), false);
    for (auto p : perm_) {
      require(p < perm_.size() && !seen[p], ErrorKind::Validation, "not a permutation");
      seen[p] = true;
    }
  }

  static TropGLElement identity(std::size_t r) {
    std::vector<std::size_t> p(r);
    for (std::size_t i = 0; i < r; ++i) p[i] = i;
    return {std::move(p), RationalVector(r, Rational(0))};
  }

  static TropGLElement diagonal(RationalVector d) {
    auto e = identity(d.size());
    e.d_ = std::move(d);
    return e;
  }

  [[nodiscard]] std::size_t size() const noexcept { return perm_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& perm() const noexcept { return perm_; }
  [[nodiscard]] const RationalVector& d() const noexcept { return d_; }
  [[nodiscard]] std::size_t apply(std::size_t i) const { return perm_[i]; }

  [[nodiscard]] std::vector<std::size_t> inverse_perm() const {
    std::vector<std::size_t> inv(size());
    for (std::size_t i = 0; i < size(); ++i) inv[perm_[i]] = i;
    return inv;
  }

  [[nodiscard]] RationalVector act(const RationalVector& x) const {
    require(x.size() == size(), ErrorKind::SizeMismatch, "vector size");
    auto inv = inverse_perm();
    RationalVector y(size());
    for (std::size_t i = 0; i < size(); ++i) y[i] = d_[i] + x[inv[i]];
    return y;
  }

  [[nodiscard]] TropMatrix to_matrix() const {
    TropMatrix m(size(), std::vector<TropEntry>(size()));
    auto inv = inverse_perm();
    for (std::size_t i = 0; i < size(); ++i) m[i][inv[i]] = d_[i];
    return m;
  }

  static TropGLElement from_matrix(const TropMatrix& m) {
    const std::size_t r = m.size();
    std::vector<std::size_t> perm(r, r);
    RationalVector d(r);
    for (std::size_t i = 0; i < r; ++i) {
      require(m[i].size() == r, ErrorKind::SizeMismatch, "matrix must be square");
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < r; ++j)
        if (m[i][j]) {
          require(!col, ErrorKind::NotInvertible, "row has more than one finite entry");
          col = j;
        }
      require(col.has_value(), ErrorKind::NotInvertible, "row has no finite entry");
      require(perm[*col] == r, ErrorKind::NotInvertible, "column has more than one finite entry");
      perm[*col] = i;
      d[i] = *m[i][*col];
    }
    return {std::move(perm), std::move(d)};
  }

  friend TropGLElement compose(const TropGLElement& a, const TropGLElement& b) {
    require(a.size() == b.size(), ErrorKind::SizeMismatch, "elements of different GL_r");
    auto inv = a.inverse_perm();
    std::vector<std::size_t> p(a.size());
    RationalVector d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      p[i] = a.perm_[b.perm_[i]];
      d[i] = a.d_[i] + b.d_[inv[i]];
    }
    return {std::move(p), std::move(d)};
  }

  [[nodiscard]] TropGLElement inverse() const {
    auto inv = inverse_perm();
    RationalVector d(size());
    for (std::size_t i = 0; i < size(); ++i) d[i] = -d_[perm_[i]];
    return {std::move(inv), std::move(d)};
  }

  [[nodiscard]] TropGLElement pow(Integer n) const {
    TropGLElement base = n < 0 ? inverse() : *this;
    n = abs_int(n);
    TropGLElement out = identity(size());
    while (n > 0) {
      if ((n & 1) != 0) out = compose(out, base);
      base = compose(base, base);
      n >>= 1;
    }
    return out;
  }

  friend bool operator==(const TropGLElement&, const TropGLElement&) = default;

private:
  std::vector<std::size_t> perm_;
  RationalVector d_;
};

/// Images of the basis λ_1..λ_g.
class TropRepresentation {
public:
  TropRepresentation() = default;
  TropRepresentation(std::size_t r, std::vector<TropGLElement> images) : r_(r), images_(std::move(images)) {
    require(!images_.empty(), ErrorKind::DimensionMismatch, "representation needs g >= 1 images");
    for (const auto& a : images_) require(a.size() == r_, ErrorKind::SizeMismatch, "image of wrong size");
  }

  [[nodiscard]] std::size_t r() const noexcept { return r_; }
  [[nodiscard]] std::size_t g() const noexcept { return images_.size(); }
  [[nodiscard]] const std::vector<TropGLElement>& images() const noexcept { return images_; }

  /// ρ(λ) for λ in basis coordinates.
  [[nodiscard]] TropGLElement at(const IntVector& lambda) const {
    require(lambda.size() == g(), ErrorKind::DimensionMismatch, "lattice vector length");
    TropGLElement out = TropGLElement::identity(r_);
    for (std::size_t j = 0; j < g(); ++j)
      if (lambda[j] != 0) out = compose(out, images_[j].pow(lambda[j]));
    return out;
  }

  friend bool operator==(const TropRepresentation&, const TropRepresentation&) = default;

private:
  std::size_t r_ = 0;
  std::vector<TropGLElement> images_;
};

inline bool check_commuting(const TropRepresentation& rho) {
  const auto& im = rho.images();
  for (std::size_t i = 0; i < im.size(); ++i)
    for (std::size_t j = i + 1; j < im.size(); ++j)
      if (!(compose(im[i], im[j]) == compose(im[j], im[i]))) return false;
  return true;
}

/// c·ρ·c^{-1}.
inline TropRepresentation conjugate(const TropRepresentation& rho, const TropGLElement& c) {
  std::vector<TropGLElement> out;
  for (const auto& a : rho.images()) out.push_back(compose(compose(c, a), c.inverse()));
  return {rho.r(), std::move(out)};
}

struct RepComponent {
  std::vector<std::size_t> orbit; // sorted, 0-based
  Sublattice lattice;             // stabiliser of the orbit's points
  RationalVector l;               // values of the translation at the base point, on the lattice basis
};

inline std::vector<RepComponent> decompose_rep(const TropRepresentation& rho) {
  require(check_commuting(rho), ErrorKind::NotCommuting, "representation images do not commute");
  const std::size_t r = rho.r(), g = rho.g();
  std::vector<bool> done(r, false);
  std::vector<RepComponent> out;
  for (std::size_t p = 0; p < r; ++p) {
    if (done[p]) continue;
    // breadth-first from the base point; word[q] is a λ with σ_λ(p) = q
    std::vector<std::optional<IntVector>> word(r);
    word[p] = IntVector(g, Integer(0));
    std::deque<std::size_t> queue{p};
    std::vector<std::size_t> orbit;
    while (!queue.empty()) {
      std::size_t q = queue.front();
      queue.pop_front();
      orbit.push_back(q);
      for (std::size_t j = 0; j < g; ++j) {
        std::size_t next = rho.images()[j].apply(q);
        if (word[next]) continue;
        IntVector w = *word[q];
        w[j] += 1;
        word[next] = std::move(w);
        queue.push_back(next);
      }
    }
    std::vector<IntVector> schreier;
    for (auto q : orbit) {
      done[q] = true;
      for (std::size_t j = 0; j < g; ++j) {
        IntVector s = *word[q];
        s[j] += 1;
        schreier.push_back(s - *word[rho.images()[j].apply(q)]);
      }
    }
    Sublattice lattice = Sublattice::from_columns(g, schreier);
    RationalVector l(g);
    for (std::size_t k = 0; k < g; ++k) {
      TropGLElement a = rho.at(lattice.basis_vector(k));
      require(a.apply(p) == p, ErrorKind::InternalInconsistency, "stabiliser element moves the base point");
      l[k] = a.d()[p];
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back({std::move(orbit), std::move(lattice), std::move(l)});
  }
  return out;
}

using CanonicalForm = std::vector<std::pair<Sublattice, RationalVector>>;

inline CanonicalForm canonical_form(const TropRepresentation& rho) {
  CanonicalForm out;
  for (auto& c : decompose_rep(rho)) out.emplace_back(std::move(c.lattice), std::move(c.l));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Sublattice> stratum(const TropRepresentation& rho) {
  std::vector<Sublattice> out;
  for (auto& c : decompose_rep(rho)) out.push_back(std::move(c.lattice));
  std::sort(out.begin(), out.end());
  return out;
}

/// ⊕_O pushforward of L(0, l_O) from N_R/Λ_O.
inline TropVectorBundle eta_trop(const TropRepresentation& rho) {
  const std::size_t g = rho.g();
  std::vector<TropLineBundle> summands;
  for (auto& c : decompose_rep(rho)) summands.emplace_back(std::move(c.lattice), RationalMatrix(g, g), std::move(c.l));
  return TropVectorBundle(g, std::move(summands));
}

/// Block sum of representations of the same lattice.
inline TropRepresentation direct_sum(const TropRepresentation& a, const TropRepresentation& b) {
  require(a.g() == b.g(), ErrorKind::DimensionMismatch, "representations of different lattices");
  std::vector<TropGLElement> out;
  for (std::size_t j = 0; j < a.g(); ++j) {
    std::vector<std::size_t> p = a.images()[j].perm();
    RationalVector d = a.images()[j].d();
    for (std::size_t i = 0; i < b.r(); ++i) {
      p.push_back(a.r() + b.images()[j].perm()[i]);
      d.push_back(b.images()[j].d()[i]);
    }
    out.emplace_back(std::move(p), std::move(d));
  }
  return {a.r() + b.r(), std::move(out)};
}

/// The transitive representation of rank [Λ:Λ'] induced from the character
/// l of Λ'. Points are the canonical coset representatives t_i of Λ/Λ'.
inline TropRepresentation induced_rep(const Sublattice& lattice, const RationalVector& l) {
  const std::size_t g = lattice.rank();
  require(l.size() == g, ErrorKind::DimensionMismatch, "covector length");
  std::vector<IntVector> reps = coset_representatives(Sublattice::full(g), lattice);
  const std::size_t r = reps.size();
  auto index_of = [&](const IntVector& v) {
    IntVector c = to_integer(reduce_mod_lattice(to_rational(v), lattice));
    return static_cast<std::size_t>(std::lower_bound(reps.begin(), reps.end(), c) - reps.begin());
  };
  TropLineBundle character(lattice, RationalMatrix(g, g), l);
  std::vector<TropGLElement> images;
  for (std::size_t j = 0; j < g; ++j) {
    std::vector<std::size_t> perm(r);
    RationalVector d(r);
    for (std::size_t i = 0; i < r; ++i) {
      IntVector moved = reps[i];
      moved[j] += 1;
      std::size_t target = index_of(moved);
      perm[i] = target;
      d[target] = character.value(moved - reps[target]);
    }
    images.emplace_back(std::move(perm), std::move(d));
  }
  return {r, std::move(images)};
}

/// A representation whose eta_trop is the given homogeneous bundle on N_R/Λ.
inline TropRepresentation rep_from_bundle(const TropVectorBundle& e) {
  require(e.base() == Sublattice::full(e.ambient_rank()), ErrorKind::Validation, "bundle must live on N_R/Λ");
  require(is_homogeneous(e), ErrorKind::Validation, "bundle is not homogeneous");
  require(!e.empty(), ErrorKind::EmptyBundle, "zero bundle has no representation");
  std::optional<TropRepresentation> out;
  for (const auto& s : e.summands()) {
    TropRepresentation piece = induced_rep(s.lattice(), s.l());
    out = out ? direct_sum(*out, piece) : piece;
  }
  return *out;
}

} // namespace tropabel
