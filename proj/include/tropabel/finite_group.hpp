#pragma once

// Finite quotients a/b of sublattices and enumeration of their subgroups.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "tropabel/lattice.hpp"

namespace tropabel {

inline constexpr long long kDefaultEnumerationBound = 10000;

/// Z/d_1 x ... x Z/d_k with d_1 | ... | d_k, every d_i > 1. Elements are
/// coordinate vectors c with 0 <= c_i < d_i.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;
  FiniteAbelianGroup(IntVector invariant_factors, std::vector<IntVector> generator_lifts, RationalMatrix coordinate_map)
      : factors_(std::move(invariant_factors)), lifts_(std::move(generator_lifts)), coord_map_(std::move(coordinate_map)) {}

  [[nodiscard]] const IntVector& invariant_factors() const noexcept { return factors_; }
  [[nodiscard]] const std::vector<IntVector>& generator_lifts() const noexcept { return lifts_; }
  [[nodiscard]] std::size_t num_factors() const noexcept { return factors_.size(); }
  [[nodiscard]] std::size_t ambient_rank() const noexcept { return coord_map_.cols(); }

  [[nodiscard]] Integer order() const {
    Integer n = 1;
    for (const auto& d : factors_) n *= d;
    return n;
  }

  /// Coordinates of the coset of an ambient vector (which must lie in the numerator lattice).
  [[nodiscard]] IntVector coordinates(const IntVector& v) const {
    RationalVector c = coord_map_ * to_rational(v);
    IntVector out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      require(is_integral(c[i]), ErrorKind::NotContained, "vector is outside the numerator lattice");
      out[i] = mod_floor(numerator_of(c[i]), factors_[i]);
    }
    return out;
  }

  [[nodiscard]] IntVector lift(const IntVector& coords) const {
    require(coords.size() == factors_.size(), ErrorKind::DimensionMismatch, "coordinate length");
    IntVector v(ambient_rank(), Integer(0));
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (std::size_t r = 0; r < v.size(); ++r) v[r] += coords[i] * lifts_[i][r];
    return v;
  }

  [[nodiscard]] IntVector add(const IntVector& a, const IntVector& b) const {
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod_floor(a[i] + b[i], factors_[i]);
    return c;
  }

  [[nodiscard]] IntVector multiple(const IntVector& a, const Integer& n) const {
    IntVector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = mod_floor(a[i] * n, factors_[i]);
    return c;
  }

  [[nodiscard]] bool is_zero(const IntVector& a) const {
    return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
  }

  /// All elements in lexicographic coordinate order.
  [[nodiscard]] std::vector<IntVector> elements() const {
    std::vector<IntVector> out;
    IntVector c(factors_.size(), Integer(0));
    while (true) {
      out.push_back(c);
      std::size_t i = factors_.size();
      while (i > 0) {
        --i;
        if (++c[i] < factors_[i]) break;
        c[i] = 0;
        if (i == 0) return out;
      }
      if (factors_.empty()) return out;
    }
  }

private:
  IntVector factors_;
  std::vector<IntVector> lifts_;
  RationalMatrix coord_map_; // k x g; rows are the coordinate functionals
};

/// a/b for b ⊆ a, decomposed by the Smith form of the inclusion.
inline FiniteAbelianGroup quotient(const Sublattice& a, const Sublattice& b) {
  require(a.rank() == b.rank(), ErrorKind::DimensionMismatch, "lattice ranks differ");
  require(a.contains(b), ErrorKind::NotContained, "denominator lattice is not contained in numerator");
  const std::size_t g = a.rank();
  RationalMatrix a_inv = inverse(to_rational(a.basis()));
  IntMatrix c = to_integer(a_inv * to_rational(b.basis()));
  auto s = snf(c);
  RationalMatrix u = to_rational(s.u);
  RationalMatrix u_inv = inverse(u);
  RationalMatrix coord_all = u * a_inv;

  IntVector factors;
  std::vector<IntVector> lifts;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < g; ++i) {
    if (s.d(i, i) == 1) continue;
    factors.push_back(s.d(i, i));
    lifts.push_back(to_integer(to_rational(a.basis()) * u_inv.column(i)));
    kept.push_back(i);
  }
  RationalMatrix coord_map(kept.size(), g);
  for (std::size_t r = 0; r < kept.size(); ++r)
    for (std::size_t j = 0; j < g; ++j) coord_map(r, j) = coord_all(kept[r], j);
  return {std::move(factors), std::move(lifts), std::move(coord_map)};
}

/// A subgroup of a FiniteAbelianGroup, given by generating cosets (in
/// group coordinates) and its order.
struct Subgroup {
  std::vector<IntVector> generators;
  Integer order;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

namespace detail {

inline IntVector divisors_of(const Integer& n) {
  IntVector out;
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

/// Every subgroup exactly once. Subgroups of Z^k/diag(d) correspond to
/// lattices diag(d)Z^k ⊆ L ⊆ Z^k, enumerated here by their (unique) HNF row
/// by row: diagonal entries run over divisors of d_i, and containment of
/// each d_j e_j is tracked by forward substitution so dead prefixes are cut
/// at the row where they fail.
inline std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& q,
                                                 long long bound = kDefaultEnumerationBound) {
  require(q.order() <= Integer(bound), ErrorKind::TooLarge,
          "group of order " + q.order().str() + " exceeds enumeration bound " + std::to_string(bound));
  const auto& d = q.invariant_factors();
  const std::size_t k = d.size();
  const long long work_limit = 1000 * bound;
  long long work = 0;

  std::vector<Subgroup> out;
  IntMatrix h(k, k);
  // sub[j] holds the forward-substitution coefficients of d_j e_j
  std::vector<IntVector> sub(k, IntVector(k, Integer(0)));

  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == k) {
      Subgroup sg;
      Integer diag = 1;
      for (std::size_t c = 0; c < k; ++c) {
        diag *= h(c, c);
        IntVector gen(k);
        for (std::size_t r = 0; r < k; ++r) gen[r] = mod_floor(h(r, c), d[r]);
        if (!q.is_zero(gen)) sg.generators.push_back(std::move(gen));
      }
      sg.order = q.order() / diag;
      out.push_back(std::move(sg));
      return;
    }
    for (const auto& hii : detail::divisors_of(d[i])) {
      h(i, i) = hii;
      sub[i][i] = d[i] / hii;
      // odometer over the i off-diagonal entries of row i, each in [0, hii)
      IntVector row(i, Integer(0));
      while (true) {
        require(++work <= work_limit, ErrorKind::TooLarge, "subgroup enumeration exceeded its work bound");
        for (std::size_t j = 0; j < i; ++j) h(i, j) = row[j];
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          Integer s = 0;
          for (std::size_t l = j; l < i; ++l) s += h(i, l) * sub[j][l];
          if (s % hii != 0) ok = false;
          else sub[j][i] = -s / hii;
        }
        if (ok) recurse(i + 1);
        std::size_t p = i;
        while (p > 0) {
          --p;
          if (++row[p] < hii) break;
          row[p] = 0;
          if (p == 0) {
            p = i + 1; // sentinel: exhausted
            break;
          }
        }
        if (i == 0 || p == i + 1) break;
      }
    }
  };
  recurse(0);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.generators < b.generators;
  });
  return out;
}

/// Preimage in the ambient lattice of a subgroup of a/b: b + span(lifts).
inline Sublattice preimage(const FiniteAbelianGroup& q, const Sublattice& denominator, const Subgroup& s) {
  IntMatrix gens = denominator.basis();
  for (const auto& c : s.generators) gens = hconcat(gens, IntMatrix::from_columns(q.ambient_rank(), {q.lift(c)}));
  return Sublattice(gens);
}

} // namespace tropabel
