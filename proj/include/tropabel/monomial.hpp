#pragma once

// Monomials q·e^{2πiθ}·t^v in the non-Archimedean field model.

#include <optional>
#include <vector>

#include "tropabel/matrix.hpp"

namespace tropabel {

class ValuedMonomial {
public:
  ValuedMonomial() : mag_(1), phase_(0), texp_(0) {}
  ValuedMonomial(Rational magnitude, Rational phase, Rational t_exponent)
      : mag_(std::move(magnitude)), phase_(frac_of(phase)), texp_(std::move(t_exponent)) {
    require(mag_ > 0, ErrorKind::Validation, "monomial magnitude must be positive");
  }

  static ValuedMonomial one() { return {}; }
  static ValuedMonomial t_power(const Rational& v) { return {Rational(1), Rational(0), v}; }
  static ValuedMonomial root_of_unity(const Rational& phase) { return {Rational(1), phase, Rational(0)}; }
  static ValuedMonomial minus_one() { return root_of_unity(Rational(1) / 2); }

  [[nodiscard]] const Rational& magnitude() const noexcept { return mag_; }
  [[nodiscard]] const Rational& phase() const noexcept { return phase_; }
  [[nodiscard]] const Rational& t_exponent() const noexcept { return texp_; }
  [[nodiscard]] const Rational& valuation() const noexcept { return texp_; }

  [[nodiscard]] bool is_one() const { return mag_ == 1 && phase_ == 0 && texp_ == 0; }

  [[nodiscard]] ValuedMonomial inverse() const { return {Rational(1) / mag_, -phase_, -texp_}; }

  [[nodiscard]] ValuedMonomial pow(const Integer& n) const {
    Rational m = 1;
    Integer e = abs_int(n);
    Rational base = mag_;
    while (e > 0) {
      if ((e & 1) != 0) m *= base;
      base *= base;
      e >>= 1;
    }
    if (n < 0) m = Rational(1) / m;
    return {m, phase_ * Rational(n), texp_ * Rational(n)};
  }

  /// Multiplicative order when the element is a root of unity.
  [[nodiscard]] std::optional<Integer> torsion_order() const {
    if (mag_ != 1 || texp_ != 0) return std::nullopt;
    return denominator_of(phase_);
  }

  friend ValuedMonomial operator*(const ValuedMonomial& a, const ValuedMonomial& b) {
    return {a.mag_ * b.mag_, a.phase_ + b.phase_, a.texp_ + b.texp_};
  }
  friend ValuedMonomial operator/(const ValuedMonomial& a, const ValuedMonomial& b) { return a * b.inverse(); }
  ValuedMonomial& operator*=(const ValuedMonomial& b) { return *this = *this * b; }

  friend bool operator==(const ValuedMonomial& a, const ValuedMonomial& b) {
    return a.mag_ == b.mag_ && a.phase_ == b.phase_ && a.texp_ == b.texp_;
  }
  friend bool operator<(const ValuedMonomial& a, const ValuedMonomial& b) {
    if (a.texp_ != b.texp_) return a.texp_ < b.texp_;
    if (a.mag_ != b.mag_) return a.mag_ < b.mag_;
    return a.phase_ < b.phase_;
  }

private:
  Rational mag_;
  Rational phase_;
  Rational texp_;
};

inline Rational valuation(const ValuedMonomial& x) { return x.valuation(); }
inline std::optional<Integer> is_torsion(const ValuedMonomial& x) { return x.torsion_order(); }

using MultiplicativePoint = std::vector<ValuedMonomial>;

inline MultiplicativePoint multiply(const MultiplicativePoint& a, const MultiplicativePoint& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "point lengths differ");
  MultiplicativePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

inline MultiplicativePoint power(const MultiplicativePoint& a, const Integer& n) {
  MultiplicativePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i].pow(n);
  return out;
}

/// χ^m(p) = ∏ p_i^{m_i}.
inline ValuedMonomial eval_character(const MultiplicativePoint& p, const IntVector& m) {
  require(p.size() == m.size(), ErrorKind::DimensionMismatch, "point and character lengths differ");
  ValuedMonomial out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (m[i] != 0) out *= p[i].pow(m[i]);
  return out;
}

} // namespace tropabel
