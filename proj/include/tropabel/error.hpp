#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropabel {

enum class ErrorKind {
  RankDeficient,
  DimensionMismatch,
  NotContained,
  TooLarge,
  SingularLattice,
  NotInLargeLattice,
  NotInSmallLattice,
  NotAlgebraic,
  NotAdmissible,
  NotInLattice,
  NotCommuting,
  NotInvertible,
  SizeMismatch,
  AmbientMismatch,
  LatticeMismatch,
  EmptyBundle,
  NotCompatible,
  SlopeMismatch,
  MixedClasses,
  Validation,
  InternalInconsistency,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
  case ErrorKind::RankDeficient: return "RankDeficient";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::NotContained: return "NotContained";
  case ErrorKind::TooLarge: return "TooLarge";
  case ErrorKind::SingularLattice: return "SingularLattice";
  case ErrorKind::NotInLargeLattice: return "NotInLargeLattice";
  case ErrorKind::NotInSmallLattice: return "NotInSmallLattice";
  case ErrorKind::NotAlgebraic: return "NotAlgebraic";
  case ErrorKind::NotAdmissible: return "NotAdmissible";
  case ErrorKind::NotInLattice: return "NotInLattice";
  case ErrorKind::NotCommuting: return "NotCommuting";
  case ErrorKind::NotInvertible: return "NotInvertible";
  case ErrorKind::SizeMismatch: return "SizeMismatch";
  case ErrorKind::AmbientMismatch: return "AmbientMismatch";
  case ErrorKind::LatticeMismatch: return "LatticeMismatch";
  case ErrorKind::EmptyBundle: return "EmptyBundle";
  case ErrorKind::NotCompatible: return "NotCompatible";
  case ErrorKind::SlopeMismatch: return "SlopeMismatch";
  case ErrorKind::MixedClasses: return "MixedClasses";
  case ErrorKind::Validation: return "Validation";
  case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception; the
/// kind is what callers (and the CLI exit-code mapping) switch on.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

} // namespace tropabel
