#pragma once
#include <stdexcept>
#include <string>

namespace sfwm {

// Exit-code groups used by the CLI:
//   2 = configuration / validation problems
//   3 = numerical failures
//   4 = no-emission (g2 undefined for a non-emitting medium)
enum class ErrKind {
  DegenerateSteadyState,
  StepSizeTooLarge,
  ZeroDrive,
  NoConvergence,
  DenominatorVanishes,
  SingularFirstOrderSystem,
  SingularBoundary,
  GridTooNarrow,
  ZeroRateNormalization,
  ParseError,
  ValidationError,
  UnknownPreset,
};

class SimError : public std::runtime_error {
 public:
  SimError(ErrKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrKind kind() const { return kind_; }

  const char* kind_name() const {
    switch (kind_) {
      case ErrKind::DegenerateSteadyState: return "DegenerateSteadyState";
      case ErrKind::StepSizeTooLarge: return "StepSizeTooLarge";
      case ErrKind::ZeroDrive: return "ZeroDrive";
      case ErrKind::NoConvergence: return "NoConvergence";
      case ErrKind::DenominatorVanishes: return "DenominatorVanishes";
      case ErrKind::SingularFirstOrderSystem: return "SingularFirstOrderSystem";
      case ErrKind::SingularBoundary: return "SingularBoundary";
      case ErrKind::GridTooNarrow: return "GridTooNarrow";
      case ErrKind::ZeroRateNormalization: return "ZeroRateNormalization";
      case ErrKind::ParseError: return "ParseError";
      case ErrKind::ValidationError: return "ValidationError";
      case ErrKind::UnknownPreset: return "UnknownPreset";
    }
    return "Unknown";
  }

  int exit_code() const {
    switch (kind_) {
      case ErrKind::ParseError:
      case ErrKind::ValidationError:
      case ErrKind::UnknownPreset:
        return 2;
      case ErrKind::ZeroRateNormalization:
        return 4;
      default:
        return 3;
    }
  }

 private:
  ErrKind kind_;
};

}  // namespace sfwm
