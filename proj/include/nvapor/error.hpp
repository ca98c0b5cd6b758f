#pragma once

#include <stdexcept>
#include <string>

namespace nvapor {

enum class ErrorCode {
  InvalidRates,
  InvalidArgument,
  DegenerateParameters,
  Pole,
  DegenerateDetuning,
  ConfluentPoles,
  QuadratureFailure,
  DivergentVelocity,
  Config,
  Io,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRates: return "invalid-rates";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::DegenerateParameters: return "degenerate-parameters";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::DegenerateDetuning: return "degenerate-detuning";
    case ErrorCode::ConfluentPoles: return "confluent-poles";
    case ErrorCode::QuadratureFailure: return "quadrature-failure";
    case ErrorCode::DivergentVelocity: return "divergent-velocity";
    case ErrorCode::Config: return "config";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nvapor
