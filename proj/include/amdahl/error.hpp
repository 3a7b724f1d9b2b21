#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace amdahl {

enum class ErrorKind {
  InvalidArgument,
  DegenerateK,
  Superlinear,
  InconsistentMeasurements,
  Unbounded,
  InvalidWorkload,
  InvalidTemplate,
  MalformedRow,
  MissingHeader,
  NonpositiveValue,
  DegenerateFit,
  InvalidGrid,
  AlphaOverflow,
  Infeasible,
  ZeroBudget,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::DegenerateK: return "degenerate-k";
    case ErrorKind::Superlinear: return "superlinear";
    case ErrorKind::InconsistentMeasurements: return "inconsistent-measurements";
    case ErrorKind::Unbounded: return "unbounded";
    case ErrorKind::InvalidWorkload: return "invalid-workload";
    case ErrorKind::InvalidTemplate: return "invalid-template";
    case ErrorKind::MalformedRow: return "malformed-row";
    case ErrorKind::MissingHeader: return "missing-header";
    case ErrorKind::NonpositiveValue: return "nonpositive-value";
    case ErrorKind::DegenerateFit: return "degenerate";
    case ErrorKind::InvalidGrid: return "invalid-grid";
    case ErrorKind::AlphaOverflow: return "alpha-overflow";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::ZeroBudget: return "zero-budget";
  }
  return "unknown";
}

/// Raised whenever an input lies outside what the model can represent.
/// The CLI maps every ModelError to exit code 2.
class ModelError : public std::runtime_error {
 public:
  ModelError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace amdahl
