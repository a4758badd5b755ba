#include "orthokit/error.hpp"

namespace orthokit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotOrthonormal: return "NotOrthonormal";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::SingularMetric: return "SingularMetric";
    case ErrorKind::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::RaggedRows: return "RaggedRows";
    case ErrorKind::EmptyMatrix: return "EmptyMatrix";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

bool Error::is_numerical() const noexcept {
  switch (kind_) {
    case ErrorKind::NoConvergence:
    case ErrorKind::SingularMetric:
    case ErrorKind::NegativeEigenvalue:
      return true;
    default:
      return false;
  }
}

SpectrumError::SpectrumError(ErrorKind kind, std::size_t eigenvalue_index,
                             double eigenvalue, double condition_estimate,
                             const std::string& message)
    : Error(kind, message),
      index_(eigenvalue_index),
      eigenvalue_(eigenvalue),
      condition_(condition_estimate) {}

ParseError::ParseError(std::size_t line, std::size_t column, std::string token,
                       const std::string& message)
    : Error(ErrorKind::ParseError,
            "line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + message + " ('" + token + "')"),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

}  // namespace orthokit
