#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orthokit {

enum class ErrorKind {
  DimensionMismatch,
  NonFinite,
  NotHermitian,
  NotUnitary,
  NotOrthonormal,
  NoConvergence,
  SingularMetric,
  NegativeEigenvalue,
  InvalidArgument,
  ParseError,
  RaggedRows,
  EmptyMatrix,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures that come from the numbers themselves rather than
  /// from malformed input (singular metric, eigensolver divergence, ...).
  bool is_numerical() const noexcept;

 private:
  ErrorKind kind_;
};

/// A Hermitian power of a metric that needs strictly positive eigenvalues
/// met one that is (numerically) zero or negative.
class SpectrumError : public Error {
 public:
  SpectrumError(ErrorKind kind, std::size_t eigenvalue_index, double eigenvalue,
                double condition_estimate, const std::string& message);

  std::size_t eigenvalue_index() const noexcept { return index_; }
  double eigenvalue() const noexcept { return eigenvalue_; }
  /// d[0] / d[min]; +inf when the smallest eigenvalue is not positive.
  double condition_estimate() const noexcept { return condition_; }

 private:
  std::size_t index_;
  double eigenvalue_;
  double condition_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string token,
             const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

}  // namespace orthokit
