#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "orthokit/tolerance.hpp"

namespace orthokit {

using Scalar = std::complex<double>;

/// Row-major dense complex matrix with at least one row and one column.
/// Every entry is finite; the constructors reject NaN and Inf.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  DenseMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> values);
  static DenseMatrix column_vector(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Scalar& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  std::span<const Scalar> entries() const noexcept { return entries_; }

  /// A copy of column j as a vector.
  std::vector<Scalar> column(std::size_t j) const;

  /// Largest entry modulus.
  double max_abs() const noexcept;

  /// Largest |imag| over all entries.
  double max_imag() const noexcept;

  /// Throws NonFinite if some entry is NaN or Inf. Mutable access through
  /// operator() bypasses the constructor check, so producers that write
  /// entries directly call this before handing the matrix out.
  void require_finite() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix conjugate_transpose(const DenseMatrix& a);

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(const DenseMatrix& a, Scalar s);

/// Scales column j by factors[j].
DenseMatrix scale_columns(const DenseMatrix& a, std::span<const double> factors);

/// max |a - b| over entries; DimensionMismatch when the shapes differ.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// max |A^H A - I|.
double orthonormality_residual(const DenseMatrix& a);

/// Orthogonal projector Q Q^H onto the span of Q's columns (Q orthonormal).
DenseMatrix column_projector(const DenseMatrix& q);

double trace_real(const DenseMatrix& a);

/// Square matrix that is Hermitian up to the tolerance it was checked with.
class HermitianMatrix {
 public:
  /// Checks max |a_ij - conj(a_ji)| <= hermiticity_tol (1 + max |a|).
  /// Throws DimensionMismatch for a non-square input, NotHermitian otherwise.
  explicit HermitianMatrix(DenseMatrix m,
                           double hermiticity_tol = ToleranceConfig{}.hermiticity_tol);

  /// (m + m^H) / 2; exact Hermitian up to rounding. Throws DimensionMismatch.
  static HermitianMatrix symmetrized(const DenseMatrix& m);

  std::size_t dim() const noexcept { return m_.rows(); }
  const DenseMatrix& matrix() const noexcept { return m_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  struct Unchecked {};
  HermitianMatrix(Unchecked, DenseMatrix m) : m_(std::move(m)) {}

  DenseMatrix m_;
};

/// max |a_ij - conj(a_ji)|; DimensionMismatch when a is not square.
double hermiticity_residual(const DenseMatrix& a);

/// Metric M = V^H V of the column vectors of V.
HermitianMatrix gram_metric(const DenseMatrix& v);

}  // namespace orthokit
