#include "orthokit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orthokit/error.hpp"

namespace orthokit {

namespace {

std::string shape(const DenseMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(op) + ": " + shape(a) + " vs " + shape(b));
  }
}

bool finite(const Scalar& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void ToleranceConfig::validate() const {
  const bool ok = hermiticity_tol > 0 && orthonormality_tol > 0 &&
                  reconstruction_tol > 0 && rank_tol > 0 &&
                  eigen_convergence_tol > 0 && max_sweeps >= 1;
  if (!ok) {
    throw Error(ErrorKind::InvalidArgument,
                "tolerances must be positive and max_sweeps >= 1");
  }
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : DenseMatrix(rows, cols, std::vector<Scalar>(rows * cols)) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorKind::EmptyMatrix, "matrix must have at least one row and column");
  }
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                    std::to_string(entries_.size()));
  }
  require_finite();
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorKind::EmptyMatrix, "matrix must have at least one row and column");
  }
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorKind::RaggedRows, "row lengths " + std::to_string(cols_) +
                                             " and " + std::to_string(row.size()));
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  require_finite();
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
  DenseMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  m.require_finite();
  return m;
}

DenseMatrix DenseMatrix::column_vector(std::span<const double> values) {
  DenseMatrix m(values.size(), 1);
  for (std::size_t i = 0; i < values.size(); ++i) m(i, 0) = values[i];
  m.require_finite();
  return m;
}

std::vector<Scalar> DenseMatrix::column(std::size_t j) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

double DenseMatrix::max_abs() const noexcept {
  double best = 0.0;
  for (const auto& z : entries_) best = std::max(best, std::abs(z));
  return best;
}

double DenseMatrix::max_imag() const noexcept {
  double best = 0.0;
  for (const auto& z : entries_) best = std::max(best, std::abs(z.imag()));
  return best;
}

void DenseMatrix::require_finite() const {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!finite(entries_[k])) {
      throw Error(ErrorKind::NonFinite, "entry (" + std::to_string(k / cols_) + ", " +
                                            std::to_string(k % cols_) + ") is not finite");
    }
  }
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "matmul: " + shape(a) + " x " + shape(b));
  }
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  c.require_finite();
  return c;
}

DenseMatrix conjugate_transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  }
  return t;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "operator+");
  DenseMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  }
  c.require_finite();
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "operator-");
  DenseMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  }
  c.require_finite();
  return c;
}

DenseMatrix operator*(const DenseMatrix& a, Scalar s) {
  DenseMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  }
  c.require_finite();
  return c;
}

DenseMatrix scale_columns(const DenseMatrix& a, std::span<const double> factors) {
  if (factors.size() != a.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "scale_columns: " + std::to_string(factors.size()) + " factors for " +
                    shape(a));
  }
  DenseMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= factors[j];
  }
  c.require_finite();
  return c;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      best = std::max(best, std::abs(a(i, j) - b(i, j)));
    }
  }
  return best;
}

double orthonormality_residual(const DenseMatrix& a) {
  return max_abs_diff(matmul(conjugate_transpose(a), a), DenseMatrix::identity(a.cols()));
}

DenseMatrix column_projector(const DenseMatrix& q) {
  return matmul(q, conjugate_transpose(q));
}

double trace_real(const DenseMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "trace of " + shape(a));
  double t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i).real();
  return t;
}

double hermiticity_residual(const DenseMatrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "Hermitian matrix must be square, got " + shape(a));
  }
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      best = std::max(best, std::abs(a(i, j) - std::conj(a(j, i))));
    }
  }
  return best;
}

HermitianMatrix::HermitianMatrix(DenseMatrix m, double hermiticity_tol) : m_(std::move(m)) {
  const double residual = hermiticity_residual(m_);
  if (residual > hermiticity_tol * (1.0 + m_.max_abs())) {
    throw Error(ErrorKind::NotHermitian,
                "max |a_ij - conj(a_ji)| = " + std::to_string(residual));
  }
}

HermitianMatrix HermitianMatrix::symmetrized(const DenseMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "Hermitian matrix must be square, got " + shape(m));
  }
  DenseMatrix s = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const Scalar avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      s(i, j) = avg;
      s(j, i) = std::conj(avg);
    }
  }
  return HermitianMatrix(Unchecked{}, std::move(s));
}

HermitianMatrix gram_metric(const DenseMatrix& v) {
  return HermitianMatrix::symmetrized(matmul(conjugate_transpose(v), v));
}

}  // namespace orthokit
