#include "orthokit/lowdin.hpp"

#include <cmath>
#include <string>

#include "orthokit/error.hpp"

namespace orthokit {

namespace {

constexpr double kUnitaryTolPerDim = 1e-12;

HermitianEigen metric_eigen_of(const DenseMatrix& v, const ToleranceConfig& cfg) {
  return hermitian_eigen(gram_metric(v), cfg);
}

void require_metric_of(const DenseMatrix& v, const HermitianEigen& eigen) {
  if (eigen.dim() != v.cols() || eigen.eigenvectors.rows() != v.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "metric eigendecomposition has dimension " + std::to_string(eigen.dim()) +
                    " but V has " + std::to_string(v.cols()) + " columns");
  }
}

// V M^{-1/2}: the shared kernel of the symmetric and general forms.
DenseMatrix apply_inverse_sqrt(const DenseMatrix& v, const HermitianEigen& eigen,
                               const ToleranceConfig& cfg) {
  require_metric_of(v, eigen);
  return matmul(v, hermitian_power(eigen, -0.5, cfg).matrix());
}

}  // namespace

std::string_view to_string(OrthoMethod method) noexcept {
  switch (method) {
    case OrthoMethod::Symmetric: return "symmetric";
    case OrthoMethod::Canonical: return "canonical";
    case OrthoMethod::General: return "general";
  }
  return "unknown";
}

UnitaryMatrix::UnitaryMatrix(DenseMatrix b) : b_(std::move(b)) {
  if (!b_.is_square()) {
    throw Error(ErrorKind::DimensionMismatch, "unitary matrix must be square, got " +
                                                  std::to_string(b_.rows()) + "x" +
                                                  std::to_string(b_.cols()));
  }
  const double residual = orthonormality_residual(b_);
  if (residual > kUnitaryTolPerDim * static_cast<double>(b_.rows())) {
    throw Error(ErrorKind::NotUnitary, "max |B^H B - I| = " + std::to_string(residual));
  }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t n) {
  return UnitaryMatrix(DenseMatrix::identity(n));
}

OrthonormalBasis::OrthonormalBasis(DenseMatrix z, OrthoMethod method, const ToleranceConfig& cfg,
                                   std::optional<HermitianEigen> source_eigen)
    : z_(std::move(z)), method_(method), eigen_(std::move(source_eigen)) {
  const double residual = orthonormality_residual(z_);
  if (residual > cfg.orthonormality_tol) {
    throw Error(ErrorKind::NotOrthonormal, "max |Z^H Z - I| = " + std::to_string(residual));
  }
}

OrthonormalBasis::OrthonormalBasis(Unchecked, DenseMatrix z, OrthoMethod method,
                                   std::optional<HermitianEigen> source_eigen)
    : z_(std::move(z)), method_(method), eigen_(std::move(source_eigen)) {}

OrthonormalBasis make_basis(DenseMatrix z, OrthoMethod method,
                            std::optional<HermitianEigen> source_eigen) {
  return OrthonormalBasis(OrthonormalBasis::Unchecked{}, std::move(z), method,
                          std::move(source_eigen));
}

OrthonormalBasis orthogonalize_general(const DenseMatrix& v, const HermitianEigen& metric_eigen,
                                       const UnitaryMatrix& b, const ToleranceConfig& cfg) {
  if (b.dim() != v.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "B is " + std::to_string(b.dim()) + "x" + std::to_string(b.dim()) +
                    " but V has " + std::to_string(v.cols()) + " columns");
  }
  DenseMatrix z = matmul(apply_inverse_sqrt(v, metric_eigen, cfg), b.matrix());
  return make_basis(std::move(z), OrthoMethod::General, metric_eigen);
}

OrthonormalBasis orthogonalize_general(const DenseMatrix& v, const UnitaryMatrix& b,
                                       const ToleranceConfig& cfg) {
  if (b.dim() != v.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "B is " + std::to_string(b.dim()) + "x" + std::to_string(b.dim()) +
                    " but V has " + std::to_string(v.cols()) + " columns");
  }
  return orthogonalize_general(v, metric_eigen_of(v, cfg), b, cfg);
}

OrthonormalBasis symmetric_orthogonalize(const DenseMatrix& v, const HermitianEigen& metric_eigen,
                                         const ToleranceConfig& cfg) {
  return make_basis(apply_inverse_sqrt(v, metric_eigen, cfg), OrthoMethod::Symmetric,
                    metric_eigen);
}

OrthonormalBasis symmetric_orthogonalize(const DenseMatrix& v, const ToleranceConfig& cfg) {
  return symmetric_orthogonalize(v, metric_eigen_of(v, cfg), cfg);
}

OrthonormalBasis canonical_orthogonalize(const DenseMatrix& v, const HermitianEigen& metric_eigen,
                                         const ToleranceConfig& cfg) {
  cfg.validate();
  require_metric_of(v, metric_eigen);
  require_positive_definite(metric_eigen, cfg);
  std::vector<double> inv_sqrt(metric_eigen.dim());
  for (std::size_t j = 0; j < inv_sqrt.size(); ++j) {
    inv_sqrt[j] = 1.0 / std::sqrt(metric_eigen.eigenvalues[j]);
  }
  DenseMatrix lambda = scale_columns(matmul(v, metric_eigen.eigenvectors), inv_sqrt);
  return make_basis(std::move(lambda), OrthoMethod::Canonical, metric_eigen);
}

OrthonormalBasis canonical_orthogonalize(const DenseMatrix& v, const ToleranceConfig& cfg) {
  return canonical_orthogonalize(v, metric_eigen_of(v, cfg), cfg);
}

VerificationReport verify_orthonormal(const DenseMatrix& z, const ToleranceConfig& cfg) {
  const double residual = orthonormality_residual(z);
  return {residual, residual <= cfg.orthonormality_tol};
}

}  // namespace orthokit
