#include "orthokit/decompositions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orthokit/error.hpp"

namespace orthokit {

namespace {

std::string shape(const DenseMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_cols_match(const DenseMatrix& z, const UnitaryMatrix& u, const char* op) {
  if (z.cols() != u.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(op) + ": basis " + shape(z) + " vs U " + shape(u.matrix()));
  }
}

}  // namespace

PolarFactors polar_decompose(const DenseMatrix& v, const HermitianEigen& metric_eigen,
                             const ToleranceConfig& cfg) {
  OrthonormalBasis phi = symmetric_orthogonalize(v, metric_eigen, cfg);
  HermitianMatrix h = hermitian_power(metric_eigen, 0.5, cfg);
  return PolarFactors{std::move(phi), std::move(h)};
}

PolarFactors polar_decompose(const DenseMatrix& v, const ToleranceConfig& cfg) {
  return polar_decompose(v, hermitian_eigen(gram_metric(v), cfg), cfg);
}

SvdFactors reduced_svd(const DenseMatrix& v, const HermitianEigen& metric_eigen,
                       const ToleranceConfig& cfg) {
  OrthonormalBasis lambda = canonical_orthogonalize(v, metric_eigen, cfg);
  std::vector<double> sigma(metric_eigen.dim());
  // canonical_orthogonalize already rejected d[j] <= rank_tol * d[0].
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    sigma[j] = std::sqrt(std::max(metric_eigen.eigenvalues[j], 0.0));
  }
  return SvdFactors{lambda.matrix(), std::move(sigma), UnitaryMatrix(metric_eigen.eigenvectors)};
}

SvdFactors reduced_svd(const DenseMatrix& v, const ToleranceConfig& cfg) {
  return reduced_svd(v, hermitian_eigen(gram_metric(v), cfg), cfg);
}

OrthonormalBasis canonical_from_symmetric(const OrthonormalBasis& phi, const UnitaryMatrix& u) {
  if (phi.method() != OrthoMethod::Symmetric) {
    throw Error(ErrorKind::InvalidArgument,
                "canonical_from_symmetric expects a symmetric basis, got " +
                    std::string(to_string(phi.method())));
  }
  require_cols_match(phi.matrix(), u, "canonical_from_symmetric");
  return make_basis(matmul(phi.matrix(), u.matrix()), OrthoMethod::Canonical,
                    phi.source_eigen());
}

OrthonormalBasis symmetric_from_canonical(const OrthonormalBasis& lambda, const UnitaryMatrix& u) {
  if (lambda.method() != OrthoMethod::Canonical) {
    throw Error(ErrorKind::InvalidArgument,
                "symmetric_from_canonical expects a canonical basis, got " +
                    std::string(to_string(lambda.method())));
  }
  require_cols_match(lambda.matrix(), u, "symmetric_from_canonical");
  return make_basis(matmul(lambda.matrix(), conjugate_transpose(u.matrix())),
                    OrthoMethod::Symmetric, lambda.source_eigen());
}

OrthonormalBasis symmetric_from_svd(const SvdFactors& f) {
  require_cols_match(f.left, f.right, "symmetric_from_svd");
  return make_basis(matmul(f.left, conjugate_transpose(f.right.matrix())),
                    OrthoMethod::Symmetric, std::nullopt);
}

DenseMatrix reconstruct_polar(const PolarFactors& f) {
  return matmul(f.orthonormal.matrix(), f.positive.matrix());
}

DenseMatrix reconstruct_svd(const SvdFactors& f) {
  if (f.singular_values.size() != f.left.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "reconstruct_svd: " + std::to_string(f.singular_values.size()) +
                    " singular values for W " + shape(f.left));
  }
  require_cols_match(f.left, f.right, "reconstruct_svd");
  return matmul(scale_columns(f.left, f.singular_values), conjugate_transpose(f.right.matrix()));
}

}  // namespace orthokit
