#include "orthokit/pca.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orthokit/error.hpp"

namespace orthokit {

HermitianMatrix sscp_matrix(const DenseMatrix& v) {
  return HermitianMatrix::symmetrized(matmul(v, conjugate_transpose(v)));
}

SscpResult principal_components(const DenseMatrix& v, const ToleranceConfig& cfg) {
  HermitianMatrix s = sscp_matrix(v);
  HermitianEigen eigen = hermitian_eigen(s, cfg);

  const auto& d = eigen.eigenvalues;
  const double cutoff = cfg.rank_tol * std::max(std::abs(d.front()), std::abs(d.back()));
  std::size_t retained = 0;
  while (retained < d.size() && d[retained] > cutoff) ++retained;
  retained = std::max<std::size_t>(retained, 1);

  DenseMatrix components(eigen.dim(), retained);
  for (std::size_t i = 0; i < eigen.dim(); ++i) {
    for (std::size_t j = 0; j < retained; ++j) components(i, j) = eigen.eigenvectors(i, j);
  }
  std::vector<double> scores(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(retained));
  return SscpResult{std::move(s), std::move(eigen), std::move(components), std::move(scores)};
}

EquivalenceReport gram_sscp_eigenvalue_check(const DenseMatrix& v, const ToleranceConfig& cfg) {
  if (v.rows() < v.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "gram/SSCP comparison needs rows >= cols, got " + std::to_string(v.rows()) +
                    "x" + std::to_string(v.cols()));
  }
  EquivalenceReport report{hermitian_eigen(gram_metric(v), cfg).eigenvalues,
                           hermitian_eigen(sscp_matrix(v), cfg).eigenvalues, 0.0, 0};

  const auto& g = report.gram_eigenvalues;
  const auto& s = report.sscp_eigenvalues;
  const double cutoff = cfg.rank_tol * std::abs(s.front());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double denom = std::max(std::abs(g[j]), std::abs(s[j]));
    // Both numerically zero: a rank-deficient V matches itself.
    if (denom > cutoff) {
      report.max_relative_gap = std::max(report.max_relative_gap, std::abs(g[j] - s[j]) / denom);
    }
  }
  for (std::size_t j = g.size(); j < s.size(); ++j) {
    if (std::abs(s[j]) <= cutoff) ++report.extra_zero_count;
  }
  return report;
}

std::vector<double> projection_square_sums(const DenseMatrix& v, const OrthonormalBasis& basis) {
  const DenseMatrix& b = basis.matrix();
  if (b.rows() != v.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                "basis has " + std::to_string(b.rows()) + " rows but V has " +
                    std::to_string(v.rows()));
  }
  const DenseMatrix overlaps = matmul(conjugate_transpose(b), v);
  std::vector<double> sums(b.cols(), 0.0);
  for (std::size_t j = 0; j < overlaps.rows(); ++j) {
    for (std::size_t k = 0; k < overlaps.cols(); ++k) sums[j] += std::norm(overlaps(j, k));
  }
  return sums;
}

}  // namespace orthokit
