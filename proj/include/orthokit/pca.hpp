#pragma once

#include <cstddef>
#include <vector>

#include "orthokit/eigen.hpp"
#include "orthokit/lowdin.hpp"
#include "orthokit/matrix.hpp"

namespace orthokit {

/// Principal components of the uncentred sum-of-squares-and-cross-products
/// matrix S = V V^H (vectors stored as the columns of V).
struct SscpResult {
  HermitianMatrix sscp;
  HermitianEigen eigen;
  /// n x r, the eigenvectors of S whose eigenvalue exceeds rank_tol * d[0]
  /// (at least one column).
  DenseMatrix components;
  /// Eigenvalues paired with `components`, descending.
  std::vector<double> component_scores;
};

HermitianMatrix sscp_matrix(const DenseMatrix& v);

SscpResult principal_components(const DenseMatrix& v, const ToleranceConfig& cfg = {});

struct EquivalenceReport {
  std::vector<double> gram_eigenvalues;  // m, descending
  std::vector<double> sscp_eigenvalues;  // n, descending
  /// max_j |g_j - s_j| / max(|g_j|, |s_j|) over the first m pairs; pairs
  /// where both values are below rank_tol * s[0] count as equal.
  double max_relative_gap;
  /// SSCP eigenvalues past index m with |s| <= rank_tol * s[0].
  std::size_t extra_zero_count;
};

/// Compares the spectra of V^H V and V V^H. Requires n >= m
/// (DimensionMismatch otherwise).
EquivalenceReport gram_sscp_eigenvalue_check(const DenseMatrix& v,
                                             const ToleranceConfig& cfg = {});

/// Entry j is sum_k |<b_j, v_k>|^2 over the columns v_k of V.
std::vector<double> projection_square_sums(const DenseMatrix& v, const OrthonormalBasis& basis);

}  // namespace orthokit
