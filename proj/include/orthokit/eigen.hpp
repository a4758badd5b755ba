#pragma once

#include <cstddef>
#include <vector>

#include "orthokit/matrix.hpp"
#include "orthokit/tolerance.hpp"

namespace orthokit {

/// Spectral decomposition M = U diag(d) U^H of a Hermitian matrix.
///
/// Conventions shared by every consumer in the library:
///  - eigenvalues are sorted in descending order, column j of U pairs with d[j];
///  - in each column of U the entry of largest modulus is real and
///    non-negative; moduli within a relative 1e-10 of the column maximum
///    count as tied and the lowest row index wins.
/// Inside a degenerate cluster the individual columns are arbitrary; only the
/// spanned subspace is meaningful.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  DenseMatrix eigenvectors;

  std::size_t dim() const noexcept { return eigenvalues.size(); }

  /// d[0] / d[last]; +inf when the smallest eigenvalue is not positive.
  double condition_estimate() const noexcept;

  /// U diag(d) U^H.
  DenseMatrix reconstruct() const;
};

/// Cyclic Jacobi diagonalization. Throws NotHermitian if `m` fails the
/// hermiticity check at cfg.hermiticity_tol, NoConvergence if the relative
/// off-diagonal norm does not fall below cfg.eigen_convergence_tol within
/// cfg.max_sweeps sweeps.
HermitianEigen hermitian_eigen(const HermitianMatrix& m, const ToleranceConfig& cfg = {});
HermitianEigen hermitian_eigen(const DenseMatrix& m, const ToleranceConfig& cfg = {});

/// M^p = U diag(d^p) U^H, re-symmetrized.
///
/// Negative or fractional exponents need every eigenvalue above
/// rank_tol * d[0]; a fractional exponent additionally rejects eigenvalues
/// below -rank_tol * d[0] (NegativeEigenvalue) before the positivity check
/// (SingularMetric). Both errors are SpectrumError and report the offending
/// index and d[0] / d[min].
HermitianMatrix hermitian_power(const HermitianEigen& eigen, double p,
                                const ToleranceConfig& cfg = {});
HermitianMatrix hermitian_power(const HermitianMatrix& m, double p,
                                const ToleranceConfig& cfg = {});

/// Throws the same SpectrumError as a fractional hermitian_power unless every
/// eigenvalue exceeds rank_tol * d[0].
void require_positive_definite(const HermitianEigen& eigen, const ToleranceConfig& cfg = {});

/// Applies the library's phase convention to every column of `m`: the
/// largest-modulus entry (ties to the lowest row) becomes real non-negative.
DenseMatrix phase_normalized(const DenseMatrix& m);

/// Eigenvalue clusters: consecutive indices of a descending list whose
/// neighbours differ by at most rel_gap * max(|d[0]|, |d[last]|).
std::vector<std::vector<std::size_t>> degenerate_clusters(const std::vector<double>& d,
                                                          double rel_gap = 1e-9);

}  // namespace orthokit
