#pragma once

#include <vector>

#include "orthokit/eigen.hpp"
#include "orthokit/lowdin.hpp"
#include "orthokit/matrix.hpp"

namespace orthokit {

/// Right polar form V = Phi H with Phi the symmetric basis and H = M^{1/2}.
struct PolarFactors {
  OrthonormalBasis orthonormal;
  HermitianMatrix positive;
};

/// Reduced SVD V = W diag(sigma) U^H, sigma descending and equal to d^{1/2}.
struct SvdFactors {
  DenseMatrix left;
  std::vector<double> singular_values;
  UnitaryMatrix right;
};

PolarFactors polar_decompose(const DenseMatrix& v, const ToleranceConfig& cfg = {});
PolarFactors polar_decompose(const DenseMatrix& v, const HermitianEigen& metric_eigen,
                             const ToleranceConfig& cfg = {});

/// The left factor is the canonical basis of V, built from the same
/// eigendecomposition, so W == canonical_orthogonalize(V).matrix().
SvdFactors reduced_svd(const DenseMatrix& v, const ToleranceConfig& cfg = {});
SvdFactors reduced_svd(const DenseMatrix& v, const HermitianEigen& metric_eigen,
                       const ToleranceConfig& cfg = {});

/// Lambda = Phi U. Throws InvalidArgument unless phi is a symmetric basis.
OrthonormalBasis canonical_from_symmetric(const OrthonormalBasis& phi, const UnitaryMatrix& u);

/// Phi = Lambda U^H. Throws InvalidArgument unless lambda is a canonical basis.
OrthonormalBasis symmetric_from_canonical(const OrthonormalBasis& lambda, const UnitaryMatrix& u);

/// Phi = W U^H, i.e. Phi_ij = sum_k W_ik conj(U_jk).
OrthonormalBasis symmetric_from_svd(const SvdFactors& f);

DenseMatrix reconstruct_polar(const PolarFactors& f);
DenseMatrix reconstruct_svd(const SvdFactors& f);

}  // namespace orthokit
