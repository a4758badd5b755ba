#pragma once

#include <optional>
#include <string_view>

#include "orthokit/eigen.hpp"
#include "orthokit/matrix.hpp"
#include "orthokit/tolerance.hpp"

namespace orthokit {

enum class OrthoMethod { Symmetric, Canonical, General };

std::string_view to_string(OrthoMethod method) noexcept;

/// Square matrix with B^H B = I to within 1e-12 * dim.
class UnitaryMatrix {
 public:
  /// Throws DimensionMismatch for a non-square input, NotUnitary otherwise.
  explicit UnitaryMatrix(DenseMatrix b);

  static UnitaryMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return b_.rows(); }
  const DenseMatrix& matrix() const noexcept { return b_; }

 private:
  DenseMatrix b_;
};

/// Column-orthonormal n x m matrix plus the method that produced it.
class OrthonormalBasis {
 public:
  /// Wraps a caller-supplied matrix; throws NotOrthonormal when
  /// max |Z^H Z - I| exceeds cfg.orthonormality_tol.
  OrthonormalBasis(DenseMatrix z, OrthoMethod method, const ToleranceConfig& cfg = {},
                   std::optional<HermitianEigen> source_eigen = std::nullopt);

  const DenseMatrix& matrix() const noexcept { return z_; }
  OrthoMethod method() const noexcept { return method_; }
  /// The (U, d) of the metric the basis was built from, when known.
  const std::optional<HermitianEigen>& source_eigen() const noexcept { return eigen_; }

 private:
  friend OrthonormalBasis make_basis(DenseMatrix, OrthoMethod, std::optional<HermitianEigen>);
  struct Unchecked {};
  OrthonormalBasis(Unchecked, DenseMatrix z, OrthoMethod method,
                   std::optional<HermitianEigen> source_eigen);

  DenseMatrix z_;
  OrthoMethod method_;
  std::optional<HermitianEigen> eigen_;
};

/// Library-internal constructor for bases that are orthonormal by construction
/// (their residual is governed by the conditioning of the input).
OrthonormalBasis make_basis(DenseMatrix z, OrthoMethod method,
                            std::optional<HermitianEigen> source_eigen);

/// Z = V M^{-1/2} B for an arbitrary unitary B. B = I gives the symmetric
/// basis bit for bit; B = U (eigenvectors of M) gives the canonical basis.
OrthonormalBasis orthogonalize_general(const DenseMatrix& v, const UnitaryMatrix& b,
                                       const ToleranceConfig& cfg = {});
/// Same, reusing a precomputed eigendecomposition of gram_metric(v).
OrthonormalBasis orthogonalize_general(const DenseMatrix& v, const HermitianEigen& metric_eigen,
                                       const UnitaryMatrix& b, const ToleranceConfig& cfg = {});

/// Phi = V M^{-1/2}.
OrthonormalBasis symmetric_orthogonalize(const DenseMatrix& v, const ToleranceConfig& cfg = {});
OrthonormalBasis symmetric_orthogonalize(const DenseMatrix& v, const HermitianEigen& metric_eigen,
                                         const ToleranceConfig& cfg = {});

/// Lambda = V U d^{-1/2}, columns in descending order of d.
OrthonormalBasis canonical_orthogonalize(const DenseMatrix& v, const ToleranceConfig& cfg = {});
OrthonormalBasis canonical_orthogonalize(const DenseMatrix& v, const HermitianEigen& metric_eigen,
                                         const ToleranceConfig& cfg = {});

struct VerificationReport {
  double residual;
  bool pass;
};

/// max |Z^H Z - I| against cfg.orthonormality_tol. Never throws on a
/// non-orthonormal input.
VerificationReport verify_orthonormal(const DenseMatrix& z, const ToleranceConfig& cfg = {});

}  // namespace orthokit
