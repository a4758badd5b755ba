#include <cmath>
#include <random>

#include "doctest.h"
#include "orthokit/decompositions.hpp"
#include "orthokit/error.hpp"
#include "support/random_matrices.hpp"

using namespace orthokit;

namespace {

const DenseMatrix kSwap{{0, 1}, {1, 0}};

}  // namespace

TEST_CASE("polar decomposition examples") {
  const DenseMatrix i2 = DenseMatrix::identity(2);
  const PolarFactors id = polar_decompose(i2);
  CHECK(id.orthonormal.matrix() == i2);
  CHECK(id.positive.matrix() == i2);

  const PolarFactors d = polar_decompose(DenseMatrix{{2, 0}, {0, 3}});
  CHECK(max_abs_diff(d.orthonormal.matrix(), i2) < 1e-15);
  CHECK(max_abs_diff(d.positive.matrix(), DenseMatrix{{2, 0}, {0, 3}}) < 1e-15);

  // M = diag(4, 4), M^{1/2} = 2I, Phi = V / 2
  const DenseMatrix rot{{0, -2}, {2, 0}};
  const PolarFactors r = polar_decompose(rot);
  CHECK(max_abs_diff(r.orthonormal.matrix(), DenseMatrix{{0, -1}, {1, 0}}) < 1e-15);
  CHECK(max_abs_diff(r.positive.matrix(), DenseMatrix{{2, 0}, {0, 2}}) < 1e-15);
  CHECK(max_abs_diff(reconstruct_polar(r), rot) < 1e-15);
}

TEST_CASE("reduced SVD examples") {
  const SvdFactors desc = reduced_svd(DenseMatrix{{3, 0}, {0, 2}});
  CHECK(desc.singular_values == std::vector<double>{3, 2});
  CHECK(max_abs_diff(desc.left, DenseMatrix::identity(2)) < 1e-15);
  CHECK(desc.right.matrix() == DenseMatrix::identity(2));

  const DenseMatrix v23{{2, 0}, {0, 3}};
  const SvdFactors swap = reduced_svd(v23);
  CHECK(swap.singular_values == std::vector<double>{3, 2});
  CHECK(max_abs_diff(swap.left, kSwap) < 1e-15);
  CHECK(swap.right.matrix() == kSwap);
  CHECK(max_abs_diff(reconstruct_svd(swap), v23) < 1e-15);

  const DenseMatrix v{{1, 1}, {0, 1}};
  const SvdFactors f = reduced_svd(v);
  CHECK(std::abs(f.singular_values[0] - std::sqrt((3 + std::sqrt(5.0)) / 2)) < 1e-15);
  CHECK(std::abs(f.singular_values[1] - std::sqrt((3 - std::sqrt(5.0)) / 2)) < 1e-15);
  CHECK(max_abs_diff(reconstruct_svd(f), v) <= 1e-10);
}

TEST_CASE("rank-deficient inputs are rejected, not truncated") {
  const DenseMatrix v{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(polar_decompose(v), SpectrumError);
  CHECK_THROWS_AS(reduced_svd(v), SpectrumError);
}

TEST_CASE("analytic relations between the two bases") {
  const DenseMatrix i2 = DenseMatrix::identity(2);
  const OrthonormalBasis phi_id(i2, OrthoMethod::Symmetric);
  CHECK(canonical_from_symmetric(phi_id, UnitaryMatrix::identity(2)).matrix() == i2);
  const OrthonormalBasis lambda_swap = canonical_from_symmetric(phi_id, UnitaryMatrix(kSwap));
  CHECK(lambda_swap.matrix() == kSwap);
  CHECK(lambda_swap.method() == OrthoMethod::Canonical);

  const OrthonormalBasis lambda_id(i2, OrthoMethod::Canonical);
  CHECK(symmetric_from_canonical(lambda_id, UnitaryMatrix::identity(2)).matrix() == i2);
  const OrthonormalBasis lam(kSwap, OrthoMethod::Canonical);
  CHECK(symmetric_from_canonical(lam, UnitaryMatrix(kSwap)).matrix() == i2);

  // V = diag(2, 3): Phi = I, U from M = diag(4, 9) in descending order
  const DenseMatrix v23{{2, 0}, {0, 3}};
  const OrthonormalBasis phi = symmetric_orthogonalize(v23);
  const UnitaryMatrix u(phi.source_eigen()->eigenvectors);
  CHECK(u.matrix() == kSwap);
  CHECK(max_abs_diff(canonical_from_symmetric(phi, u).matrix(),
                     canonical_orthogonalize(v23).matrix()) < 1e-15);
}

TEST_CASE("relation preconditions") {
  const OrthonormalBasis canonical(DenseMatrix::identity(2), OrthoMethod::Canonical);
  const OrthonormalBasis symmetric(DenseMatrix::identity(2), OrthoMethod::Symmetric);
  try {
    canonical_from_symmetric(canonical, UnitaryMatrix::identity(2));
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
  CHECK_THROWS_AS(symmetric_from_canonical(symmetric, UnitaryMatrix::identity(2)), Error);
  try {
    canonical_from_symmetric(symmetric, UnitaryMatrix::identity(3));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("symmetric basis from SVD factors") {
  const DenseMatrix i2 = DenseMatrix::identity(2);
  CHECK(symmetric_from_svd(SvdFactors{i2, {1, 1}, UnitaryMatrix::identity(2)}).matrix() == i2);
  CHECK(symmetric_from_svd(SvdFactors{kSwap, {3, 2}, UnitaryMatrix(kSwap)}).matrix() == i2);

  const DenseMatrix v{{1, 1}, {0, 1}};
  CHECK(max_abs_diff(symmetric_from_svd(reduced_svd(v)).matrix(),
                     symmetric_orthogonalize(v).matrix()) <= 1e-10);
}

TEST_CASE("reconstruction helpers") {
  const DenseMatrix i2 = DenseMatrix::identity(2);
  const PolarFactors pf{OrthonormalBasis(i2, OrthoMethod::Symmetric), HermitianMatrix(i2)};
  CHECK(reconstruct_polar(pf) == i2);
  const SvdFactors sf{i2, {3, 2}, UnitaryMatrix::identity(2)};
  CHECK(reconstruct_svd(sf) == DenseMatrix{{3, 0}, {0, 2}});
  CHECK_THROWS_AS(reconstruct_svd(SvdFactors{i2, {3}, UnitaryMatrix::identity(2)}), Error);
}

TEST_CASE("decomposition properties on random full-rank inputs") {
  std::mt19937_64 rng(4242);
  ToleranceConfig cfg;
  for (int trial = 0; trial < 200; ++trial) {
    const bool complex_entries = trial % 2 == 0;
    const auto shape = testing::random_shape(rng);
    const DenseMatrix v = testing::random_full_rank(rng, shape.rows, shape.cols, complex_entries);
    const double vmax = v.max_abs();
    const HermitianEigen eig = hermitian_eigen(gram_metric(v));

    const PolarFactors polar = polar_decompose(v, eig);
    CHECK(max_abs_diff(reconstruct_polar(polar), v) <= 1e-9 * vmax);
    CHECK(polar.orthonormal.matrix() == symmetric_orthogonalize(v, eig).matrix());
    CHECK(max_abs_diff(polar.positive.matrix(), hermitian_power(gram_metric(v), 0.5).matrix()) <=
          1e-12);
    CHECK(hermitian_eigen(polar.positive).eigenvalues.back() > 0.0);

    const SvdFactors svd = reduced_svd(v, eig);
    CHECK(max_abs_diff(reconstruct_svd(svd), v) <= 1e-9 * vmax);
    CHECK(orthonormality_residual(svd.left) <= cfg.orthonormality_tol);
    CHECK(svd.left == canonical_orthogonalize(v, eig).matrix());
    CHECK(std::is_sorted(svd.singular_values.rbegin(), svd.singular_values.rend()));
    for (std::size_t j = 0; j < svd.singular_values.size(); ++j) {
      const double s2 = svd.singular_values[j] * svd.singular_values[j];
      CHECK(std::abs(s2 - eig.eigenvalues[j]) <= 1e-10 * eig.eigenvalues[j]);
    }

    const OrthonormalBasis phi = symmetric_orthogonalize(v, eig);
    const OrthonormalBasis lambda = canonical_orthogonalize(v, eig);
    const UnitaryMatrix u(eig.eigenvectors);
    CHECK(max_abs_diff(canonical_from_symmetric(phi, u).matrix(), lambda.matrix()) <= 1e-12);
    CHECK(max_abs_diff(symmetric_from_canonical(lambda, u).matrix(), phi.matrix()) <= 1e-12);
    CHECK(max_abs_diff(symmetric_from_svd(svd).matrix(), phi.matrix()) <= 1e-10);

    const OrthonormalBasis round_trip =
        canonical_from_symmetric(symmetric_from_canonical(lambda, u), u);
    CHECK(max_abs_diff(round_trip.matrix(), lambda.matrix()) <= 1e-14);
  }
}

TEST_CASE("symmetric basis from SVD is insensitive to degeneracy") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseMatrix v = testing::with_singular_values(rng, 5, {1.5, 1.5, 1.5, 0.5}, trial % 2 == 0);
    const DenseMatrix direct = symmetric_orthogonalize(v).matrix();
    const DenseMatrix via_svd = symmetric_from_svd(reduced_svd(v)).matrix();
    CHECK(max_abs_diff(direct, via_svd) <= 1e-10);
    CHECK(max_abs_diff(column_projector(direct), column_projector(via_svd)) <= 1e-10);
  }
}
