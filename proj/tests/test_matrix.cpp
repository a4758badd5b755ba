#include <random>

#include "doctest.h"
#include "orthokit/error.hpp"
#include "orthokit/matrix.hpp"
#include "support/random_matrices.hpp"

using namespace orthokit;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an orthokit::Error");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("matmul") {
  const DenseMatrix i2 = DenseMatrix::identity(2);
  CHECK(matmul(i2, i2) == i2);

  const DenseMatrix a{{1, 2}, {3, 4}};
  CHECK(matmul(a, i2) == a);
  CHECK(matmul(a, DenseMatrix{{5}, {6}}) == DenseMatrix{{17}, {39}});

  CHECK(kind_of([&] { matmul(a, DenseMatrix{{1, 2, 3}}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("conjugate transpose") {
  const DenseMatrix i2 = DenseMatrix::identity(2);
  CHECK(conjugate_transpose(i2) == i2);
  CHECK(conjugate_transpose(DenseMatrix{{0, 1}, {0, 0}}) == DenseMatrix{{0, 0}, {1, 0}});
  const Scalar i{0.0, 1.0};
  CHECK(conjugate_transpose(DenseMatrix{{i, 0}, {0, 0}}) == DenseMatrix{{-i, 0}, {0, 0}});

  const DenseMatrix wide{{1, Scalar(2, 3), 4}};
  const DenseMatrix t = conjugate_transpose(wide);
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 1);
  CHECK(t(1, 0) == Scalar(2, -3));
}

TEST_CASE("construction rejects empty, ragged and non-finite input") {
  CHECK(kind_of([] { DenseMatrix(0, 3); }) == ErrorKind::EmptyMatrix);
  CHECK(kind_of([] { DenseMatrix(2, 2, std::vector<Scalar>(3)); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { DenseMatrix({{1, 2}, {3}}); }) == ErrorKind::RaggedRows);
  CHECK(kind_of([] { DenseMatrix({{1, std::nan("")}}); }) == ErrorKind::NonFinite);
  CHECK(kind_of([] { DenseMatrix({{Scalar(1, INFINITY)}}); }) == ErrorKind::NonFinite);
}

TEST_CASE("gram metric") {
  CHECK(gram_metric(DenseMatrix::identity(2)).matrix() == DenseMatrix::identity(2));
  CHECK(gram_metric(DenseMatrix{{1, 1}, {0, 1}}).matrix() == DenseMatrix{{1, 1}, {1, 2}});
  CHECK(gram_metric(DenseMatrix{{1}, {1}}).matrix() == DenseMatrix{{2}});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto shape = testing::random_shape(rng);
    const DenseMatrix v = testing::random_uniform(rng, shape.rows, shape.cols, true);
    const HermitianMatrix m = gram_metric(v);
    CHECK(hermiticity_residual(m.matrix()) == 0.0);
    for (std::size_t i = 0; i < m.dim(); ++i) CHECK(m(i, i).imag() == 0.0);
  }
}

TEST_CASE("hermitian matrix checks") {
  CHECK_NOTHROW(HermitianMatrix(DenseMatrix{{2, Scalar(1, 1)}, {Scalar(1, -1), 3}}));
  CHECK(kind_of([] { HermitianMatrix(DenseMatrix{{1, 2}, {3, 4}}); }) == ErrorKind::NotHermitian);
  CHECK(kind_of([] { HermitianMatrix(DenseMatrix{{1, 2}}); }) == ErrorKind::DimensionMismatch);

  // within tolerance relative to (1 + max |a|)
  CHECK_NOTHROW(HermitianMatrix(DenseMatrix{{1, 1 + 1e-11}, {1, 1}}));

  const HermitianMatrix sym = HermitianMatrix::symmetrized(DenseMatrix{{1, 2}, {4, Scalar(5, 1)}});
  CHECK(sym.matrix() == DenseMatrix{{1, 3}, {3, 5}});
}

TEST_CASE("residual helpers") {
  CHECK(orthonormality_residual(DenseMatrix{{1, 1}, {0, 1}}) == 1.0);
  CHECK(max_abs_diff(DenseMatrix{{1, 2}}, DenseMatrix{{1, 2.5}}) == 0.5);
  CHECK(kind_of([] { max_abs_diff(DenseMatrix{{1, 2}}, DenseMatrix{{1}, {2}}); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(trace_real(DenseMatrix{{1, 9}, {9, 4}}) == 5.0);

  const double f[] = {2.0, -1.0};
  CHECK(scale_columns(DenseMatrix{{1, 1}, {1, 1}}, f) == DenseMatrix{{2, -1}, {2, -1}});
  CHECK(column_projector(DenseMatrix{{1}, {0}}) == DenseMatrix{{1, 0}, {0, 0}});
}

TEST_CASE("tolerance config validation") {
  ToleranceConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.rank_tol = 0.0;
  CHECK(kind_of([&] { cfg.validate(); }) == ErrorKind::InvalidArgument);
  cfg = {};
  cfg.max_sweeps = 0;
  CHECK(kind_of([&] { cfg.validate(); }) == ErrorKind::InvalidArgument);
}
