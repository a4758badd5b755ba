#include "orthokit/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "orthokit/error.hpp"

namespace orthokit {

namespace {

constexpr double kPhaseTieRel = 1e-10;

double off_diagonal_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) sum += 2.0 * std::norm(a(i, j));
  }
  return std::sqrt(sum);
}

double frobenius_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (const auto& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

// One two-sided Jacobi rotation zeroing a(p, q). The rotation G is the real
// rotation of the phase-stripped 2x2 block, with column q pre-multiplied by
// conj(e) where e = a_pq / |a_pq|. A <- G^H A G, U <- U G.
void rotate(DenseMatrix& a, DenseMatrix& u, std::size_t p, std::size_t q) {
  const Scalar apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;

  const Scalar phase = std::conj(apq / r);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Scalar g_pp = c;
  const Scalar g_qp = -s * phase;
  const Scalar g_pq = s;
  const Scalar g_qq = c * phase;

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Scalar akp = a(k, p);
    const Scalar akq = a(k, q);
    const Scalar new_kp = akp * g_pp + akq * g_qp;
    const Scalar new_kq = akp * g_pq + akq * g_qq;
    a(k, p) = new_kp;
    a(k, q) = new_kq;
    a(p, k) = std::conj(new_kp);
    a(q, k) = std::conj(new_kq);
  }
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const Scalar ukp = u(k, p);
    const Scalar ukq = u(k, q);
    u(k, p) = ukp * g_pp + ukq * g_qp;
    u(k, q) = ukp * g_pq + ukq * g_qq;
  }
}

void normalize_column_phase(DenseMatrix& m, std::size_t j) {
  double max_mod = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) max_mod = std::max(max_mod, std::abs(m(i, j)));
  if (max_mod == 0.0) return;
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (std::abs(m(i, j)) >= max_mod * (1.0 - kPhaseTieRel)) {
      pivot = i;
      break;
    }
  }
  const Scalar z = m(pivot, j);
  const double mod = std::abs(z);
  const Scalar phase = std::conj(z) / mod;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) *= phase;
  m(pivot, j) = mod;
}

}  // namespace

double HermitianEigen::condition_estimate() const noexcept {
  if (eigenvalues.empty() || eigenvalues.back() <= 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return eigenvalues.front() / eigenvalues.back();
}

DenseMatrix HermitianEigen::reconstruct() const {
  return matmul(scale_columns(eigenvectors, eigenvalues), conjugate_transpose(eigenvectors));
}

HermitianEigen hermitian_eigen(const DenseMatrix& m, const ToleranceConfig& cfg) {
  return hermitian_eigen(HermitianMatrix(m, cfg.hermiticity_tol), cfg);
}

HermitianEigen hermitian_eigen(const HermitianMatrix& m, const ToleranceConfig& cfg) {
  cfg.validate();
  const double residual = hermiticity_residual(m.matrix());
  if (residual > cfg.hermiticity_tol * (1.0 + m.matrix().max_abs())) {
    throw Error(ErrorKind::NotHermitian,
                "max |a_ij - conj(a_ji)| = " + std::to_string(residual));
  }

  const std::size_t n = m.dim();
  DenseMatrix a = HermitianMatrix::symmetrized(m.matrix()).matrix();
  DenseMatrix u = DenseMatrix::identity(n);
  const double scale = frobenius_norm(a);

  for (int sweep = 0;; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off <= cfg.eigen_convergence_tol * scale) break;
    if (sweep == cfg.max_sweeps) {
      throw Error(ErrorKind::NoConvergence,
                  "Jacobi off-diagonal norm " + std::to_string(off / scale) +
                      " (relative) after " + std::to_string(sweep) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, u, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  HermitianEigen out{std::vector<double>(n), DenseMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = u(i, order[j]);
    normalize_column_phase(out.eigenvectors, j);
  }
  out.eigenvectors.require_finite();
  return out;
}

namespace {

void check_spectrum(const HermitianEigen& eigen, const ToleranceConfig& cfg,
                    bool reject_negative) {
  const auto& d = eigen.eigenvalues;
  const double scale = std::max(std::abs(d.front()), std::abs(d.back()));
  const double cond = eigen.condition_estimate();
  if (reject_negative) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d[j] < -cfg.rank_tol * scale) {
        throw SpectrumError(ErrorKind::NegativeEigenvalue, j, d[j], cond,
                            "eigenvalue " + std::to_string(j) + " = " + std::to_string(d[j]) +
                                " is negative; fractional power undefined");
      }
    }
  }
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] <= cfg.rank_tol * scale) {
      throw SpectrumError(ErrorKind::SingularMetric, j, d[j], cond,
                          "eigenvalue " + std::to_string(j) + " = " + std::to_string(d[j]) +
                              " is not above rank_tol * d[0]; condition estimate " +
                              std::to_string(cond));
    }
  }
}

}  // namespace

void require_positive_definite(const HermitianEigen& eigen, const ToleranceConfig& cfg) {
  check_spectrum(eigen, cfg, true);
}

HermitianMatrix hermitian_power(const HermitianEigen& eigen, double p,
                                const ToleranceConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(p)) throw Error(ErrorKind::InvalidArgument, "exponent must be finite");
  const bool fractional = p != std::floor(p);
  if (fractional) {
    require_positive_definite(eigen, cfg);
  } else if (p < 0.0) {
    check_spectrum(eigen, cfg, false);
  }

  const auto& d = eigen.eigenvalues;
  std::vector<double> powered(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) powered[j] = std::pow(d[j], p);
  const DenseMatrix result = matmul(scale_columns(eigen.eigenvectors, powered),
                                    conjugate_transpose(eigen.eigenvectors));
  return HermitianMatrix::symmetrized(result);
}

HermitianMatrix hermitian_power(const HermitianMatrix& m, double p, const ToleranceConfig& cfg) {
  return hermitian_power(hermitian_eigen(m, cfg), p, cfg);
}

DenseMatrix phase_normalized(const DenseMatrix& m) {
  DenseMatrix out = m;
  for (std::size_t j = 0; j < out.cols(); ++j) normalize_column_phase(out, j);
  return out;
}

std::vector<std::vector<std::size_t>> degenerate_clusters(const std::vector<double>& d,
                                                          double rel_gap) {
  std::vector<std::vector<std::size_t>> clusters;
  if (d.empty()) return clusters;
  const double scale = std::max(std::abs(d.front()), std::abs(d.back()));
  clusters.push_back({0});
  for (std::size_t j = 1; j < d.size(); ++j) {
    if (std::abs(d[j - 1] - d[j]) <= rel_gap * scale) {
      clusters.back().push_back(j);
    } else {
      clusters.push_back({j});
    }
  }
  return clusters;
}

}  // namespace orthokit
