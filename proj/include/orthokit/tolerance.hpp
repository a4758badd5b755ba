#pragma once

namespace orthokit {

/// Numerical thresholds shared by every operation. Relative tolerances are
/// scaled by the quantity named next to them.
struct ToleranceConfig {
  double hermiticity_tol = 1e-10;       // x (1 + max |entry|)
  double orthonormality_tol = 1e-10;    // absolute, on Z^H Z - I
  double reconstruction_tol = 1e-9;     // x max |V|
  double rank_tol = 1e-12;              // eigenvalue cutoff, x d[0]
  double eigen_convergence_tol = 1e-14; // off-diagonal norm, x Frobenius norm
  int max_sweeps = 64;

  /// Throws InvalidArgument unless every tolerance is positive and
  /// max_sweeps >= 1.
  void validate() const;
};

}  // namespace orthokit
