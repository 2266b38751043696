#pragma once

#include <functional>

#include "qdc/params.hpp"

namespace qdc {

/// Instantaneous spectrum of rho(t) for the initial state
/// cos(theta)|A> + sin(theta)|B>.
///
/// The "+" eigenvector is cos_theta_big |A> + sin_theta_big e^{-i phase} |B>
/// with phase = arg rho_AB; the "-" eigenvector is its orthonormal
/// complement. A common overall phase factor is dropped since only
/// projectors enter the geometric phase.
struct EigenSystem {
  double eps_plus = 1.0;
  double eps_minus = 0.0;
  double cos_theta_big = 1.0;
  double sin_theta_big = 0.0;
  double coherence_phase = 0.0;
  bool degenerate = false;  // eps_plus - eps_minus < 1e-10
};

EigenSystem eigensystem(const DerivedParams& dp, double theta, double t);

/// Called for every quadrature node visited while integrating the phase.
using NodeObserver = std::function<void(double t, const EigenSystem&)>;

struct GeometricPhaseResult {
  double phase = 0.0;           // radians, raw integral in [0, 2 pi]
  double error_estimate = 0.0;
  bool degenerate_nodes = false;
};

/// Kinematic phase after one dressed period T = 2 pi / omega_D of a pure
/// initial state: omega_D * int_0^T cos^2(Theta(t)) dt. Throws
/// Error(kOmegaDZero) when omega_D == 0.
GeometricPhaseResult geometric_phase(const DerivedParams& dp, double theta,
                                     double quad_tol = 1e-9,
                                     const NodeObserver& observer = {});

}  // namespace qdc
