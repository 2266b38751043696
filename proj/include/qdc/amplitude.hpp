#pragma once

#include <vector>

#include "qdc/params.hpp"

namespace qdc {

/// Excited dressed-state survival amplitude A(t) of the exact
/// single-excitation solution. A(0) = 1 and |A| <= 1.
Complex amplitude(const DerivedParams& dp, double t);

/// Analytic time derivative of amplitude().
Complex amplitude_derivative(const DerivedParams& dp, double t);

struct AmplitudeSample {
  Complex value;
  Complex derivative;
};

/// amplitude() and amplitude_derivative() sharing the exponentials.
AmplitudeSample amplitude_with_derivative(const DerivedParams& dp, double t);

struct AmplitudeTrajectory {
  std::vector<double> times;
  std::vector<Complex> values;      // A(t)
  std::vector<Complex> auxiliary;   // memory integral B(t)
  SystemParams params;
};

/// Integrates the local system equivalent to the exponential-kernel
/// integro-differential equation,
///   dA/dt = -cos^4(eta/2) B,   dB/dt = (gamma lambda / 2) A - M B,
/// from A(0) = 1, B(0) = 0 with adaptive step control. The trajectory is
/// sampled at `sample_times` (ascending, >= 0); pass an empty vector to get
/// only t = 0 and t_max.
AmplitudeTrajectory amplitude_oracle_ode(const SystemParams& params,
                                         double t_max, double tol,
                                         std::vector<double> sample_times = {});

/// Gamma(t) = -2 Re(A'/A). Throws Error(kPole) where |A(t)| < 1e-14.
double decay_rate(const DerivedParams& dp, double t);

}  // namespace qdc
