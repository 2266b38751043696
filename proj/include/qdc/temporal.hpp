#pragma once

#include <array>
#include <span>
#include <vector>

#include "qdc/params.hpp"

namespace qdc {

struct LgiResult {
  double tau = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  bool violated3 = false;  // c3 > 1
  bool violated4 = false;  // c4 > 2
};

struct WitnessResult {
  double tau = 0.0;
  double w_q = 0.0;
  double envelope = 0.0;  // coherence monotone, filled by callers that have a grid
};

/// Symmetrized sigma_x two-time correlator for measurements at
/// t_earlier <= t_later:
///   Re[cos^2(theta) A(t_l) A*(t_e) e^{-i w_D (t_l - t_e)}
///      + sin^2(theta) A(t_l - t_e) e^{-i w_D (t_l - t_e)}].
double two_time_correlation(const DerivedParams& dp, double theta,
                            double t_earlier, double t_later);

/// C3 (times 0, tau, 2 tau) and C4 (0, tau, 2 tau, 3 tau) in one pass.
LgiResult lgi(const DerivedParams& dp, double theta, double tau);
LgiResult lgi_c3(const DerivedParams& dp, double theta, double tau);
LgiResult lgi_c4(const DerivedParams& dp, double theta, double tau);

using Propagator = std::array<std::array<double, 2>, 2>;

/// Lambda(t, 0) in the {|+>, |->} basis; column-stochastic.
Propagator propagator(const DerivedParams& dp, double t);

/// Witness |p_+(tau) - p'_+(tau)| for a blind |+-> measurement at tau/2.
WitnessResult quantum_witness(const DerivedParams& dp, double theta, double tau);

/// Probabilities of |+> at tau without (p_plus) and with (p_plus_blind) the
/// intermediate non-selective measurement, propagated through Lambda.
struct WitnessProbabilities {
  double p_plus = 0.0;
  double p_plus_blind = 0.0;
};
WitnessProbabilities witness_probabilities(const DerivedParams& dp, double theta,
                                           double tau);

/// Upper envelope of |A(tau)|/2: piecewise-linear through the local maxima,
/// endpoints included as knots. Needs a strictly increasing grid of >= 3
/// points starting at 0.
std::vector<double> coherence_monotone(const DerivedParams& dp,
                                       std::span<const double> taus);

/// Same construction on an arbitrary sampled series.
std::vector<double> upper_envelope(std::span<const double> x,
                                   std::span<const double> y);

}  // namespace qdc
