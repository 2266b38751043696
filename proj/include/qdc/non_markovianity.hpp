#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "qdc/params.hpp"
#include "qdc/qubit_state.hpp"

namespace qdc {

/// Antipodal pure-state pair +-(sin a cos p, sin a sin p, cos a) on the Bloch
/// sphere. Initial trace distance is 1.
struct AntipodalPair {
  double alpha = std::numbers::pi / 2;  // polar angle
  double azimuth = 0.0;

  BlochVector first() const;
  BlochVector second() const { return -first(); }
};

/// D(t) = sqrt(cos^2(a) |A|^4 + sin^2(a) |A|^2) for the evolved pair.
double pair_trace_distance(const DerivedParams& dp, const AntipodalPair& pair,
                           double t);

/// sigma = dD/dt, from the analytic A'(t). Zero where D vanishes.
double info_flux(const DerivedParams& dp, const AntipodalPair& pair, double t);

struct Interval {
  double start = 0.0;
  double end = 0.0;
};

struct BackflowIntervals {
  std::vector<Interval> intervals;
  std::vector<Interval> d_values;  // D(start), D(end) per interval
  double t_max = 0.0;
  std::size_t grid_points = 0;
};

struct ScanOptions {
  double points_per_unit = 4000.0;  // per unit of max(|M|, |F|/2, lambda, gamma) * t_max
  std::size_t min_points = 10000;
  double time_tol = 1e-10;
};

/// Intervals in [0, t_max] where D grows. The sign of sigma equals the sign
/// of d|A|/dt for every antipodal pair, so only `d_values` depend on `pair`.
BackflowIntervals backflow_intervals(const DerivedParams& dp, const AntipodalPair& pair,
                                     double t_max, const ScanOptions& options = {});

struct BlpResult {
  double n_measure = 0.0;
  double grid_n_measure = 0.0;  // best value on the plain alpha grid
  AntipodalPair best_pair;
  BlochVector best_first;
  BlochVector best_second;
  double t_max = 0.0;
  std::size_t interval_count = 0;
  bool truncated = false;         // |A(t_max)| >= 1e-4
  double truncation_bound = 0.0;  // 2 |A(t_max)|
};

/// BLP measure maximised over antipodal pure pairs: alpha grid on [0, pi/2]
/// followed by golden-section refinement to 1e-4 around the best grid point.
BlpResult blp_measure(const SystemParams& params, double t_max = 100.0,
                      std::size_t alpha_grid = 91, const ScanOptions& options = {});

/// Independent route for the backflow sum: adaptive quadrature of
/// max(sigma, 0) over [0, t_max].
double integrated_positive_flux(const DerivedParams& dp, const AntipodalPair& pair,
                                double t_max, double tol = 1e-10);

}  // namespace qdc
