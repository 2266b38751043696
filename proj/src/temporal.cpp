#include "qdc/temporal.hpp"

#include <cmath>

#include "qdc/amplitude.hpp"
#include "qdc/error.hpp"

namespace qdc {

double two_time_correlation(const DerivedParams& dp, double theta,
                            double t_earlier, double t_later) {
  if (t_earlier < 0.0 || t_later < t_earlier) {
    throw Error(ErrorCode::kValidation,
                "correlation needs 0 <= t_earlier <= t_later");
  }
  const double dt = t_later - t_earlier;
  const Complex phase = std::polar(1.0, -dp.omega_d * dt);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex value =
      c * c * amplitude(dp, t_later) * std::conj(amplitude(dp, t_earlier)) * phase +
      s * s * amplitude(dp, dt) * phase;
  return value.real();
}

LgiResult lgi(const DerivedParams& dp, double theta, double tau) {
  if (tau < 0.0) throw Error(ErrorCode::kValidation, "tau must be >= 0");
  const double c21 = two_time_correlation(dp, theta, 0.0, tau);
  const double c32 = two_time_correlation(dp, theta, tau, 2.0 * tau);
  const double c43 = two_time_correlation(dp, theta, 2.0 * tau, 3.0 * tau);
  const double c31 = two_time_correlation(dp, theta, 0.0, 2.0 * tau);
  const double c41 = two_time_correlation(dp, theta, 0.0, 3.0 * tau);
  LgiResult r;
  r.tau = tau;
  r.c3 = c21 + c32 - c31;
  r.c4 = c21 + c32 + c43 - c41;
  r.violated3 = r.c3 > 1.0;
  r.violated4 = r.c4 > 2.0;
  return r;
}

LgiResult lgi_c3(const DerivedParams& dp, double theta, double tau) {
  return lgi(dp, theta, tau);
}

LgiResult lgi_c4(const DerivedParams& dp, double theta, double tau) {
  return lgi(dp, theta, tau);
}

Propagator propagator(const DerivedParams& dp, double t) {
  const double re = amplitude(dp, t).real();
  return {{{0.5 * (1.0 + re), 0.5 * (1.0 - re)}, {0.5 * (1.0 - re), 0.5 * (1.0 + re)}}};
}

namespace {

std::array<double, 2> apply(const Propagator& l, const std::array<double, 2>& p) {
  return {l[0][0] * p[0] + l[0][1] * p[1], l[1][0] * p[0] + l[1][1] * p[1]};
}

}  // namespace

WitnessProbabilities witness_probabilities(const DerivedParams& dp, double theta,
                                           double tau) {
  if (tau < 0.0) throw Error(ErrorCode::kValidation, "tau must be >= 0");
  const double s2 = std::sin(2.0 * theta);
  const std::array<double, 2> p0{0.5 * (1.0 + s2), 0.5 * (1.0 - s2)};
  const Propagator full = propagator(dp, tau);
  const Propagator half = propagator(dp, 0.5 * tau);
  // The second leg reuses Lambda(tau/2, 0) for Lambda(tau, tau/2).
  return {apply(full, p0)[0], apply(half, apply(half, p0))[0]};
}

WitnessResult quantum_witness(const DerivedParams& dp, double theta, double tau) {
  if (tau < 0.0) throw Error(ErrorCode::kValidation, "tau must be >= 0");
  const Complex a = amplitude(dp, tau);
  const Complex a_half = amplitude(dp, 0.5 * tau);
  const double two_re = 2.0 * a.real();
  const double two_re_half = 2.0 * a_half.real();
  WitnessResult r;
  r.tau = tau;
  r.w_q = 0.25 * std::abs(std::sin(2.0 * theta) *
                          (two_re - 0.5 * two_re_half * two_re_half));
  return r;
}

std::vector<double> upper_envelope(std::span<const double> x,
                                   std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::kValidation, "size mismatch");
  if (x.size() < 3) throw Error(ErrorCode::kValidation, "envelope needs >= 3 points");
  std::vector<std::size_t> knots{0};
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i] >= y[i - 1] && y[i] > y[i + 1]) knots.push_back(i);
  }
  knots.push_back(y.size() - 1);

  // Segments without an interior minimum are monotone and follow the data;
  // the others are bridged linearly between the neighbouring knots.
  std::vector<double> env(y.begin(), y.end());
  for (std::size_t k = 0; k + 1 < knots.size(); ++k) {
    const std::size_t lo = knots[k];
    const std::size_t hi = knots[k + 1];
    bool has_dip = false;
    for (std::size_t i = lo + 1; i < hi && !has_dip; ++i) {
      has_dip = y[i] <= y[i - 1] && y[i] < y[i + 1];
    }
    if (!has_dip) continue;
    for (std::size_t i = lo + 1; i < hi; ++i) {
      const double w = (x[i] - x[lo]) / (x[hi] - x[lo]);
      env[i] = std::max(y[i], (1.0 - w) * y[lo] + w * y[hi]);
    }
  }
  return env;
}

std::vector<double> coherence_monotone(const DerivedParams& dp,
                                       std::span<const double> taus) {
  if (taus.size() < 3) throw Error(ErrorCode::kValidation, "envelope needs >= 3 points");
  if (taus.front() != 0.0) throw Error(ErrorCode::kValidation, "tau grid must start at 0");
  for (std::size_t i = 1; i < taus.size(); ++i) {
    if (!(taus[i] > taus[i - 1])) {
      throw Error(ErrorCode::kValidation, "tau grid must be strictly increasing");
    }
  }
  std::vector<double> half(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) {
    half[i] = 0.5 * std::abs(amplitude(dp, taus[i]));
  }
  return upper_envelope(taus, half);
}

}  // namespace qdc
