#include "qdc/non_markovianity.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "qdc/amplitude.hpp"
#include "qdc/error.hpp"

namespace qdc {

BlochVector AntipodalPair::first() const {
  return {std::sin(alpha) * std::cos(azimuth), std::sin(alpha) * std::sin(azimuth),
          std::cos(alpha)};
}

namespace {

double distance_from_modulus(double alpha, double abs_a) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const double a2 = abs_a * abs_a;
  return std::sqrt(c * c * a2 * a2 + s * s * a2);
}

// Half the derivative of |A|^2; same sign as d|A|/dt.
double growth_indicator(const DerivedParams& dp, double t) {
  const AmplitudeSample s = amplitude_with_derivative(dp, t);
  return std::real(std::conj(s.value) * s.derivative);
}

// Growth indicator on the uniform grid t_k = k h. Past the series region the
// two exponentials of A are advanced by multiplication and reseeded from the
// exact values every kReseed steps.
class GridScanner {
 public:
  GridScanner(const DerivedParams& dp, double h)
      : dp_(dp),
        h_(h),
        ratio_(2.0 * dp.m_const / dp.f_const),
        gain_(-2.0 * dp.kernel_strength() * dp.coupling_factor() / dp.f_const),
        step_up_(std::exp((dp.f_const / 4.0 - dp.m_const / 2.0) * h)),
        step_down_(std::exp((-dp.f_const / 4.0 - dp.m_const / 2.0) * h)),
        series_end_(4.0 / std::abs(dp.f_const)) {}

  // Must be called with k = 1, 2, 3, ... in order.
  double at(std::size_t k) {
    const double t = static_cast<double>(k) * h_;
    if (!(t > series_end_) || !std::isfinite(series_end_)) return growth_indicator(dp_, t);
    if (!seeded_ || k % kReseed == 0) {
      up_ = std::exp((dp_.f_const / 4.0 - dp_.m_const / 2.0) * t);
      down_ = std::exp((-dp_.f_const / 4.0 - dp_.m_const / 2.0) * t);
      seeded_ = true;
    } else {
      // Plain products; std::complex multiplication goes through the
      // NaN-recovering library call, which dominates this loop.
      up_ = mul(up_, step_up_);
      down_ = mul(down_, step_down_);
    }
    const Complex a = mul(0.5 * (1.0 + ratio_), up_) + mul(0.5 * (1.0 - ratio_), down_);
    const Complex da = mul(gain_, up_ - down_);
    return a.real() * da.real() + a.imag() * da.imag();
  }

 private:
  static Complex mul(Complex x, Complex y) {
    return {x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
  }

  static constexpr std::size_t kReseed = 256;
  const DerivedParams& dp_;
  double h_;
  Complex ratio_, gain_, step_up_, step_down_;
  double series_end_;
  Complex up_, down_;
  bool seeded_ = false;
};

// Fastest frequency in |A(t)|: omega_D enters only through M, and |A| beats
// at Im(F)/2.
double rate_scale(const DerivedParams& dp) {
  return std::max({std::abs(dp.m_const), std::abs(dp.f_const) / 2.0, dp.lambda, dp.gamma});
}

}  // namespace

double pair_trace_distance(const DerivedParams& dp, const AntipodalPair& pair,
                           double t) {
  return distance_from_modulus(pair.alpha, std::abs(amplitude(dp, t)));
}

double info_flux(const DerivedParams& dp, const AntipodalPair& pair, double t) {
  const AmplitudeSample s = amplitude_with_derivative(dp, t);
  const double u = std::norm(s.value);
  const double du = 2.0 * std::real(std::conj(s.value) * s.derivative);
  const double c = std::cos(pair.alpha);
  const double sn = std::sin(pair.alpha);
  const double d = std::sqrt(c * c * u * u + sn * sn * u);
  if (d < 1e-300) return 0.0;
  return (2.0 * c * c * u + sn * sn) * du / (2.0 * d);
}

BackflowIntervals backflow_intervals(const DerivedParams& dp, const AntipodalPair& pair,
                                     double t_max, const ScanOptions& options) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw Error(ErrorCode::kValidation, "t_max must be > 0");
  }
  const double wanted = std::ceil(options.points_per_unit * rate_scale(dp) * t_max);
  const std::size_t n = std::max(options.min_points, static_cast<std::size_t>(wanted));
  const double h = t_max / static_cast<double>(n - 1);

  auto refine = [&](double lo, double hi, double g_lo) {
    // g(lo) and g(hi) have opposite signs.
    for (int it = 0; it < 200 && hi - lo > options.time_tol; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double g_mid = growth_indicator(dp, mid);
      if ((g_mid > 0.0) == (g_lo > 0.0)) {
        lo = mid;
        g_lo = g_mid;
      } else {
        hi = mid;
      }
    }
    if (hi - lo > options.time_tol) {
      throw Error(ErrorCode::kUnresolvedBracket, "backflow bracket did not converge");
    }
    return 0.5 * (lo + hi);
  };

  BackflowIntervals out;
  out.t_max = t_max;
  out.grid_points = n;

  GridScanner scan(dp, h);
  // g(0) = 0 exactly; the first interior sample decides the initial sign.
  double t_prev = h;
  double g_prev = scan.at(1);
  bool inside = g_prev > 0.0;
  double start = 0.0;
  for (std::size_t k = 2; k < n; ++k) {
    const double t = (k + 1 == n) ? t_max : static_cast<double>(k) * h;
    const double g = (k + 1 == n) ? growth_indicator(dp, t) : scan.at(k);
    const bool positive = g > 0.0;
    if (positive != inside) {
      const double root = refine(t_prev, t, g_prev);
      if (positive) {
        start = root;
      } else {
        out.intervals.push_back({start, root});
      }
      inside = positive;
    }
    t_prev = t;
    g_prev = g;
  }
  if (inside) out.intervals.push_back({start, t_max});

  out.d_values.reserve(out.intervals.size());
  for (const Interval& iv : out.intervals) {
    out.d_values.push_back({pair_trace_distance(dp, pair, iv.start),
                            pair_trace_distance(dp, pair, iv.end)});
  }
  return out;
}

namespace {

double backflow_sum(const std::vector<Interval>& moduli, double alpha) {
  double total = 0.0;
  for (const Interval& m : moduli) {
    total += distance_from_modulus(alpha, m.end) - distance_from_modulus(alpha, m.start);
  }
  return total;
}

}  // namespace

BlpResult blp_measure(const SystemParams& params, double t_max, std::size_t alpha_grid,
                      const ScanOptions& options) {
  const DerivedParams dp = derive(params);
  if (alpha_grid < 2) throw Error(ErrorCode::kValidation, "alpha grid needs >= 2 points");
  if (!(t_max > 0.0)) throw Error(ErrorCode::kValidation, "t_max must be > 0");
  const double tail = std::abs(amplitude(dp, t_max));
  if (tail >= 1e-4 && t_max < 100.0) {
    throw Error(ErrorCode::kValidation,
                "t_max too short: need |A(t_max)| < 1e-4 or t_max >= 100");
  }

  const BackflowIntervals found = backflow_intervals(dp, AntipodalPair{}, t_max, options);
  std::vector<Interval> moduli;
  moduli.reserve(found.intervals.size());
  for (const Interval& iv : found.intervals) {
    moduli.push_back({std::abs(amplitude(dp, iv.start)), std::abs(amplitude(dp, iv.end))});
  }

  const double half_pi = 0.5 * std::numbers::pi;
  const double step = half_pi / static_cast<double>(alpha_grid - 1);
  std::size_t best_i = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < alpha_grid; ++i) {
    const double value = backflow_sum(moduli, static_cast<double>(i) * step);
    if (value > best) {
      best = value;
      best_i = i;
    }
  }

  BlpResult r;
  r.t_max = t_max;
  r.interval_count = found.intervals.size();
  r.grid_n_measure = std::max(best, 0.0);
  r.truncated = tail >= 1e-4;
  r.truncation_bound = 2.0 * tail;

  // Golden-section search on the bracket around the best grid point.
  double lo = step * static_cast<double>(best_i == 0 ? 0 : best_i - 1);
  double hi = std::min(half_pi, step * static_cast<double>(best_i + 1));
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = backflow_sum(moduli, x1);
  double f2 = backflow_sum(moduli, x2);
  while (hi - lo > 1e-4) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = backflow_sum(moduli, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = backflow_sum(moduli, x1);
    }
  }
  double alpha = 0.5 * (lo + hi);
  double refined = backflow_sum(moduli, alpha);
  if (refined < best) {
    alpha = static_cast<double>(best_i) * step;
    refined = best;
  }

  r.n_measure = std::max(refined, 0.0);
  r.best_pair = AntipodalPair{alpha, 0.0};
  r.best_first = r.best_pair.first();
  r.best_second = r.best_pair.second();
  return r;
}

double integrated_positive_flux(const DerivedParams& dp, const AntipodalPair& pair,
                                double t_max, double tol) {
  using boost::math::quadrature::gauss_kronrod;
  const auto cells = static_cast<std::size_t>(
      std::clamp(std::ceil(4.0 * rate_scale(dp) * t_max), 16.0, 1e6));
  const double width = t_max / static_cast<double>(cells);
  auto positive_flux = [&](double t) { return std::max(info_flux(dp, pair, t), 0.0); };
  double total = 0.0;
  for (std::size_t i = 0; i < cells; ++i) {
    const double lo = static_cast<double>(i) * width;
    const double hi = (i + 1 == cells) ? t_max : lo + width;
    total += gauss_kronrod<double, 15>::integrate(positive_flux, lo, hi, 12, tol);
  }
  return total;
}

}  // namespace qdc
