#include "qdc/amplitude.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>

#include "qdc/error.hpp"

namespace qdc {

namespace {

// sinh(z)/z, analytic at z = 0.
Complex sinhc(Complex z) {
  if (std::abs(z) < 1e-3) {
    const Complex z2 = z * z;
    return 1.0 + z2 / 6.0 * (1.0 + z2 / 20.0 * (1.0 + z2 / 42.0));
  }
  return std::sinh(z) / z;
}

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::kValidation, "time must be finite and >= 0");
  }
}

}  // namespace

// A(t) = e^{-Mt/2} [cosh z + (2M/F) sinh z], z = F t / 4.
// Small |z| uses (2M/F) sinh z = (M t / 2) sinhc z, which has no 1/F; large
// |z| splits into the two decaying exponentials to avoid cosh overflow.
Complex amplitude(const DerivedParams& dp, double t) {
  require_time(t);
  const Complex m = dp.m_const;
  const Complex f = dp.f_const;
  const Complex z = f * t / 4.0;
  if (std::abs(z) < 1.0) {
    return std::exp(-m * t / 2.0) * (std::cosh(z) + (m * t / 2.0) * sinhc(z));
  }
  const Complex ratio = 2.0 * m / f;
  return 0.5 * (1.0 + ratio) * std::exp((f / 4.0 - m / 2.0) * t) +
         0.5 * (1.0 - ratio) * std::exp((-f / 4.0 - m / 2.0) * t);
}

// dA/dt = e^{-Mt/2} sinh(z) (F^2 - 4M^2) / (4F), and
// F^2 - 4M^2 = -8 gamma lambda cos^4(eta/2).
Complex amplitude_derivative(const DerivedParams& dp, double t) {
  require_time(t);
  const Complex m = dp.m_const;
  const Complex f = dp.f_const;
  const double g = dp.kernel_strength() * dp.coupling_factor();
  const Complex z = f * t / 4.0;
  if (std::abs(z) < 1.0) {
    return -g * t * std::exp(-m * t / 2.0) * sinhc(z);
  }
  return -2.0 * g / f *
         (std::exp((f / 4.0 - m / 2.0) * t) - std::exp((-f / 4.0 - m / 2.0) * t));
}

AmplitudeSample amplitude_with_derivative(const DerivedParams& dp, double t) {
  require_time(t);
  const Complex m = dp.m_const;
  const Complex f = dp.f_const;
  const double g = dp.kernel_strength() * dp.coupling_factor();
  const Complex z = f * t / 4.0;
  if (std::abs(z) < 1.0) {
    const Complex damp = std::exp(-m * t / 2.0);
    const Complex sc = sinhc(z);
    return {damp * (std::cosh(z) + (m * t / 2.0) * sc), -g * t * damp * sc};
  }
  const Complex up = std::exp((f / 4.0 - m / 2.0) * t);
  const Complex down = std::exp((-f / 4.0 - m / 2.0) * t);
  const Complex ratio = 2.0 * m / f;
  return {0.5 * (1.0 + ratio) * up + 0.5 * (1.0 - ratio) * down,
          -2.0 * g / f * (up - down)};
}

double decay_rate(const DerivedParams& dp, double t) {
  const Complex a = amplitude(dp, t);
  if (std::abs(a) < 1e-14) {
    throw Error(ErrorCode::kPole, "decay rate diverges at a zero of A(t)");
  }
  // Adding 0.0 folds -0 into +0 at t = 0.
  return -2.0 * std::real(amplitude_derivative(dp, t) / a) + 0.0;
}

AmplitudeTrajectory amplitude_oracle_ode(const SystemParams& params,
                                         double t_max, double tol,
                                         std::vector<double> sample_times) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<Complex, 2>;

  if (!(tol > 0.0)) throw Error(ErrorCode::kValidation, "tol must be > 0");
  require_time(t_max);
  const DerivedParams dp = derive(params);

  if (sample_times.empty()) sample_times = {0.0, t_max};
  if (!std::is_sorted(sample_times.begin(), sample_times.end()) ||
      sample_times.front() < 0.0 || sample_times.back() > t_max) {
    throw Error(ErrorCode::kValidation,
                "sample times must be ascending within [0, t_max]");
  }
  if (sample_times.front() != 0.0) sample_times.insert(sample_times.begin(), 0.0);

  const double k = dp.coupling_factor();
  const double g = dp.kernel_strength();
  const Complex m = dp.m_const;
  auto rhs = [k, g, m](const State& y, State& dy, double) {
    dy[0] = -k * y[1];
    dy[1] = g * y[0] - m * y[1];
  };

  AmplitudeTrajectory out;
  out.params = params;
  out.times.reserve(sample_times.size());
  out.values.reserve(sample_times.size());
  out.auxiliary.reserve(sample_times.size());
  auto observer = [&out](const State& y, double t) {
    out.times.push_back(t);
    out.values.push_back(y[0]);
    out.auxiliary.push_back(y[1]);
  };

  State y{Complex(1.0, 0.0), Complex(0.0, 0.0)};
  auto stepper = odeint::make_dense_output(
      tol, tol, odeint::runge_kutta_dopri5<State, double, State, double,
                                           odeint::range_algebra>());
  const double dt0 = 1e-3 / std::max({1.0, dp.omega_d, std::abs(m)});
  try {
    odeint::integrate_times(stepper, rhs, y, sample_times.begin(),
                            sample_times.end(), dt0, observer);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kIntegrationFailure,
                std::string("amplitude ODE integration failed: ") + e.what());
  }
  return out;
}

}  // namespace qdc
