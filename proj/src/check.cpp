#include "qdc/check.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "qdc/amplitude.hpp"
#include "qdc/params.hpp"
#include "qdc/temporal.hpp"

namespace qdc {

namespace {

std::vector<SystemParams> oracle_grid() {
  std::vector<SystemParams> grid;
  for (double lambda : {0.01, 0.1, 1.0}) {
    for (double omega : {0.0, 0.5, 2.0}) {
      for (double delta : {0.0, 1.0, 10.0}) {
        SystemParams p;
        p.lambda = lambda;
        p.omega_rabi = omega;
        p.delta_qc = delta;
        grid.push_back(p);
      }
    }
  }
  return grid;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

}  // namespace

std::vector<CheckLine> run_checks() {
  std::vector<CheckLine> lines;
  const std::vector<double> times = linspace(0.0, 30.0, 601);

  double ode_err = 0.0;
  double branch_err = 0.0;
  double max_modulus = 0.0;
  double fd_err = 0.0;
  for (const SystemParams& p : oracle_grid()) {
    const DerivedParams dp = derive(p);
    const AmplitudeTrajectory traj = amplitude_oracle_ode(p, 30.0, 1e-13, times);
    DerivedParams flipped = dp;
    flipped.f_const = -dp.f_const;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      const Complex a = amplitude(dp, traj.times[i]);
      ode_err = std::max(ode_err, std::abs(a - traj.values[i]));
      branch_err = std::max(branch_err, std::abs(a - amplitude(flipped, traj.times[i])));
      max_modulus = std::max(max_modulus, std::abs(a));
    }
    const double h = 1e-5;
    for (double t = 0.5; t < 30.0; t += 0.5) {
      if (std::abs(amplitude(dp, t)) <= 1e-3) continue;
      const double fd = -2.0 *
          (std::log(std::abs(amplitude(dp, t + h))) - std::log(std::abs(amplitude(dp, t - h)))) /
          (2.0 * h);
      fd_err = std::max(fd_err, std::abs(fd - decay_rate(dp, t)));
    }
  }
  lines.push_back({"amplitude closed form vs ODE (27-point grid, gamma*t in [0,30])",
                   ode_err <= 1e-8, ode_err, 1e-8});
  lines.push_back({"F branch independence", branch_err <= 1e-13, branch_err, 1e-13});
  lines.push_back({"contraction |A| <= 1", max_modulus <= 1.0 + 1e-12, max_modulus, 1.0 + 1e-12});
  lines.push_back({"decay rate vs finite difference of -2 log|A|", fd_err <= 1e-6, fd_err, 1e-6});

  {
    const SpectralDensity sd{0.0, 0.01, 1.0};
    SystemParams p;
    p.lambda = sd.width;
    const double expected = kernel(derive(p), 0.0).real();
    using boost::math::quadrature::gauss_kronrod;
    const double a = sd.width;
    // Substitution omega = lambda tan(u) maps the real line to (-pi/2, pi/2).
    auto f = [&](double u) {
      const double c = std::cos(u);
      return spectral_density(sd, a * std::tan(u)) * a / (c * c);
    };
    const double total = gauss_kronrod<double, 31>::integrate(
        f, -std::numbers::pi / 2, std::numbers::pi / 2, 20, 1e-14);
    const double rel = std::abs(total - expected) / expected;
    lines.push_back({"Lorentzian total weight vs kernel(0)", rel <= 1e-6, rel, 1e-6});
  }

  {
    double err = 0.0;
    for (const SystemParams& p : oracle_grid()) {
      const DerivedParams dp = derive(p);
      for (double theta : {0.0, std::numbers::pi / 6, std::numbers::pi / 4}) {
        for (double tau : {0.0, 0.7, 3.0, 11.0, 29.0}) {
          const WitnessProbabilities pr = witness_probabilities(dp, theta, tau);
          err = std::max(err, std::abs(std::abs(pr.p_plus - pr.p_plus_blind) -
                                       quantum_witness(dp, theta, tau).w_q));
        }
      }
    }
    lines.push_back({"witness closed form vs propagator route", err <= 1e-12, err, 1e-12});
  }
  return lines;
}

}  // namespace qdc
