#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qdc/amplitude.hpp"
#include "qdc/error.hpp"

using qdc::Complex;
using qdc::SystemParams;

namespace {

std::vector<SystemParams> standard_grid() {
  std::vector<SystemParams> grid;
  for (double lambda : {0.01, 0.1, 1.0}) {
    for (double omega : {0.0, 0.5, 2.0}) {
      for (double delta : {0.0, 1.0, 10.0}) {
        grid.push_back({1.0, lambda, omega, delta, 0.0, 0.0});
      }
    }
  }
  return grid;
}

}  // namespace

TEST_CASE("initial conditions") {
  for (const SystemParams& p : standard_grid()) {
    const qdc::DerivedParams d = qdc::derive(p);
    CHECK(qdc::amplitude(d, 0.0) == Complex(1.0, 0.0));
    CHECK(std::abs(qdc::amplitude_derivative(d, 0.0)) == 0.0);
  }
}

TEST_CASE("closed form matches a fixed-step RK4 oracle on the standard grid") {
  const double h = 1e-3;
  const std::size_t n = 30000;
  for (const SystemParams& p : standard_grid()) {
    const std::vector<Complex> ref = oracle::rk4_amplitude(p, h, n);
    const qdc::DerivedParams d = qdc::derive(p);
    double worst = 0.0;
    for (std::size_t i = 0; i <= n; i += 10) {
      worst = std::max(worst, std::abs(qdc::amplitude(d, i * h) - ref[i]));
    }
    CAPTURE(p.lambda);
    CAPTURE(p.omega_rabi);
    CAPTURE(p.delta_qc);
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("closed form matches the integro-differential equation solved directly") {
  const double h = 2e-3;
  const std::size_t n = 2500;
  for (const SystemParams& p : {SystemParams{1.0, 0.01, 0.0, 0.0, 0.0, 0.0},
                                SystemParams{1.0, 0.5, 0.5, 1.0, 0.2, 0.0},
                                SystemParams{1.0, 2.5, 0.0, 0.0, 0.0, 0.0}}) {
    const std::vector<Complex> ref = oracle::volterra_amplitude(p, h, n);
    const qdc::DerivedParams d = qdc::derive(p);
    for (std::size_t i = 0; i <= n; i += 50) {
      CHECK(std::abs(qdc::amplitude(d, i * h) - ref[i]) < 1e-5);
    }
  }
}

TEST_CASE("library ODE oracle agrees with the closed form") {
  for (const SystemParams& p : standard_grid()) {
    std::vector<double> times;
    for (int i = 0; i <= 300; ++i) times.push_back(0.1 * i);
    const qdc::AmplitudeTrajectory traj = qdc::amplitude_oracle_ode(p, 30.0, 1e-12, times);
    REQUIRE(traj.values.size() == times.size());
    const qdc::DerivedParams d = qdc::derive(p);
    for (std::size_t i = 0; i < times.size(); ++i) {
      CHECK(std::abs(traj.values[i] - qdc::amplitude(d, times[i])) < 1e-8);
    }
  }
  CHECK_THROWS_AS(qdc::amplitude_oracle_ode({}, 10.0, 0.0), qdc::Error);
}

TEST_CASE("A is even in F") {
  for (const SystemParams& p : standard_grid()) {
    qdc::DerivedParams d = qdc::derive(p);
    qdc::DerivedParams flipped = d;
    flipped.f_const = -d.f_const;
    for (double t : {0.0, 0.01, 0.5, 3.0, 12.0, 29.0}) {
      const Complex a = qdc::amplitude(d, t);
      CHECK(std::abs(a - qdc::amplitude(flipped, t)) <= 1e-13 * std::max(1.0, std::abs(a)));
      CHECK(std::abs(qdc::amplitude_derivative(d, t) -
                     qdc::amplitude_derivative(flipped, t)) < 1e-13);
    }
  }
}

TEST_CASE("series and exponential forms join continuously") {
  for (const SystemParams& p : standard_grid()) {
    const qdc::DerivedParams d = qdc::derive(p);
    const double t_switch = 4.0 / std::abs(d.f_const);
    const double lo = t_switch * (1 - 1e-12);
    const double hi = t_switch * (1 + 1e-12);
    // Allow for the genuine change of A across [lo, hi].
    const double drift = std::abs(qdc::amplitude_derivative(d, t_switch)) * (hi - lo);
    CHECK(std::abs(qdc::amplitude(d, lo) - qdc::amplitude(d, hi)) < 1e-12 + 2 * drift);
  }
}

TEST_CASE("derivative matches a central difference") {
  for (const SystemParams& p : standard_grid()) {
    const qdc::DerivedParams d = qdc::derive(p);
    for (double t : {0.3, 2.0, 7.5, 25.0}) {
      const double h = 1e-5;
      const Complex fd = (qdc::amplitude(d, t + h) - qdc::amplitude(d, t - h)) / (2 * h);
      CHECK(std::abs(fd - qdc::amplitude_derivative(d, t)) < 1e-7);
      const qdc::AmplitudeSample s = qdc::amplitude_with_derivative(d, t);
      CHECK(std::abs(s.value - qdc::amplitude(d, t)) < 1e-15);
      CHECK(std::abs(s.derivative - qdc::amplitude_derivative(d, t)) < 1e-15);
    }
  }
}

TEST_CASE("contraction on the grid and far out") {
  for (const SystemParams& p : standard_grid()) {
    const qdc::DerivedParams d = qdc::derive(p);
    for (int i = 0; i <= 4000; ++i) {
      const double t = 0.05 * i;
      const double m = std::abs(qdc::amplitude(d, t));
      REQUIRE(std::isfinite(m));
      CHECK(m <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("overdamped regime decays monotonically without zeros") {
  const qdc::DerivedParams d = qdc::derive({1.0, 2.5, 0.0, 0.0, 0.0, 0.0});
  double prev = 1.0;
  for (int i = 1; i <= 2000; ++i) {
    const Complex a = qdc::amplitude(d, 0.05 * i);
    CHECK(std::abs(a.imag()) < 1e-14);
    CHECK(a.real() > 0.0);
    CHECK(a.real() < prev);
    prev = a.real();
  }
}

TEST_CASE("decay rate") {
  const qdc::DerivedParams d = qdc::derive({1.0, 0.01, 0.0, 0.0, 0.0, 0.0});
  CHECK(qdc::decay_rate(d, 0.0) == 0.0);

  // Markov limit: a broad reservoir gives the bare rate.
  const qdc::DerivedParams markov = qdc::derive({1.0, 100.0, 0.0, 0.0, 0.0, 0.0});
  CHECK(qdc::decay_rate(markov, 10.0) == doctest::Approx(1.0).epsilon(0.02));

  // Gamma = -d/dt log|A|^2.
  const qdc::DerivedParams driven = qdc::derive({1.0, 0.1, 0.3, 0.2, 0.0, 0.0});
  for (double t : {0.5, 4.0, 9.0}) {
    const double h = 1e-5;
    const double fd = -(std::log(std::norm(qdc::amplitude(driven, t + h))) -
                        std::log(std::norm(qdc::amplitude(driven, t - h)))) /
                      (2 * h);
    CHECK(qdc::decay_rate(driven, t) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("decay rate reports a pole at a zero of A") {
  // Omega = 0, lambda small: A is real and changes sign near t = pi / sqrt(2 gamma lambda).
  const qdc::DerivedParams d = qdc::derive({1.0, 0.01, 0.0, 0.0, 0.0, 0.0});
  double lo = 20.0, hi = 24.0;
  REQUIRE(qdc::amplitude(d, lo).real() * qdc::amplitude(d, hi).real() < 0.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (qdc::amplitude(d, mid).real() > 0.0 ? lo : hi) = mid;
  }
  try {
    qdc::decay_rate(d, lo);
    FAIL("expected a pole");
  } catch (const qdc::Error& e) {
    CHECK(e.code() == qdc::ErrorCode::kPole);
  }
}
