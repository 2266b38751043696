#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qdc/amplitude.hpp"
#include "qdc/error.hpp"
#include "qdc/temporal.hpp"

using qdc::Complex;
using qdc::SystemParams;

namespace {

double max_c3(const qdc::DerivedParams& d, double theta) {
  double best = -10.0;
  for (int i = 1; i <= 4000; ++i) best = std::max(best, qdc::lgi(d, theta, 1e-3 * i).c3);
  return best;
}

double max_c4(const qdc::DerivedParams& d, double theta) {
  double best = -10.0;
  for (int i = 1; i <= 4000; ++i) best = std::max(best, qdc::lgi(d, theta, 1e-3 * i).c4);
  return best;
}

}  // namespace

TEST_CASE("LGI boundary values are exact") {
  for (double omega : {0.0, 0.5, 2.0}) {
    for (double theta : {0.0, 0.3, std::numbers::pi / 4, std::numbers::pi / 2}) {
      const qdc::DerivedParams d = qdc::derive({1.0, 0.01, omega, 0.3, 0.0, 0.0});
      const qdc::LgiResult r = qdc::lgi(d, theta, 0.0);
      CHECK(r.c3 == 1.0);
      CHECK(r.c4 == 2.0);
      CHECK_FALSE(r.violated3);
      CHECK_FALSE(r.violated4);
    }
  }
}

TEST_CASE("correlator matches an RK4-driven evaluation") {
  const SystemParams p{1.0, 0.05, 0.7, 0.4, 0.1, 0.0};
  const double h = 1e-3;
  const std::vector<Complex> a = oracle::rk4_amplitude(p, h, 6000);
  const double omega_d = oracle::constants(p).omega_d;
  const qdc::DerivedParams d = qdc::derive(p);
  for (double theta : {0.0, 0.4, 1.2}) {
    for (auto [ie, il] : {std::pair{0, 1000}, {1000, 2000}, {500, 6000}, {3000, 3000}}) {
      const double dt = (il - ie) * h;
      const Complex ph = std::polar(1.0, -omega_d * dt);
      const double c2 = std::cos(theta) * std::cos(theta);
      const double expected =
          (c2 * a[il] * std::conj(a[ie]) * ph + (1 - c2) * a[il - ie] * ph).real();
      CHECK(qdc::two_time_correlation(d, theta, ie * h, il * h) ==
            doctest::Approx(expected).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(qdc::two_time_correlation(d, 0.0, 2.0, 1.0), qdc::Error);
}

TEST_CASE("correlators are bounded by one") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const qdc::DerivedParams d =
        qdc::derive({1.0, std::pow(10.0, -2 + 3 * u(rng)), 3 * u(rng), 20 * u(rng) - 10, 0, 0});
    const double t1 = 50 * u(rng);
    const double t2 = t1 + 50 * u(rng);
    CHECK(std::abs(qdc::two_time_correlation(d, u(rng) * std::numbers::pi / 2, t1, t2)) <=
          1.0 + 1e-12);
  }
}

TEST_CASE("driving produces LGI violations that the bare qubit lacks") {
  const qdc::DerivedParams driven = qdc::derive({1.0, 0.01, 2.0, 0.0, 0.0, 0.0});
  CHECK(max_c3(driven, 0.0) > 1.0);
  CHECK(max_c4(driven, 0.0) > 2.0);
  const qdc::DerivedParams bare = qdc::derive({1.0, 0.01, 0.0, 0.0, 0.0, 0.0});
  CHECK(max_c3(bare, 0.0) <= 1.02);
  CHECK(qdc::lgi_c3(driven, 0.0, 0.5).c3 == qdc::lgi(driven, 0.0, 0.5).c3);
  CHECK(qdc::lgi_c4(driven, 0.0, 0.5).c4 == qdc::lgi(driven, 0.0, 0.5).c4);
}

TEST_CASE("propagator is doubly stochastic") {
  const qdc::DerivedParams d = qdc::derive({1.0, 0.1, 0.5, 0.5, 0.0, 0.0});
  for (double t : {0.0, 0.7, 5.0, 40.0}) {
    const qdc::Propagator l = qdc::propagator(d, t);
    for (int i = 0; i < 2; ++i) {
      CHECK(l[0][i] + l[1][i] == doctest::Approx(1.0));
      CHECK(l[i][0] + l[i][1] == doctest::Approx(1.0));
      CHECK(l[i][0] >= 0.0);
      CHECK(l[i][1] >= 0.0);
    }
  }
  const qdc::Propagator id = qdc::propagator(d, 0.0);
  CHECK(id[0][0] == 1.0);
  CHECK(id[0][1] == 0.0);
}

TEST_CASE("witness closed form agrees with the propagator route and a direct formula") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const qdc::DerivedParams d =
        qdc::derive({1.0, std::pow(10.0, -2 + 3 * u(rng)), 3 * u(rng), 20 * u(rng) - 10, 0, 0});
    const double theta = u(rng) * std::numbers::pi / 2;
    const double tau = 60 * u(rng);
    const double w = qdc::quantum_witness(d, theta, tau).w_q;
    const qdc::WitnessProbabilities pr = qdc::witness_probabilities(d, theta, tau);
    CHECK(std::abs(w - std::abs(pr.p_plus - pr.p_plus_blind)) <= 1e-12);

    const double ra = qdc::amplitude(d, tau).real();
    const double rh = qdc::amplitude(d, tau / 2).real();
    const double direct = 0.25 * std::abs(std::sin(2 * theta) * (2 * ra - 2 * rh * rh));
    CHECK(std::abs(w - direct) <= 1e-14);
    CHECK(w >= 0.0);
    CHECK(w <= 1.0);
  }
}

TEST_CASE("witness vanishes for a basis state") {
  const qdc::DerivedParams d = qdc::derive({1.0, 0.01, 1.0, 0.0, 0.0, 0.0});
  for (int i = 0; i <= 100; ++i) CHECK(qdc::quantum_witness(d, 0.0, 0.37 * i).w_q == 0.0);
}

TEST_CASE("coherence monotone") {
  std::vector<double> taus(2001);
  for (std::size_t i = 0; i < taus.size(); ++i) taus[i] = 0.05 * i;

  SUBCASE("oscillating amplitude is bounded by the envelope") {
    const qdc::DerivedParams d = qdc::derive({1.0, 0.01, 0.0, 0.0, 0.0, 0.0});
    const std::vector<double> env = qdc::coherence_monotone(d, taus);
    for (std::size_t i = 0; i < taus.size(); ++i) {
      CHECK(env[i] >= 0.5 * std::abs(qdc::amplitude(d, taus[i])) - 1e-15);
    }
  }
  SUBCASE("monotone amplitude is its own envelope") {
    const qdc::DerivedParams d = qdc::derive({1.0, 2.5, 0.0, 0.0, 0.0, 0.0});
    const std::vector<double> env = qdc::coherence_monotone(d, taus);
    for (std::size_t i = 0; i < taus.size(); ++i) {
      CHECK(env[i] == 0.5 * std::abs(qdc::amplitude(d, taus[i])));
    }
  }
  SUBCASE("witness peaks sit on or under the envelope") {
    const qdc::DerivedParams d = qdc::derive({1.0, 0.01, 0.0, 0.0, 0.0, 0.0});
    const std::vector<double> env = qdc::coherence_monotone(d, taus);
    std::vector<double> w(taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i) {
      w[i] = qdc::quantum_witness(d, std::numbers::pi / 4, taus[i]).w_q;
    }
    for (std::size_t i = 1; i + 1 < taus.size(); ++i) {
      if (w[i] > w[i - 1] && w[i] > w[i + 1]) CHECK(w[i] <= env[i] + 5e-3);
    }
  }
  SUBCASE("bad grids") {
    const qdc::DerivedParams d = qdc::derive({});
    const std::vector<double> short_grid{0.0, 1.0};
    CHECK_THROWS_AS(qdc::coherence_monotone(d, short_grid), qdc::Error);
    const std::vector<double> offset{0.5, 1.0, 2.0};
    CHECK_THROWS_AS(qdc::coherence_monotone(d, offset), qdc::Error);
    const std::vector<double> repeated{0.0, 1.0, 1.0};
    CHECK_THROWS_AS(qdc::coherence_monotone(d, repeated), qdc::Error);
  }
}

TEST_CASE("upper envelope bridges dips") {
  const std::vector<double> x{0, 1, 2, 3, 4, 5, 6};
  const std::vector<double> y{1, 0, 0.8, 0.2, 0.6, 0.5, 0.4};
  const std::vector<double> env = qdc::upper_envelope(x, y);
  CHECK(env[0] == 1.0);
  CHECK(env[1] == doctest::Approx(0.9));
  CHECK(env[2] == 0.8);
  CHECK(env[3] == doctest::Approx(0.7));
  CHECK(env[4] == 0.6);
  CHECK(env[5] == 0.5);
  CHECK(env[6] == 0.4);
}
