#include "qdc/geometric_phase.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "qdc/amplitude.hpp"
#include "qdc/error.hpp"

namespace qdc {

EigenSystem eigensystem(const DerivedParams& dp, double theta, double t) {
  const Complex a = amplitude(dp, t);
  const double a2 = std::norm(a);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2t = std::sin(2.0 * theta);
  const double pop = a2 * c2;                       // rho_AA
  const double coh2 = 0.25 * a2 * s2t * s2t;        // |rho_AB|^2
  const double split = std::sqrt(a2 * s2t * s2t + (2.0 * pop - 1.0) * (2.0 * pop - 1.0));

  EigenSystem e;
  e.eps_plus = 0.5 * (1.0 + split);
  e.eps_minus = 0.5 * (1.0 - split);
  e.degenerate = split < 1e-10;
  e.coherence_phase = s2t != 0.0 ? std::arg(a) : 0.0;

  // x = rho_AA - eps_minus. Below half filling use
  // (rho_AA - eps_minus)(eps_plus - rho_AA) = |rho_AB|^2 to avoid cancellation.
  const double skew = 2.0 * pop - 1.0;
  const double x = skew >= 0.0 ? 0.5 * (skew + split)
                               : (split - skew > 0.0 ? coh2 / (0.5 * (split - skew)) : 0.0);
  const double norm = std::sqrt(x * x + coh2);
  if (norm > 1e-300) {
    e.cos_theta_big = std::clamp(x / norm, -1.0, 1.0);
    e.sin_theta_big = std::sqrt(coh2) / norm;
  } else {
    // sin(2 theta) = 0 or A = 0: rho is diagonal and the "+" branch is the
    // more populated basis state.
    const bool a_wins = pop >= 1.0 - pop;
    e.cos_theta_big = a_wins ? 1.0 : 0.0;
    e.sin_theta_big = a_wins ? 0.0 : 1.0;
  }
  return e;
}

GeometricPhaseResult geometric_phase(const DerivedParams& dp, double theta,
                                     double quad_tol, const NodeObserver& observer) {
  if (dp.omega_d == 0.0) {
    throw Error(ErrorCode::kOmegaDZero,
                "geometric phase needs omega_D > 0 (Omega > 0 or Delta != 0)");
  }
  if (!(quad_tol > 0.0)) throw Error(ErrorCode::kValidation, "quad_tol must be > 0");

  const double period = 2.0 * std::numbers::pi / dp.omega_d;
  GeometricPhaseResult result;
  auto integrand = [&](double t) {
    const EigenSystem e = eigensystem(dp, theta, t);
    if (e.degenerate) result.degenerate_nodes = true;
    if (observer) observer(t, e);
    return e.cos_theta_big * e.cos_theta_big;
  };

  // Panels sized to the slowest of the amplitude's time scales keep each
  // adaptive call on a smooth stretch.
  const double scale = std::max({std::abs(dp.m_const), std::abs(dp.f_const) / 4.0, 1e-3});
  const int panels = std::clamp(static_cast<int>(std::ceil(period * scale / 2.0)), 8, 4096);
  const double width = period / panels;
  // Relative tolerance on each panel; the integrand is bounded by 1, so the
  // absolute error of omega_D * integral stays below quad_tol.
  const double rel_tol = std::max(quad_tol / (2.0 * std::numbers::pi), 1e-15);

  using boost::math::quadrature::gauss_kronrod;
  double integral = 0.0;
  double error = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = i * width;
    const double hi = (i + 1 == panels) ? period : lo + width;
    double panel_error = 0.0;
    integral += gauss_kronrod<double, 15>::integrate(integrand, lo, hi, 30, rel_tol,
                                                     &panel_error);
    error += panel_error;
  }
  result.phase = dp.omega_d * integral;
  result.error_estimate = dp.omega_d * error;
  return result;
}

}  // namespace qdc
