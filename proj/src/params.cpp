#include "qdc/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qdc/error.hpp"

namespace qdc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kIntegrationFailure: return "integration_failure";
    case ErrorCode::kPole: return "pole";
    case ErrorCode::kOmegaDZero: return "omega_d_zero";
    case ErrorCode::kUnresolvedBracket: return "unresolved_bracket";
    case ErrorCode::kTruncation: return "truncation";
    case ErrorCode::kUsage: return "usage";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kValidation, what);
}

}  // namespace

void validate(const SystemParams& p) {
  require(std::isfinite(p.gamma) && std::isfinite(p.lambda) &&
              std::isfinite(p.omega_rabi) && std::isfinite(p.delta_qc) &&
              std::isfinite(p.delta_cav) && std::isfinite(p.theta),
          "parameters must be finite");
  require(p.gamma > 0.0, "gamma must be > 0");
  require(p.lambda > 0.0, "lambda must be > 0");
  require(p.omega_rabi >= 0.0, "omega must be >= 0");
  require(p.theta >= 0.0 && p.theta <= std::numbers::pi / 2 + 1e-15,
          "theta must lie in [0, pi/2]");
}

double DerivedParams::coupling_factor() const {
  const double c = std::cos(0.5 * eta);
  return c * c * c * c;
}

DerivedParams derive(const SystemParams& p) {
  validate(p);
  DerivedParams d;
  d.gamma = p.gamma;
  d.lambda = p.lambda;
  // atan2 keeps Delta -> 0+ continuous and gives pi/2 at Delta = 0, Omega > 0.
  d.eta = std::atan2(2.0 * p.omega_rabi, p.delta_qc);
  d.omega_d = std::hypot(p.delta_qc, 2.0 * p.omega_rabi);
  d.m_const = Complex(p.lambda, -(d.omega_d + p.delta_cav - p.delta_qc));
  const double one_plus_cos = 1.0 + std::cos(d.eta);
  d.f_const = std::sqrt(4.0 * d.m_const * d.m_const -
                        2.0 * p.gamma * p.lambda * one_plus_cos * one_plus_cos);
  d.tau_r = 1.0 / p.lambda;
  d.tau_q = 1.0 / p.gamma;
  d.warnings.rwa_regime = p.omega_rabi > 10.0 * p.gamma ||
                          std::abs(p.delta_qc) > 10.0 * p.gamma;
  d.warnings.outside_strong_coupling = p.lambda >= p.gamma;
  d.warnings.omega_d_zero = d.omega_d == 0.0;
  return d;
}

double spectral_density(const SpectralDensity& sd, double omega_offset) {
  if (!(sd.width > 0.0)) {
    throw Error(ErrorCode::kValidation, "spectral width must be > 0");
  }
  const double x = omega_offset - sd.center_offset;
  return sd.strength * sd.width * sd.width /
         (2.0 * std::numbers::pi * (x * x + sd.width * sd.width));
}

Complex kernel(const DerivedParams& dp, double dt) {
  if (dt < 0.0) throw Error(ErrorCode::kValidation, "kernel needs dt >= 0");
  return dp.kernel_strength() * std::exp(-dp.m_const * dt);
}

}  // namespace qdc
