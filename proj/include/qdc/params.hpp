#pragma once

#include <complex>

namespace qdc {

using Complex = std::complex<double>;

/// Physical rates of the driven qubit + Lorentzian cavity, in units of gamma.
/// Times everywhere in the library are dimensionless gamma*t.
struct SystemParams {
  double gamma = 1.0;       // decay-rate scale
  double lambda = 0.01;     // cavity spectral width
  double omega_rabi = 0.0;  // qubit / classical-field coupling
  double delta_qc = 0.0;    // qubit / classical-field detuning
  double delta_cav = 0.0;   // qubit / cavity-center detuning
  double theta = 0.0;       // initial superposition angle, [0, pi/2]

  bool operator==(const SystemParams&) const = default;
};

struct Warnings {
  bool rwa_regime = false;               // Omega > 10 gamma or |Delta| > 10 gamma
  bool outside_strong_coupling = false;  // lambda >= gamma
  bool omega_d_zero = false;             // Omega == 0 and Delta == 0
};

/// Dressed-state and closed-form-solution constants.
struct DerivedParams {
  double gamma = 1.0;
  double lambda = 0.0;
  double eta = 0.0;      // mixing angle, atan2(2 Omega, Delta)
  double omega_d = 0.0;  // dressed frequency sqrt(Delta^2 + 4 Omega^2)
  Complex m_const;       // lambda - i (omega_d + delta_cav - Delta)
  Complex f_const;       // principal sqrt(4 M^2 - 2 gamma lambda (1 + cos eta)^2)
  double tau_r = 0.0;    // reservoir correlation time 1/lambda
  double tau_q = 0.0;    // qubit relaxation time ~ 1/gamma
  Warnings warnings;

  /// cos^4(eta/2), the dressed coupling reduction.
  double coupling_factor() const;
  /// gamma*lambda/2, the kernel amplitude.
  double kernel_strength() const { return 0.5 * gamma * lambda; }
};

/// Throws Error(kValidation) on gamma <= 0, lambda <= 0, omega_rabi < 0,
/// theta outside [0, pi/2] or non-finite input.
void validate(const SystemParams& params);

DerivedParams derive(const SystemParams& params);

struct SpectralDensity {
  double center_offset = 0.0;  // delta
  double width = 0.01;         // lambda
  double strength = 1.0;       // gamma
};

/// Lorentzian J as a function of omega_offset = omega_0 - omega_k.
double spectral_density(const SpectralDensity& sd, double omega_offset);

/// Memory kernel (gamma lambda / 2) exp(-M dt).
Complex kernel(const DerivedParams& dp, double dt);

}  // namespace qdc
