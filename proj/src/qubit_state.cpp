#include "qdc/qubit_state.hpp"

#include <cmath>

#include "qdc/amplitude.hpp"
#include "qdc/error.hpp"

namespace qdc {

QubitState build_unchecked(const Eigen::Matrix2cd& rho) { return QubitState(rho); }

namespace {

struct HermitianEigen2 {
  double lo;
  double hi;
};

// Closed-form spectrum of a 2x2 Hermitian matrix.
HermitianEigen2 hermitian_eigenvalues(const Eigen::Matrix2cd& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double r = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  return {mean - r, mean + r};
}

}  // namespace

QubitState QubitState::make(const Eigen::Matrix2cd& rho) {
  if (!rho.allFinite()) throw Error(ErrorCode::kValidation, "state has non-finite entries");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > kStateTolerance) {
    throw Error(ErrorCode::kValidation, "state trace differs from 1");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kStateTolerance) {
    throw Error(ErrorCode::kValidation, "state is not Hermitian");
  }
  Eigen::Matrix2cd h = 0.5 * (rho + rho.adjoint());
  const HermitianEigen2 ev = hermitian_eigenvalues(h);
  if (ev.lo < -kStateTolerance) {
    throw Error(ErrorCode::kValidation, "state is not positive semidefinite");
  }
  if (ev.lo < 0.0) {
    // Shrink the coherence just enough to bring the small eigenvalue to 0.
    const double p = h(0, 0).real();
    const double max_c = std::sqrt(std::max(0.0, p * (1.0 - p)));
    const double c = std::abs(h(0, 1));
    if (c > max_c && c > 0.0) {
      h(0, 1) *= max_c / c;
      h(1, 0) = std::conj(h(0, 1));
    }
  }
  return QubitState(h);
}

QubitState QubitState::pure(Complex c_a, Complex c_b) {
  const double n = std::sqrt(std::norm(c_a) + std::norm(c_b));
  if (!(n > 0.0)) throw Error(ErrorCode::kValidation, "zero state vector");
  Eigen::Vector2cd v(c_a / n, c_b / n);
  return QubitState(v * v.adjoint());
}

QubitState QubitState::from_bloch(double x, double y, double z) {
  if (std::sqrt(x * x + y * y + z * z) > 1.0 + kStateTolerance) {
    throw Error(ErrorCode::kValidation, "Bloch vector longer than 1");
  }
  Eigen::Matrix2cd rho;
  rho << 0.5 * (1.0 + z), 0.5 * Complex(x, -y), 0.5 * Complex(x, y), 0.5 * (1.0 - z);
  return make(rho);
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector BlochVector::from_state(const QubitState& s) {
  const Complex ab = s.rho_ab();
  return {2.0 * ab.real(), -2.0 * ab.imag(), s.rho_aa() - s.rho_bb()};
}

QubitState evolve_superposition(const DerivedParams& dp, double theta, double t) {
  const Complex a = amplitude(dp, t);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double pop = c2 * std::norm(a);
  const Complex coh = 0.5 * std::sin(2.0 * theta) * a;
  Eigen::Matrix2cd rho;
  rho << pop, coh, std::conj(coh), 1.0 - pop;
  return build_unchecked(rho);
}

QubitState apply_channel(const DerivedParams& dp, const QubitState& initial,
                         double t) {
  const Complex a = amplitude(dp, t);
  const double pop = std::norm(a) * initial.rho_aa();
  const Complex coh = a * initial.rho_ab();
  Eigen::Matrix2cd rho;
  rho << pop, coh, std::conj(coh), 1.0 - pop;
  return build_unchecked(rho);
}

double coherence_l1(const QubitState& state) { return 2.0 * std::abs(state.rho_ab()); }

double trace_distance(const QubitState& s1, const QubitState& s2) {
  const HermitianEigen2 ev = hermitian_eigenvalues(s1.rho() - s2.rho());
  return 0.5 * (std::abs(ev.lo) + std::abs(ev.hi));
}

}  // namespace qdc
