#pragma once

#include <Eigen/Dense>

#include "qdc/params.hpp"

namespace qdc {

inline constexpr double kStateTolerance = 1e-12;

/// Density matrix in the dressed basis {|A>, |B>}. Construction goes through
/// `make` (validating) or the evolution functions.
class QubitState {
 public:
  /// Validates trace, Hermiticity and positivity to kStateTolerance; tiny
  /// negative eigenvalues inside the tolerance are clamped away.
  static QubitState make(const Eigen::Matrix2cd& rho);
  static QubitState pure(Complex c_a, Complex c_b);
  static QubitState from_bloch(double x, double y, double z);

  const Eigen::Matrix2cd& rho() const { return rho_; }
  double rho_aa() const { return rho_(0, 0).real(); }
  double rho_bb() const { return rho_(1, 1).real(); }
  Complex rho_ab() const { return rho_(0, 1); }

 private:
  explicit QubitState(const Eigen::Matrix2cd& rho) : rho_(rho) {}
  friend QubitState build_unchecked(const Eigen::Matrix2cd&);
  Eigen::Matrix2cd rho_;
};

/// Bloch coordinates with rho = (1 + x sx + y sy + z sz) / 2, sz = |A><A| - |B><B|.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  BlochVector operator-() const { return {-x, -y, -z}; }
  static BlochVector from_state(const QubitState& s);
};

/// rho(t) for the initial state cos(theta)|A> + sin(theta)|B>.
QubitState evolve_superposition(const DerivedParams& dp, double theta, double t);

/// Linear extension of the evolution to any initial state:
/// rho_AA -> |A|^2 rho_AA, rho_AB -> A rho_AB, trace preserved.
QubitState apply_channel(const DerivedParams& dp, const QubitState& initial,
                         double t);

/// l1-norm of coherence, 2 |rho_AB|.
double coherence_l1(const QubitState& state);

/// Half the sum of |eigenvalues| of rho1 - rho2.
double trace_distance(const QubitState& s1, const QubitState& s2);

}  // namespace qdc
