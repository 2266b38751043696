#pragma once

#include <string>
#include <vector>

namespace qdc {

struct CheckLine {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
};

/// Oracle-equivalence suite behind `qdcsim check`: closed-form amplitude
/// against the ODE integration on the 3x3x3 (lambda, Omega, Delta) grid,
/// F-branch independence, analytic vs finite-difference decay rate, the
/// Lorentzian total weight against kernel(0), and the two witness routes.
std::vector<CheckLine> run_checks();

}  // namespace qdc
