#pragma once

#include <vector>

#include "nlgames/game_model.hpp"
#include "nlgames/optimize.hpp"

namespace nlgames {

/// GHZ-strategy angles for an n-party game: every party's unprimed observable
/// sits at phi0/n in the X-Y plane, party k's primed observable at
/// phi[k-1] + phi0/n. Angles are stored canonically in [0, 2pi).
struct AngleSet {
  double phi0 = 0.0;
  std::vector<double> phi;

  AngleSet() = default;
  AngleSet(double phi0_, std::vector<double> phi_);
  int parties() const { return static_cast<int>(phi.size()); }
};

/// Correlator value of the GHZ strategy against an expansion, via the closed
/// form sum_S w_S cos(phi0 + sum_{k in S} phi_k).
double ghz_objective(const CorrelatorExpansion& expansion, const AngleSet& angles);

/// Same value through a dense 2^n state-vector evaluation of every
/// correlator; the independent cross-check of the closed form. n <= 12.
double ghz_objective_statevector(const CorrelatorExpansion& expansion, const AngleSet& angles);

struct OptResult {
  double value = 0.0;
  AngleSet angles;
  int starts_used = 0;
  bool converged = false;
};

/// Best-found quantum value of S_n[p] by multi-start Nelder-Mead over the
/// n+1 angles. A lower bound on the quantum maximum; it reproduces every
/// known closed form in the test suite.
OptResult quantum_value_svetlichny(int n, double p, const OptimizerConfig& cfg = {});

}  // namespace nlgames
