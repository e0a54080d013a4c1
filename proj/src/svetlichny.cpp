#include "nlgames/svetlichny.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "nlgames/errors.hpp"
#include "nlgames/quantum_chsh.hpp"

namespace nlgames {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxStatevectorParties = 12;

double canonical_angle(double a) {
  if (!std::isfinite(a)) throw ValidationError("angles must be finite");
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

// cos(theta) X + sin(theta) Y
Eigen::Matrix2cd xy_observable(double theta) {
  Eigen::Matrix2cd m;
  const std::complex<double> phase(std::cos(theta), std::sin(theta));
  m << 0.0, std::conj(phase), phase, 0.0;
  return m;
}

void check_party_count(const CorrelatorExpansion& expansion, const AngleSet& angles) {
  if (expansion.n != angles.parties()) {
    throw ValidationError("expansion has " + std::to_string(expansion.n) +
                          " parties but the angle set has " +
                          std::to_string(angles.parties()));
  }
}

}  // namespace

AngleSet::AngleSet(double phi0_, std::vector<double> phi_) : phi0(canonical_angle(phi0_)) {
  phi.reserve(phi_.size());
  for (double a : phi_) phi.push_back(canonical_angle(a));
}

double ghz_objective(const CorrelatorExpansion& expansion, const AngleSet& angles) {
  check_party_count(expansion, angles);
  double total = 0.0;
  for (const auto& [subset, w] : expansion.weights) {
    double angle = angles.phi0;
    for (int k = 0; k < expansion.n; ++k) {
      if ((subset >> k) & 1u) angle += angles.phi[k];
    }
    total += w * std::cos(angle);
  }
  return total;
}

double ghz_objective_statevector(const CorrelatorExpansion& expansion, const AngleSet& angles) {
  check_party_count(expansion, angles);
  const int n = expansion.n;
  if (n > kMaxStatevectorParties) {
    throw BudgetError("state-vector evaluation supports n <= " +
                      std::to_string(kMaxStatevectorParties) + ", got n=" + std::to_string(n));
  }
  const PureState ghz = PureState::ghz(n);
  const double base = angles.phi0 / n;
  double total = 0.0;
  std::vector<Eigen::Matrix2cd> ops(n);
  for (const auto& [subset, w] : expansion.weights) {
    for (int k = 0; k < n; ++k) {
      const bool primed = (subset >> k) & 1u;
      ops[k] = xy_observable(primed ? angles.phi[k] + base : base);
    }
    total += w * expectation(ghz, ops);
  }
  return total;
}

OptResult quantum_value_svetlichny(int n, double p, const OptimizerConfig& cfg) {
  if (n < 2 || n > kMaxStatevectorParties) {
    throw BudgetError("quantum_value_svetlichny supports 2 <= n <= " +
                      std::to_string(kMaxStatevectorParties) + ", got n=" + std::to_string(n));
  }
  const CorrelatorExpansion expansion = expand_svetlichny(n, p);

  auto objective = [&expansion, n](const Eigen::VectorXd& x) {
    double total = 0.0;
    for (const auto& [subset, w] : expansion.weights) {
      double angle = x(0);
      for (int k = 0; k < n; ++k) {
        if ((subset >> k) & 1u) angle += x(k + 1);
      }
      total += w * std::cos(angle);
    }
    return total;
  };

  const Eigen::VectorXd lower = Eigen::VectorXd::Zero(n + 1);
  const Eigen::VectorXd upper = Eigen::VectorXd::Constant(n + 1, kTwoPi);
  const SearchResult best = maximize_multistart(objective, lower, upper, cfg);

  OptResult out;
  std::vector<double> phis(best.x.data() + 1, best.x.data() + n + 1);
  out.angles = AngleSet(best.x(0), std::move(phis));
  out.value = best.value;
  out.starts_used = best.starts_used;
  out.converged = best.converged;
  return out;
}

}  // namespace nlgames
