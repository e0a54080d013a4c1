#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

#include "nlgames/classical.hpp"
#include "nlgames/game_model.hpp"
#include "nlgames/optimize.hpp"

namespace nlgames {

/// +-1 qubit observable in the X-Z plane: cos(theta) X + sin(theta) Z.
/// Any such matrix squares to the identity.
struct PlanarObservable {
  double theta = 0.0;

  Eigen::Matrix2cd matrix() const;
};

/// Pure state on n qubits as a length-2^n amplitude vector; party k occupies
/// bit k-1 of the basis index. Must be normalized within 1e-12.
struct PureState {
  Eigen::VectorXcd amplitudes;

  explicit PureState(Eigen::VectorXcd amps);
  int parties() const;

  /// (|0...0> + |1...1>)/sqrt(2) on n qubits; n=2 gives the Bell state the
  /// explicit CHSH construction uses.
  static PureState ghz(int parties);
  /// cos(gamma)|00> + sin(gamma)|11>, the Schmidt form the oracle searches.
  static PureState schmidt(double gamma);
};

/// <psi| O_1 x ... x O_n |psi> for one 2x2 operator per party.
/// Correlators of +-1 observables land in [-1,1]; tiny rounding excess is
/// clamped.
double expectation(const PureState& state, std::span<const Eigen::Matrix2cd> ops);

/// Same, choosing each party's operator out of a shared pool:
/// assignment[k] indexes the observable party k+1 measures.
double expectation(const PureState& state, std::span<const PlanarObservable> pool,
                   std::span<const int> assignment);

/// The anticommutator expectation alpha = <psi| I x (B1 B2 + B2 B1) |psi>
/// on a two-qubit state (Bob = party 2). Always in [-2, 2].
double compute_alpha(const PlanarObservable& b1, const PlanarObservable& b2,
                     const PureState& state);

/// Quantum bound of the biased CHSH game on 1/2 <= p, q < 1: the alpha-form
/// bound evaluated at alpha_max. Equals the classical value 1-2(1-p)(1-q)
/// when pq >= 1/2 and sqrt(2) sqrt(q^2+(1-q)^2) sqrt(p^2+(1-p)^2) otherwise.
double tsirelson_biased(double p, double q);

enum class Region { NoAdvantage, Advantage };

/// Region classification with the quadrant fold applied:
/// r = max(p,1-p), s = max(q,1-q); quantum strategies beat classical ones
/// exactly when r s < 1/2 (boundary counts as NoAdvantage).
struct RegionTag {
  Region region = Region::NoAdvantage;
  double r = 0.0;
  double s = 0.0;

  bool advantage() const { return region == Region::Advantage; }
};

RegionTag classify_region(double p, double q);

/// Quantum value of the biased CHSH game anywhere on (0,1)^2, by folding
/// into the upper quadrant. The fold is an explicit observable sign-flip
/// symmetry, verified in the test suite rather than assumed.
double quantum_value_chsh(double p, double q);

/// The explicit optimal construction for Region 2 (pq < 1/2, p,q >= 1/2):
/// planar observables around cos(beta) and the maximally entangled state.
struct ChshStrategy {
  PlanarObservable a1, a2, b1, b2;
  PureState state;
  double cos_beta = 0.0;

  CorrelatorTable correlators() const;
};

ChshStrategy optimal_strategy(double p, double q);

/// The joint-bias no-advantage condition: cells sorted descending, then
/// lhs = 1/P00 + 1/P01 + 1/P10 - 1/P11. flag is lhs <= 0 (within tolerance).
struct JointCondition {
  bool no_advantage = false;
  double lhs = 0.0;
};

JointCondition joint_no_advantage(const JointBias& bias);

/// Numerical lower bound on the joint-bias quantum value: multi-start search
/// over four planar observable angles and a Schmidt angle. Agreement with the
/// closed forms where those exist is part of the acceptance suite.
struct JointOracleResult {
  double value = 0.0;
  double a1 = 0.0, a2 = 0.0, b1 = 0.0, b2 = 0.0;  // observable angles
  double gamma = 0.0;                              // state cos(g)|00>+sin(g)|11>
  bool converged = false;
  int starts_used = 0;
};

JointOracleResult quantum_value_joint_oracle(const JointBias& bias,
                                             const OptimizerConfig& cfg = {});

}  // namespace nlgames
