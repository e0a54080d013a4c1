#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "nlgames/game_model.hpp"

namespace nlgames {

/// Two-party binary behavior P(ab|xy), stored as a 4x4 table with the
/// setting pair (x,y) on rows and the outcome pair (a,b) on columns, both in
/// row-major order 00,01,10,11. Construction enforces normalization per
/// setting and the non-signaling marginals, each within 1e-12.
struct BehaviorTable {
  Eigen::Matrix4d p;

  explicit BehaviorTable(const Eigen::Matrix4d& table);

  double operator()(int x, int y, int a, int b) const { return p(2 * x + y, 2 * a + b); }
  /// E(x,y) = sum_ab (-1)^(a xor b) P(ab|xy).
  CorrelatorTable correlators() const;
};

/// The Popescu-Rohrlich box: P(ab|xy) = 1/2 when a xor b = xy, else 0. Wins
/// the CHSH game with certainty for every bias.
BehaviorTable pr_box();

/// The 24 vertices of the two-party binary non-signaling polytope: the
/// canonical PR box and its 7 relabelings, then the 16 local deterministic
/// boxes.
std::vector<BehaviorTable> ns_vertices();

struct NsResult {
  double value = 0.0;
  BehaviorTable witness;
};

/// Maximum game score over the polytope (the score is linear in the
/// behavior, so the vertex maximum is the polytope maximum). Expectation
/// form; equals 1 for every valid bias.
NsResult ns_value(const JointBias& bias);

/// Behavior with uniform marginals realizing a correlator table:
/// P(ab|xy) = (1 + (-1)^(a xor b) E_xy)/4. Valid for the maximally
/// entangled strategies used here.
BehaviorTable behavior_from_correlators(const CorrelatorTable& corr);

/// Monte Carlo transcript of playing a behavior against a bias. Conditional
/// correlator estimates are empty for settings that never occurred.
struct SimulationReport {
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;
  Eigen::Matrix<std::int64_t, 2, 2> counts;               // rounds per setting pair
  std::array<std::array<std::optional<double>, 2>, 2> conditional;
  double empirical_score = 0.0;
};

/// Plays `rounds` i.i.d. rounds: one engine draw picks (x,y) by inverse CDF
/// over the bias cells in row-major order, a second draw picks (a,b) from
/// P(..|xy) the same way. The draw order is the bit-stream contract; counts
/// are reproducible from the seed.
SimulationReport simulate_rounds(const BehaviorTable& behavior, const JointBias& bias,
                                 std::uint64_t rounds, std::uint64_t seed);

}  // namespace nlgames
