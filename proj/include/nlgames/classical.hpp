#pragma once

#include <vector>

#include "nlgames/game_model.hpp"

namespace nlgames {

/// A local deterministic strategy: per party, the +-1 outcome assigned to the
/// unprimed and to the primed setting.
struct DeterministicStrategy {
  std::vector<std::array<int, 2>> outcomes;

  int parties() const { return static_cast<int>(outcomes.size()); }
  /// Correlator table of a two-party strategy, E(i,j) = a_{i+1} b_{j+1}.
  CorrelatorTable correlators() const;
};

struct ClassicalResult {
  double value = 0.0;
  DeterministicStrategy witness;
};

/// Exact classical optimum of the joint-bias CHSH game by enumeration of all
/// 16 deterministic strategies. The witness is the first maximizer in
/// lexicographic order (party 1's unprimed outcome at the lowest bit,
/// bit value 0 meaning +1).
ClassicalResult classical_value_chsh(const JointBias& bias);

/// Closed-form classical maximum 1 - 2(1-p)(1-q), valid on
/// 1/2 <= p, q < 1 only; other quadrants must use enumeration.
double classical_closed_form(double p, double q);

/// Exact classical optimum of S_n[p] over all 4^n deterministic strategies.
/// Capped at n <= 12.
ClassicalResult classical_value_svetlichny(int n, double p);

/// Score of one deterministic strategy against an expansion.
double strategy_score(const CorrelatorExpansion& expansion,
                      const DeterministicStrategy& strategy);

}  // namespace nlgames
