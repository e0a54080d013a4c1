#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <span>

namespace nlgames {

/// Independent setting biases of a two-party game: Alice measures her first
/// observable with probability p, Bob his first with probability q.
/// Endpoints are rejected; at p or q in {0,1} the game degenerates to a
/// single-setting one with trivial value 1.
struct BiasPair {
  double p;
  double q;

  BiasPair(double p_, double q_);
};

/// Joint distribution over the four setting pairs, P(i,j) = P(x=i, y=j).
/// Entries must be nonnegative and sum to 1 within 1e-12.
struct JointBias {
  Eigen::Matrix2d w;

  explicit JointBias(const Eigen::Matrix2d& weights);
  static JointBias product(double p, double q);
  static JointBias product(const BiasPair& b) { return product(b.p, b.q); }

  double operator()(int x, int y) const { return w(x, y); }
};

/// Conditional expectation values E(i,j) = E(A_{i+1} B_{j+1}) of the +-1
/// outcome product given the setting pair. Each entry must lie in [-1, 1].
struct CorrelatorTable {
  Eigen::Matrix2d e;

  explicit CorrelatorTable(const Eigen::Matrix2d& values);

  double operator()(int x, int y) const { return e(x, y); }
};

/// A multiparty correlator polynomial written as a sum of full correlators:
/// weights maps each subset of parties measuring the primed observable
/// (bitmask, party 1 at bit 0) to its signed coefficient. Coefficients with
/// magnitude below 1e-15 are pruned.
struct CorrelatorExpansion {
  int n = 0;
  double p = 0.0;  // bias the expansion was built from; kept for serialization
  std::map<std::uint32_t, double> weights;
};

/// Biased CHSH score, Eq.-form
///   pq E00 + p(1-q) E01 + (1-p)q E10 - (1-p)(1-q) E11.
double chsh_score(const BiasPair& bias, const CorrelatorTable& corr);

/// Score under an arbitrary joint setting distribution,
///   P00 E00 + P01 E01 + P10 E10 - P11 E11.
/// Coincides with chsh_score when the bias factorizes.
double joint_score(const JointBias& bias, const CorrelatorTable& corr);

/// Maps an expectation-form score v in [-1,1] to the game's win probability
/// (1+v)/2.
double expectation_to_success(double v);

/// Expands the n-party biased Svetlichny expression S_n[p] into correlator
/// coefficients via the M_2 / M_{n+1} recursion (odd n averages M_n with its
/// prime-swapped partner). Supported for 2 <= n <= 16.
CorrelatorExpansion expand_svetlichny(int n, double p);

/// Evaluates an expansion on a deterministic assignment: unprimed[k] and
/// primed[k] are party k+1's +-1 outcomes for its two settings.
double evaluate_expansion(const CorrelatorExpansion& expansion,
                          std::span<const int> unprimed,
                          std::span<const int> primed);

}  // namespace nlgames
