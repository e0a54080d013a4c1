#include "nlgames/classical.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "nlgames/errors.hpp"

namespace nlgames {

namespace {

constexpr int kMaxParties = 12;  // 4^12 ~ 1.7e7 strategies

DeterministicStrategy decode(std::uint64_t index, int parties) {
  DeterministicStrategy s;
  s.outcomes.resize(parties);
  for (int k = 0; k < parties; ++k) {
    s.outcomes[k][0] = (index & 1u) ? -1 : +1;
    s.outcomes[k][1] = (index & 2u) ? -1 : +1;
    index >>= 2;
  }
  return s;
}

// S_n[p] on a deterministic assignment, evaluated through the recursion:
// a_k = M_k[p](c, c') and b_k = M_k[1-p](c', c), the prime-swap partner.
double recursion_score(int n, double p, const DeterministicStrategy& s) {
  auto m2 = [](double bias, int c0, int cp0, int c1, int cp1) {
    return 2.0 * (bias * bias * c0 * c1 + bias * (1.0 - bias) * c0 * cp1 +
                  (1.0 - bias) * bias * cp0 * c1 - (1.0 - bias) * (1.0 - bias) * cp0 * cp1);
  };
  const auto& o = s.outcomes;
  double a = m2(p, o[0][0], o[0][1], o[1][0], o[1][1]);
  double b = m2(1.0 - p, o[0][1], o[0][0], o[1][1], o[1][0]);
  for (int k = 2; k < n; ++k) {
    const double c = o[k][0];
    const double cp = o[k][1];
    const double a_next = p * (a + b) * c + (1.0 - p) * (a - b) * cp;
    const double b_next = p * (b - a) * c + (1.0 - p) * (b + a) * cp;
    a = a_next;
    b = b_next;
  }
  return (n % 2 == 0) ? a : 0.5 * (a + b);
}

}  // namespace

CorrelatorTable DeterministicStrategy::correlators() const {
  if (parties() != 2) {
    throw ValidationError("correlator table requires a two-party strategy");
  }
  Eigen::Matrix2d e;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) e(i, j) = outcomes[0][i] * outcomes[1][j];
  }
  return CorrelatorTable(e);
}

ClassicalResult classical_value_chsh(const JointBias& bias) {
  ClassicalResult best;
  best.value = -std::numeric_limits<double>::infinity();
  for (std::uint64_t idx = 0; idx < 16; ++idx) {
    DeterministicStrategy s = decode(idx, 2);
    const double v = joint_score(bias, s.correlators());
    if (v > best.value) {
      best.value = v;
      best.witness = std::move(s);
    }
  }
  return best;
}

double classical_closed_form(double p, double q) {
  if (!(p >= 0.5 && p < 1.0 && q >= 0.5 && q < 1.0)) {
    throw DomainError("closed form requires 1/2 <= p, q < 1; use enumeration elsewhere");
  }
  return 1.0 - 2.0 * (1.0 - p) * (1.0 - q);
}

double strategy_score(const CorrelatorExpansion& expansion, const DeterministicStrategy& s) {
  if (s.parties() != expansion.n) {
    throw ValidationError("strategy and expansion party counts differ");
  }
  // Sign of each correlator from the -1 outcome parities.
  std::uint32_t neg_unprimed = 0;
  std::uint32_t neg_primed = 0;
  for (int k = 0; k < expansion.n; ++k) {
    if (s.outcomes[k][0] < 0) neg_unprimed |= 1u << k;
    if (s.outcomes[k][1] < 0) neg_primed |= 1u << k;
  }
  const std::uint32_t full = (1u << expansion.n) - 1u;
  double total = 0.0;
  for (const auto& [subset, w] : expansion.weights) {
    const int parity =
        std::popcount(neg_unprimed & (full ^ subset)) + std::popcount(neg_primed & subset);
    total += (parity & 1) ? -w : w;
  }
  return total;
}

ClassicalResult classical_value_svetlichny(int n, double p) {
  if (n < 2 || n > kMaxParties) {
    throw BudgetError("svetlichny enumeration supports 2 <= n <= " +
                      std::to_string(kMaxParties) + " (4^n strategies), got n=" +
                      std::to_string(n));
  }
  // For moderate n score strategies against the expansion directly; beyond
  // that the O(n)-per-strategy recursion keeps the 4^n sweep tractable.
  // Both routes agree to 1e-12 (tested).
  const bool use_expansion = n <= 9;
  const CorrelatorExpansion expansion = expand_svetlichny(n, p);

  ClassicalResult best;
  best.value = -std::numeric_limits<double>::infinity();
  const std::uint64_t count = 1ull << (2 * n);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    DeterministicStrategy s = decode(idx, n);
    const double v = use_expansion ? strategy_score(expansion, s) : recursion_score(n, p, s);
    if (v > best.value) {
      best.value = v;
      best.witness = std::move(s);
    }
  }
  if (!use_expansion) {
    // report the expansion score of the witness so the value is attained
    // exactly under the public scoring function
    best.value = strategy_score(expansion, best.witness);
  }
  return best;
}

}  // namespace nlgames
