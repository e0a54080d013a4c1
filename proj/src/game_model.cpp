#include "nlgames/game_model.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "nlgames/errors.hpp"

namespace nlgames {

namespace {

constexpr double kSumTol = 1e-12;
constexpr double kCorrTol = 1e-12;
constexpr double kPruneTol = 1e-15;

void check_open_unit(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw ValidationError(std::string(name) + " must lie strictly in (0,1), got " +
                          std::to_string(v));
  }
}

using WeightMap = std::map<std::uint32_t, double>;

// M_2[p] over subset bitmasks (party 1 = bit 0, subset = primed parties).
WeightMap m2_weights(double p) {
  return {{0b00u, 2.0 * p * p},
          {0b01u, 2.0 * p * (1.0 - p)},
          {0b10u, 2.0 * p * (1.0 - p)},
          {0b11u, -2.0 * (1.0 - p) * (1.0 - p)}};
}

WeightMap prime_swap(const WeightMap& w, int n) {
  const std::uint32_t full = (1u << n) - 1u;
  WeightMap out;
  for (const auto& [s, c] : w) out[full ^ s] = c;
  return out;
}

// One recursion step: from M_n[bias] and its prime-swap partner to
// M_{n+1}[bias]. Exchanging primed and non-primed measurements also
// exchanges the roles of bias and 1-bias, so the partner passed in is
// prime_swap(M_n[1-bias]).
WeightMap extend(const WeightMap& m, const WeightMap& m_primed, int n, double bias) {
  WeightMap out;
  const std::uint32_t bit = 1u << n;
  auto add = [&out](std::uint32_t s, double c) {
    if (c != 0.0) out[s] += c;
  };
  for (const auto& [s, a] : m) {
    add(s, bias * a);
    add(s | bit, (1.0 - bias) * a);
  }
  for (const auto& [s, b] : m_primed) {
    add(s, bias * b);
    add(s | bit, -(1.0 - bias) * b);
  }
  return out;
}

}  // namespace

BiasPair::BiasPair(double p_, double q_) : p(p_), q(q_) {
  check_open_unit(p, "p");
  check_open_unit(q, "q");
}

JointBias::JointBias(const Eigen::Matrix2d& weights) : w(weights) {
  double sum = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      if (w(x, y) < 0.0) {
        throw ValidationError("joint bias entries must be nonnegative");
      }
      sum += w(x, y);
    }
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw ValidationError("joint bias entries must sum to 1, got " + std::to_string(sum));
  }
}

JointBias JointBias::product(double p, double q) {
  const BiasPair b(p, q);  // validates the open-interval constraint
  Eigen::Matrix2d w;
  w << b.p * b.q, b.p * (1.0 - b.q), (1.0 - b.p) * b.q, (1.0 - b.p) * (1.0 - b.q);
  return JointBias(w);
}

CorrelatorTable::CorrelatorTable(const Eigen::Matrix2d& values) : e(values) {
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      if (std::abs(e(x, y)) > 1.0 + kCorrTol) {
        throw ValidationError("correlator entries must lie in [-1,1]");
      }
    }
  }
}

double chsh_score(const BiasPair& bias, const CorrelatorTable& corr) {
  const double p = bias.p;
  const double q = bias.q;
  return p * q * corr(0, 0) + p * (1.0 - q) * corr(0, 1) + (1.0 - p) * q * corr(1, 0) -
         (1.0 - p) * (1.0 - q) * corr(1, 1);
}

double joint_score(const JointBias& bias, const CorrelatorTable& corr) {
  return bias(0, 0) * corr(0, 0) + bias(0, 1) * corr(0, 1) + bias(1, 0) * corr(1, 0) -
         bias(1, 1) * corr(1, 1);
}

double expectation_to_success(double v) {
  if (!(v >= -1.0 && v <= 1.0)) {
    throw ValidationError("expectation value must lie in [-1,1], got " + std::to_string(v));
  }
  return 0.5 * (1.0 + v);
}

CorrelatorExpansion expand_svetlichny(int n, double p) {
  if (n < 2 || n > 16) {
    throw ValidationError("party count must satisfy 2 <= n <= 16, got " + std::to_string(n));
  }
  check_open_unit(p, "p");

  // Track M_k at both bias values; the prime-swap partner of M_k[p] is
  // prime_swap(M_k[1-p]).
  WeightMap at_p = m2_weights(p);
  WeightMap at_1mp = m2_weights(1.0 - p);
  for (int k = 2; k < n; ++k) {
    WeightMap next_p = extend(at_p, prime_swap(at_1mp, k), k, p);
    WeightMap next_1mp = extend(at_1mp, prime_swap(at_p, k), k, 1.0 - p);
    at_p = std::move(next_p);
    at_1mp = std::move(next_1mp);
  }

  CorrelatorExpansion out;
  out.n = n;
  out.p = p;
  if (n % 2 == 0) {
    out.weights = std::move(at_p);
  } else {
    WeightMap partner = prime_swap(at_1mp, n);
    for (const auto& [s, c] : at_p) out.weights[s] += 0.5 * c;
    for (const auto& [s, c] : partner) out.weights[s] += 0.5 * c;
  }
  std::erase_if(out.weights, [](const auto& kv) { return std::abs(kv.second) < kPruneTol; });
  return out;
}

double evaluate_expansion(const CorrelatorExpansion& expansion, std::span<const int> unprimed,
                          std::span<const int> primed) {
  const int n = expansion.n;
  if (static_cast<int>(unprimed.size()) != n || static_cast<int>(primed.size()) != n) {
    throw ValidationError("assignment length must equal the expansion's party count");
  }
  double total = 0.0;
  for (const auto& [s, c] : expansion.weights) {
    double prod = c;
    for (int k = 0; k < n; ++k) {
      prod *= ((s >> k) & 1u) ? primed[k] : unprimed[k];
    }
    total += prod;
  }
  return total;
}

}  // namespace nlgames
