#include "nlgames/nonsignaling.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "nlgames/errors.hpp"
#include "nlgames/rng.hpp"

namespace nlgames {

namespace {

constexpr double kBehaviorTol = 1e-12;

}  // namespace

BehaviorTable::BehaviorTable(const Eigen::Matrix4d& table) : p(table) {
  for (int r = 0; r < 4; ++r) {
    double sum = 0.0;
    for (int c = 0; c < 4; ++c) {
      if (p(r, c) < -kBehaviorTol) {
        throw ValidationError("behavior entries must be nonnegative");
      }
      sum += p(r, c);
    }
    if (std::abs(sum - 1.0) > kBehaviorTol) {
      throw ValidationError("behavior row " + std::to_string(r) + " must sum to 1");
    }
  }
  // Alice's marginal may not depend on y, Bob's not on x.
  for (int a = 0; a < 2; ++a) {
    for (int x = 0; x < 2; ++x) {
      const double m0 = (*this)(x, 0, a, 0) + (*this)(x, 0, a, 1);
      const double m1 = (*this)(x, 1, a, 0) + (*this)(x, 1, a, 1);
      if (std::abs(m0 - m1) > kBehaviorTol) {
        throw ValidationError("behavior signals from Bob to Alice");
      }
    }
    for (int y = 0; y < 2; ++y) {
      const double m0 = (*this)(0, y, 0, a) + (*this)(0, y, 1, a);
      const double m1 = (*this)(1, y, 0, a) + (*this)(1, y, 1, a);
      if (std::abs(m0 - m1) > kBehaviorTol) {
        throw ValidationError("behavior signals from Alice to Bob");
      }
    }
  }
}

CorrelatorTable BehaviorTable::correlators() const {
  Eigen::Matrix2d e;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      double v = 0.0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          v += (((a ^ b) & 1) ? -1.0 : 1.0) * (*this)(x, y, a, b);
        }
      }
      e(x, y) = v;
    }
  }
  return CorrelatorTable(e);
}

BehaviorTable pr_box() {
  Eigen::Matrix4d t = Eigen::Matrix4d::Zero();
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          if ((a ^ b) == (x & y)) t(2 * x + y, 2 * a + b) = 0.5;
        }
      }
    }
  }
  return BehaviorTable(t);
}

std::vector<BehaviorTable> ns_vertices() {
  std::vector<BehaviorTable> out;
  out.reserve(24);
  // 8 PR-box relabelings: a xor b = xy xor (alpha x) xor (beta y) xor gamma.
  // (alpha,beta,gamma) = (0,0,0) is the canonical box and comes first.
  for (int alpha = 0; alpha < 2; ++alpha) {
    for (int beta = 0; beta < 2; ++beta) {
      for (int gamma = 0; gamma < 2; ++gamma) {
        Eigen::Matrix4d t = Eigen::Matrix4d::Zero();
        for (int x = 0; x < 2; ++x) {
          for (int y = 0; y < 2; ++y) {
            const int target = (x & y) ^ (alpha & x) ^ (beta & y) ^ gamma;
            for (int a = 0; a < 2; ++a) {
              const int b = a ^ target;
              t(2 * x + y, 2 * a + b) = 0.5;
            }
          }
        }
        out.emplace_back(t);
      }
    }
  }
  // 16 local deterministic boxes: a = f(x), b = g(y).
  for (int f0 = 0; f0 < 2; ++f0) {
    for (int f1 = 0; f1 < 2; ++f1) {
      for (int g0 = 0; g0 < 2; ++g0) {
        for (int g1 = 0; g1 < 2; ++g1) {
          Eigen::Matrix4d t = Eigen::Matrix4d::Zero();
          for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
              const int a = x ? f1 : f0;
              const int b = y ? g1 : g0;
              t(2 * x + y, 2 * a + b) = 1.0;
            }
          }
          out.emplace_back(t);
        }
      }
    }
  }
  return out;
}

NsResult ns_value(const JointBias& bias) {
  const std::vector<BehaviorTable> vertices = ns_vertices();
  NsResult best{.value = -std::numeric_limits<double>::infinity(), .witness = vertices.front()};
  for (const BehaviorTable& v : vertices) {
    const double score = joint_score(bias, v.correlators());
    if (score > best.value) {
      best.value = score;
      best.witness = v;
    }
  }
  return best;
}

BehaviorTable behavior_from_correlators(const CorrelatorTable& corr) {
  Eigen::Matrix4d t;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const double sign = ((a ^ b) & 1) ? -1.0 : 1.0;
          t(2 * x + y, 2 * a + b) = 0.25 * (1.0 + sign * corr(x, y));
        }
      }
    }
  }
  return BehaviorTable(t);
}

SimulationReport simulate_rounds(const BehaviorTable& behavior, const JointBias& bias,
                                 std::uint64_t rounds, std::uint64_t seed) {
  if (rounds < 1) throw ValidationError("need at least one round");

  SimulationReport report;
  report.rounds = rounds;
  report.seed = seed;
  report.counts.setZero();
  Eigen::Matrix<std::int64_t, 2, 2> product_sums;
  product_sums.setZero();

  std::mt19937_64 eng(seed);
  auto pick_cell = [](double u, const double cells[4]) {
    double cum = 0.0;
    for (int c = 0; c < 3; ++c) {
      cum += cells[c];
      if (u < cum) return c;
    }
    return 3;  // absorbs rounding of the cumulative sum
  };

  const double bias_cells[4] = {bias(0, 0), bias(0, 1), bias(1, 0), bias(1, 1)};
  std::int64_t score_sum = 0;
  for (std::uint64_t r = 0; r < rounds; ++r) {
    const int xy = pick_cell(uniform_double(eng), bias_cells);
    const int x = xy >> 1;
    const int y = xy & 1;
    const double outcome_cells[4] = {behavior(x, y, 0, 0), behavior(x, y, 0, 1),
                                     behavior(x, y, 1, 0), behavior(x, y, 1, 1)};
    const int ab = pick_cell(uniform_double(eng), outcome_cells);
    const int product = ((ab >> 1) ^ (ab & 1)) ? -1 : +1;  // (-1)^(a xor b)

    report.counts(x, y) += 1;
    product_sums(x, y) += product;
    score_sum += (x == 1 && y == 1) ? -product : product;
  }

  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      if (report.counts(x, y) > 0) {
        report.conditional[x][y] =
            static_cast<double>(product_sums(x, y)) / static_cast<double>(report.counts(x, y));
      }
    }
  }
  report.empirical_score = static_cast<double>(score_sum) / static_cast<double>(rounds);
  return report;
}

}  // namespace nlgames
