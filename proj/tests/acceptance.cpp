// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Run via ctest or directly:  ./tests/acceptance

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "nlgames/analysis.hpp"
#include "nlgames/classical.hpp"
#include "nlgames/game_model.hpp"
#include "nlgames/nonsignaling.hpp"
#include "nlgames/quantum_chsh.hpp"
#include "nlgames/rng.hpp"
#include "nlgames/svetlichny.hpp"
#include "oracles.hpp"

using namespace nlgames;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

struct Criterion {
  int failures = 0;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

JointBias bias4(double a, double b, double c, double d) {
  Eigen::Matrix2d w;
  w << a, b, c, d;
  return JointBias(w);
}

JointBias random_bias(std::mt19937_64& eng, double floor) {
  while (true) {
    double cells[4];
    double sum = 0.0;
    for (double& c : cells) sum += (c = uniform_double(eng));
    Eigen::Matrix2d w;
    w << cells[0] / sum, cells[1] / sum, cells[2] / sum, cells[3] / sum;
    w(1, 1) += 1.0 - w.sum();
    if (w.minCoeff() < floor) continue;
    return JointBias(w);
  }
}

// 1. Classical CHSH at p=q=1/2: 1/2 exactly, 3/4 in success form,
//    enumeration == closed form to 1e-12.
void criterion1(Criterion& c) {
  const double value = classical_value_chsh(JointBias::product(0.5, 0.5)).value;
  c.require(value == 0.5, "enumeration value is not exactly 1/2");
  c.require(expectation_to_success(value) == 0.75, "success form is not exactly 3/4");
  c.require(std::abs(value - classical_closed_form(0.5, 0.5)) <= 1e-12,
            "enumeration vs closed form exceeds 1e-12");
}

// 2. Quantum CHSH at p=q=1/2: sqrt(2)/2 via closed form, via the scored
//    explicit strategy (1e-9), and via the oracle (1e-6, < 5 s).
void criterion2(Criterion& c) {
  c.require(std::abs(tsirelson_biased(0.5, 0.5) - kSqrt2 / 2) <= 1e-9, "closed form off");
  const double scored = chsh_score(BiasPair(0.5, 0.5), optimal_strategy(0.5, 0.5).correlators());
  c.require(std::abs(scored - kSqrt2 / 2) <= 1e-9, "scored strategy off");

  const auto t0 = std::chrono::steady_clock::now();
  const JointOracleResult oracle = quantum_value_joint_oracle(JointBias::product(0.5, 0.5), {});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(std::abs(oracle.value - kSqrt2 / 2) <= 1e-6, "oracle off by more than 1e-6");
  c.require(seconds < 5.0, "oracle slower than 5 s");
}

// 3. Region boundary on the 41x41 grid of [0.5, 0.99]^2: gap vanishes
//    (<= 1e-9) whenever pq >= 1/2 and exceeds 1e-6 whenever pq < 1/2 - 1e-3.
//    (Between those bands the tangential seam leaves gaps below either cut.)
void criterion3(Criterion& c) {
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const double p = 0.5 + 0.49 * i / 40.0;
      const double q = 0.5 + 0.49 * j / 40.0;
      const double gap = tsirelson_biased(p, q) - classical_value_chsh(JointBias::product(p, q)).value;
      c.require(gap >= -1e-12, "negative gap at a grid point");
      if (p * q >= 0.5) {
        c.require(std::abs(gap) <= 1e-9, "nonzero gap in Region 1");
      } else if (p * q < 0.5 - 1e-3) {
        c.require(gap > 1e-6, "gap not strictly positive in Region 2");
      }
    }
  }
}

// 4. p=q=3/4: classical = quantum = 7/8; oracle agrees within 1e-5.
void criterion4(Criterion& c) {
  const double classical = classical_value_chsh(JointBias::product(0.75, 0.75)).value;
  c.require(std::abs(classical - 0.875) <= 1e-12, "classical not 7/8");
  c.require(std::abs(tsirelson_biased(0.75, 0.75) - 0.875) <= 1e-9, "quantum bound not 7/8");
  const double oracle = quantum_value_joint_oracle(JointBias::product(0.75, 0.75), {}).value;
  c.require(std::abs(oracle - 0.875) <= 1e-5, "oracle disagrees beyond 1e-5");
}

// 5. p=0.99, q=0.5: the barely-nonlocal game still shows an advantage of
//    sqrt(0.99^2 + 0.01^2) - 0.99 > 5e-5, seen by closed forms and oracle.
void criterion5(Criterion& c) {
  const double expected_gap = std::sqrt(0.99 * 0.99 + 0.01 * 0.01) - 0.99;
  c.require(expected_gap > 5e-5, "expected gap not above 5e-5");
  const double classical = classical_value_chsh(JointBias::product(0.99, 0.5)).value;
  const double quantum = tsirelson_biased(0.99, 0.5);
  c.require(std::abs((quantum - classical) - expected_gap) <= 1e-12,
            "closed-form gap does not match the expression");

  OptimizerConfig cfg;
  cfg.starts = 64;
  const double oracle = quantum_value_joint_oracle(JointBias::product(0.99, 0.5), cfg).value;
  c.require(oracle - classical > 5e-5, "oracle misses the advantage");
}

// 6. Joint-bias condition vs oracle verdicts, 100/100 seeded samples with
//    cells >= 0.02 and |lhs| > 0.5.
void criterion6(Criterion& c) {
  std::mt19937_64 eng(20101128);
  int agree = 0;
  for (int tested = 0; tested < 100;) {
    const JointBias bias = random_bias(eng, 0.02);
    const JointCondition cond = joint_no_advantage(bias);
    if (std::abs(cond.lhs) <= 0.5) continue;
    ++tested;
    const double quantum = quantum_value_joint_oracle(bias, {}).value;
    const double classical = classical_value_chsh(bias).value;
    const bool oracle_advantage = quantum > classical + 1e-5;
    if (oracle_advantage == !cond.no_advantage) ++agree;
  }
  c.require(agree == 100, "agreement " + std::to_string(agree) + "/100");
}

// 7. Svetlichny n=3: classical 1 at p=1/2 (exact), quantum sqrt(2) within
//    1e-6, threshold p*(3) = 0.8406 +- 0.001.
void criterion7(Criterion& c) {
  c.require(classical_value_svetlichny(3, 0.5).value == 1.0, "classical value not exactly 1");
  const OptResult q = quantum_value_svetlichny(3, 0.5, {});
  c.require(std::abs(q.value - kSqrt2) <= 1e-6, "quantum value not sqrt(2)");
  const double p_star = threshold_p_star(3, 1e-4, {});
  c.require(std::abs(p_star - 0.8406) <= 1e-3,
            "p*(3) = " + std::to_string(p_star) + " outside 0.8406 +- 0.001");
}

// 8. Thresholds p*(n) strictly increasing for n = 3..6.
void criterion8(Criterion& c, std::string& extra) {
  const std::vector<ThresholdPoint> series = thresholds_vs_n(6, 1e-4, {});
  extra = " [";
  for (std::size_t i = 0; i < series.size(); ++i) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "p*(%d)=%.4f%s", series[i].n, series[i].p_star,
                  i + 1 < series.size() ? ", " : "]");
    extra += buf;
    if (i > 0) {
      c.require(series[i].p_star > series[i - 1].p_star,
                "series not strictly increasing at n=" + std::to_string(series[i].n));
    }
  }
  c.require(series.front().n == 3 && series.back().n == 6, "series does not cover n=3..6");
  for (const ThresholdPoint& t : series) {
    c.require(t.p_star > 0.5 && t.p_star < 1.0, "p* outside (0.5, 1)");
  }
}

// 9. Non-signaling value 1 for 50 random biases including near-degenerate
//    ones; chain classical <= quantum <= 1 with 1e-9 slack on the grid.
void criterion9(Criterion& c) {
  std::mt19937_64 eng(909);
  for (int rep = 0; rep < 50; ++rep) {
    const double floor = (rep < 10) ? 1e-7 : 0.0;  // include near-degenerate draws
    const JointBias bias = (rep % 5 == 0) ? bias4(0.999999, 1e-6 / 3, 1e-6 / 3, 1e-6 / 3)
                                          : random_bias(eng, floor);
    c.require(std::abs(ns_value(bias).value - 1.0) <= 1e-12, "ns value not 1");
  }
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const double p = 0.5 + 0.49 * i / 40.0;
      const double q = 0.5 + 0.49 * j / 40.0;
      const JointBias bias = JointBias::product(p, q);
      const double classical = classical_value_chsh(bias).value;
      const double quantum = tsirelson_biased(p, q);
      const double ns = ns_value(bias).value;
      c.require(classical <= quantum + 1e-9 && quantum <= ns + 1e-9 &&
                    std::abs(ns - 1.0) <= 1e-12,
                "bound chain violated");
    }
  }
}

// 10. Property suites: GHZ closed form == state vector (1e-10, n <= 8);
//     expansion == recursion (1e-12); fold symmetry (1e-9 closed form,
//     2e-6 oracle); simulation estimator within 5 sigma at 1e6 rounds.
void criterion10(Criterion& c) {
  std::mt19937_64 eng(1010);

  for (int n = 2; n <= 8; ++n) {
    const CorrelatorExpansion x = expand_svetlichny(n, 0.3 + 0.4 * uniform_double(eng));
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<double> phi(n);
      for (double& a : phi) a = 2 * std::numbers::pi * uniform_double(eng);
      const AngleSet angles(2 * std::numbers::pi * uniform_double(eng), std::move(phi));
      c.require(std::abs(ghz_objective(x, angles) - ghz_objective_statevector(x, angles)) <=
                    1e-10,
                "GHZ closed form vs state vector at n=" + std::to_string(n));
    }
  }

  for (int n = 2; n <= 6; ++n) {
    for (double p : {0.3, 0.5, 0.8}) {
      const CorrelatorExpansion x = expand_svetlichny(n, p);
      for (int rep = 0; rep < 30; ++rep) {
        std::vector<int> cs(n), cps(n);
        for (int k = 0; k < n; ++k) {
          cs[k] = (eng() & 1) ? 1 : -1;
          cps[k] = (eng() & 1) ? 1 : -1;
        }
        c.require(std::abs(evaluate_expansion(x, cs, cps) -
                           test_oracles::svetlichny_recursive(n, p, cs, cps)) <= 1e-12,
                  "expansion vs recursion");
      }
    }
  }

  for (int rep = 0; rep < 30; ++rep) {
    const double p = 0.02 + 0.96 * uniform_double(eng);
    const double q = 0.02 + 0.96 * uniform_double(eng);
    const double v = classical_value_chsh(JointBias::product(p, q)).value;
    c.require(std::abs(classical_value_chsh(JointBias::product(1 - p, q)).value - v) <= 1e-9 &&
                  std::abs(classical_value_chsh(JointBias::product(p, 1 - q)).value - v) <= 1e-9,
              "classical fold symmetry");
  }
  OptimizerConfig fold_cfg;
  fold_cfg.starts = 16;
  for (int rep = 0; rep < 5; ++rep) {
    const double p = 0.1 + 0.8 * uniform_double(eng);
    const double q = 0.1 + 0.8 * uniform_double(eng);
    const double v = quantum_value_joint_oracle(JointBias::product(p, q), fold_cfg).value;
    const double w = quantum_value_joint_oracle(JointBias::product(1 - p, q), fold_cfg).value;
    c.require(std::abs(v - w) <= 2e-6, "oracle fold symmetry");
  }

  const BehaviorTable quantum_box =
      behavior_from_correlators(optimal_strategy(0.6, 0.6).correlators());
  const SimulationReport sim =
      simulate_rounds(quantum_box, JointBias::product(0.6, 0.6), 1000000, 42);
  const CorrelatorTable exact = quantum_box.correlators();
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double n_xy = static_cast<double>(sim.counts(x, y));
      const double se = std::sqrt((1.0 - exact(x, y) * exact(x, y)) / n_xy);
      c.require(sim.conditional[x][y].has_value() &&
                    std::abs(*sim.conditional[x][y] - exact(x, y)) <= 5.0 * se,
                "simulation estimator outside 5 standard errors");
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<void(Criterion&, std::string&)> run;
  };
  const std::vector<Entry> entries = {
      {"1: classical CHSH at p=q=1/2 (1/2 expectation form, 3/4 success form)",
       [](Criterion& c, std::string&) { criterion1(c); }},
      {"2: quantum CHSH sqrt(2)/2 via closed form, strategy, oracle",
       [](Criterion& c, std::string&) { criterion2(c); }},
      {"3: region boundary pq=1/2 on the 41x41 grid",
       [](Criterion& c, std::string&) { criterion3(c); }},
      {"4: no advantage at p=q=3/4 (classical = quantum = 7/8)",
       [](Criterion& c, std::string&) { criterion4(c); }},
      {"5: barely nonlocal game p=0.99, q=0.5 keeps a quantum advantage",
       [](Criterion& c, std::string&) { criterion5(c); }},
      {"6: joint-bias condition matches oracle verdicts 100/100",
       [](Criterion& c, std::string&) { criterion6(c); }},
      {"7: Svetlichny n=3 values and threshold p*(3) = 0.8406 +- 0.001",
       [](Criterion& c, std::string&) { criterion7(c); }},
      {"8: thresholds p*(n) strictly increasing for n=3..6",
       [](Criterion& c, std::string& extra) { criterion8(c, extra); }},
      {"9: non-signaling value 1 and bound chain",
       [](Criterion& c, std::string&) { criterion9(c); }},
      {"10: property suites (GHZ, expansion, fold, simulation)",
       [](Criterion& c, std::string&) { criterion10(c); }},
  };

  int failed = 0;
  for (const Entry& e : entries) {
    Criterion c;
    std::string extra;
    const auto t0 = std::chrono::steady_clock::now();
    e.run(c, extra);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.failures == 0) {
      std::printf("PASS  criterion %s%s  (%.1fs)\n", e.name, extra.c_str(), seconds);
    } else {
      ++failed;
      std::printf("FAIL  criterion %s%s  (%.1fs)  -- %s\n", e.name, extra.c_str(), seconds,
                  c.detail.c_str());
    }
    std::fflush(stdout);
  }
  if (failed == 0) {
    std::printf("all %zu acceptance criteria passed\n", entries.size());
  } else {
    std::printf("%d acceptance criteria FAILED\n", failed);
  }
  return failed;
}
