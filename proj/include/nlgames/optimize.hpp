#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>

namespace nlgames {

/// Budget and seeding for the multi-start derivative-free searches.
struct OptimizerConfig {
  int starts = 32;
  int max_iters = 2000;     // per start
  double tol = 1e-10;       // objective spread across the simplex
  std::uint64_t seed = 0;
};

struct LocalSearchResult {
  Eigen::VectorXd x;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

struct SearchResult {
  Eigen::VectorXd x;
  double value = 0.0;
  bool converged = false;
  int starts_used = 0;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Nelder-Mead ascent from x0 with per-coordinate initial step.
LocalSearchResult nelder_mead_maximize(const Objective& f, const Eigen::VectorXd& x0,
                                       const Eigen::VectorXd& step, int max_iters, double tol);

/// Multi-start maximization with starts drawn uniformly from [lower, upper].
/// Start k is seeded from mix_seed(cfg.seed, k), so enlarging cfg.starts never
/// changes earlier starts and the best value is monotone in the start count.
/// Ties keep the lowest start index; the result is deterministic.
SearchResult maximize_multistart(const Objective& f, const Eigen::VectorXd& lower,
                                 const Eigen::VectorXd& upper, const OptimizerConfig& cfg);

}  // namespace nlgames
