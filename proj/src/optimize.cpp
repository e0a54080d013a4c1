#include "nlgames/optimize.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "nlgames/errors.hpp"
#include "nlgames/rng.hpp"

namespace nlgames {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

}  // namespace

LocalSearchResult nelder_mead_maximize(const Objective& f, const Eigen::VectorXd& x0,
                                       const Eigen::VectorXd& step, int max_iters, double tol) {
  const int dim = static_cast<int>(x0.size());
  std::vector<Eigen::VectorXd> xs(dim + 1, x0);
  std::vector<double> fs(dim + 1);
  for (int i = 0; i < dim; ++i) xs[i + 1](i) += step(i);
  for (int i = 0; i <= dim; ++i) fs[i] = f(xs[i]);

  std::vector<int> order(dim + 1);
  auto sort_desc = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fs[a] > fs[b]; });
  };

  LocalSearchResult out;
  int iter = 0;
  for (; iter < max_iters; ++iter) {
    sort_desc();
    const int best = order[0];
    const int worst = order[dim];
    const int second_worst = order[dim - 1];
    if (fs[best] - fs[worst] < tol) {
      out.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i < dim; ++i) centroid += xs[order[i]];
    centroid /= dim;

    const Eigen::VectorXd reflected = centroid + kReflect * (centroid - xs[worst]);
    const double f_reflected = f(reflected);

    if (f_reflected > fs[best]) {
      const Eigen::VectorXd expanded = centroid + kExpand * (reflected - centroid);
      const double f_expanded = f(expanded);
      if (f_expanded > f_reflected) {
        xs[worst] = expanded;
        fs[worst] = f_expanded;
      } else {
        xs[worst] = reflected;
        fs[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected > fs[second_worst]) {
      xs[worst] = reflected;
      fs[worst] = f_reflected;
      continue;
    }

    if (f_reflected > fs[worst]) {
      // outside contraction
      const Eigen::VectorXd contracted = centroid + kContract * (reflected - centroid);
      const double f_contracted = f(contracted);
      if (f_contracted >= f_reflected) {
        xs[worst] = contracted;
        fs[worst] = f_contracted;
        continue;
      }
    } else {
      // inside contraction
      const Eigen::VectorXd contracted = centroid - kContract * (centroid - xs[worst]);
      const double f_contracted = f(contracted);
      if (f_contracted > fs[worst]) {
        xs[worst] = contracted;
        fs[worst] = f_contracted;
        continue;
      }
    }

    for (int i = 1; i <= dim; ++i) {
      const int j = order[i];
      xs[j] = xs[order[0]] + kShrink * (xs[j] - xs[order[0]]);
      fs[j] = f(xs[j]);
    }
  }

  sort_desc();
  out.x = xs[order[0]];
  out.value = fs[order[0]];
  out.iterations = iter;
  return out;
}

SearchResult maximize_multistart(const Objective& f, const Eigen::VectorXd& lower,
                                 const Eigen::VectorXd& upper, const OptimizerConfig& cfg) {
  if (cfg.starts < 1) throw ValidationError("optimizer needs at least one start");
  if (lower.size() != upper.size()) throw ValidationError("bound dimensions differ");
  const int dim = static_cast<int>(lower.size());
  const Eigen::VectorXd step = 0.25 * (upper - lower);

  SearchResult best;
  best.value = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < cfg.starts; ++k) {
    std::mt19937_64 eng(mix_seed(cfg.seed, static_cast<std::uint64_t>(k)));
    Eigen::VectorXd x0(dim);
    for (int i = 0; i < dim; ++i) {
      x0(i) = lower(i) + (upper(i) - lower(i)) * uniform_double(eng);
    }
    LocalSearchResult local = nelder_mead_maximize(f, x0, step, cfg.max_iters, cfg.tol);
    if (local.value > best.value) {
      best.value = local.value;
      best.x = std::move(local.x);
      best.converged = local.converged;
    }
  }
  best.starts_used = cfg.starts;
  return best;
}

}  // namespace nlgames
