#include "nlgames/quantum_chsh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "nlgames/errors.hpp"

namespace nlgames {

namespace {

using complexd = std::complex<double>;

constexpr double kNormTol = 1e-12;
constexpr double kRegionTol = 1e-9;

const Eigen::Matrix2cd kPauliX = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
const Eigen::Matrix2cd kPauliZ = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();

void check_quadrant(double p, double q, const char* who) {
  if (!(p >= 0.5 && p < 1.0 && q >= 0.5 && q < 1.0)) {
    throw DomainError(std::string(who) +
                      " requires 1/2 <= p, q < 1; fold the other quadrants first");
  }
}

// Applies a 2x2 operator to one qubit of the state vector in place.
void apply_single_qubit(Eigen::VectorXcd& v, const Eigen::Matrix2cd& op, int qubit) {
  const Eigen::Index stride = Eigen::Index{1} << qubit;
  for (Eigen::Index base = 0; base < v.size(); base += 2 * stride) {
    for (Eigen::Index i = base; i < base + stride; ++i) {
      const complexd v0 = v(i);
      const complexd v1 = v(i + stride);
      v(i) = op(0, 0) * v0 + op(0, 1) * v1;
      v(i + stride) = op(1, 0) * v0 + op(1, 1) * v1;
    }
  }
}

double alpha_max(double p, double q) {
  const double u = q * q + (1.0 - q) * (1.0 - q);
  const double raw = u * (p * p - (1.0 - p) * (1.0 - p)) /
                     (q * (1.0 - q) * (p * p + (1.0 - p) * (1.0 - p)));
  return std::min(2.0, raw);
}

}  // namespace

Eigen::Matrix2cd PlanarObservable::matrix() const {
  return std::cos(theta) * kPauliX + std::sin(theta) * kPauliZ;
}

PureState::PureState(Eigen::VectorXcd amps) : amplitudes(std::move(amps)) {
  const Eigen::Index dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw ValidationError("state dimension must be a power of two, got " + std::to_string(dim));
  }
  if (std::abs(amplitudes.squaredNorm() - 1.0) > kNormTol) {
    throw ValidationError("state must be normalized within 1e-12");
  }
}

int PureState::parties() const {
  int n = 0;
  for (Eigen::Index d = amplitudes.size(); d > 1; d >>= 1) ++n;
  return n;
}

PureState PureState::ghz(int parties) {
  if (parties < 1 || parties > 24) {
    throw ValidationError("ghz party count out of range");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << parties);
  amps(0) = 1.0 / std::numbers::sqrt2;
  amps(amps.size() - 1) = 1.0 / std::numbers::sqrt2;
  return PureState(std::move(amps));
}

PureState PureState::schmidt(double gamma) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
  amps(0) = std::cos(gamma);
  amps(3) = std::sin(gamma);
  return PureState(std::move(amps));
}

double expectation(const PureState& state, std::span<const Eigen::Matrix2cd> ops) {
  const int n = state.parties();
  if (static_cast<int>(ops.size()) != n) {
    throw ValidationError("need one operator per party: state has " + std::to_string(n) +
                          " parties, got " + std::to_string(ops.size()) + " operators");
  }
  Eigen::VectorXcd v = state.amplitudes;
  for (int k = 0; k < n; ++k) apply_single_qubit(v, ops[k], k);
  const double value = state.amplitudes.dot(v).real();
  return std::clamp(value, -1.0, 1.0);
}

double expectation(const PureState& state, std::span<const PlanarObservable> pool,
                   std::span<const int> assignment) {
  std::vector<Eigen::Matrix2cd> ops;
  ops.reserve(assignment.size());
  for (int idx : assignment) {
    if (idx < 0 || idx >= static_cast<int>(pool.size())) {
      throw ValidationError("observable index out of range");
    }
    ops.push_back(pool[idx].matrix());
  }
  return expectation(state, ops);
}

double compute_alpha(const PlanarObservable& b1, const PlanarObservable& b2,
                     const PureState& state) {
  if (state.parties() != 2) {
    throw ValidationError("alpha is defined on two-party states");
  }
  const Eigen::Matrix2cd m1 = b1.matrix();
  const Eigen::Matrix2cd m2 = b2.matrix();
  const Eigen::Matrix2cd anticomm = m1 * m2 + m2 * m1;
  Eigen::VectorXcd v = state.amplitudes;
  apply_single_qubit(v, anticomm, 1);  // Bob = party 2
  return state.amplitudes.dot(v).real();
}

double tsirelson_biased(double p, double q) {
  check_quadrant(p, q, "tsirelson_biased");
  const double u = q * q + (1.0 - q) * (1.0 - q);
  const double v = q * (1.0 - q);
  const double a = alpha_max(p, q);
  return p * std::sqrt(u + v * a) + (1.0 - p) * std::sqrt(u - v * a);
}

RegionTag classify_region(double p, double q) {
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0)) {
    throw ValidationError("region classification requires p, q in (0,1)");
  }
  RegionTag tag;
  tag.r = std::max(p, 1.0 - p);
  tag.s = std::max(q, 1.0 - q);
  tag.region =
      (tag.r * tag.s < 0.5 - kRegionTol) ? Region::Advantage : Region::NoAdvantage;
  return tag;
}

double quantum_value_chsh(double p, double q) {
  const RegionTag tag = classify_region(p, q);
  return tsirelson_biased(tag.r, tag.s);
}

CorrelatorTable ChshStrategy::correlators() const {
  const PlanarObservable alice[2] = {a1, a2};
  const PlanarObservable bob[2] = {b1, b2};
  Eigen::Matrix2d e;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Eigen::Matrix2cd ops[2] = {alice[i].matrix(), bob[j].matrix()};
      e(i, j) = expectation(state, ops);
    }
  }
  return CorrelatorTable(e);
}

ChshStrategy optimal_strategy(double p, double q) {
  check_quadrant(p, q, "optimal_strategy");
  if (p * q >= 0.5 - kRegionTol) {
    throw DomainError(
        "optimal_strategy is the Region-2 construction (pq < 1/2); in Region 1 the "
        "quantum bound is classical and the classical witness applies");
  }
  const double cos_beta = 0.5 * alpha_max(p, q);
  const double sin_beta = std::sqrt(1.0 - cos_beta * cos_beta);
  const double beta = std::acos(cos_beta);

  ChshStrategy s{.a1 = {std::atan2((1.0 - q) * sin_beta, q + (1.0 - q) * cos_beta)},
                 .a2 = {std::atan2(-(1.0 - q) * sin_beta, q - (1.0 - q) * cos_beta)},
                 .b1 = {0.0},
                 .b2 = {beta},
                 .state = PureState::ghz(2),
                 .cos_beta = cos_beta};
  return s;
}

JointCondition joint_no_advantage(const JointBias& bias) {
  std::array<double, 4> cells = {bias(0, 0), bias(0, 1), bias(1, 0), bias(1, 1)};
  for (double c : cells) {
    if (c <= 0.0) {
      throw ValidationError("joint condition needs all four cells positive");
    }
  }
  std::sort(cells.begin(), cells.end(), std::greater<>());
  JointCondition out;
  out.lhs = 1.0 / cells[0] + 1.0 / cells[1] + 1.0 / cells[2] - 1.0 / cells[3];
  out.no_advantage = out.lhs <= kRegionTol;
  return out;
}

JointOracleResult quantum_value_joint_oracle(const JointBias& bias,
                                             const OptimizerConfig& cfg) {
  auto objective = [&bias](const Eigen::VectorXd& x) {
    // x = (a1, a2, b1, b2, gamma); correlators of the Schmidt state under
    // planar observables: E = cos(ta)cos(tb) sin(2 gamma) + sin(ta)sin(tb).
    const double sin2g = std::sin(2.0 * x(4));
    auto corr = [sin2g](double ta, double tb) {
      return std::cos(ta) * std::cos(tb) * sin2g + std::sin(ta) * std::sin(tb);
    };
    return bias(0, 0) * corr(x(0), x(2)) + bias(0, 1) * corr(x(0), x(3)) +
           bias(1, 0) * corr(x(1), x(2)) - bias(1, 1) * corr(x(1), x(3));
  };

  const double two_pi = 2.0 * std::numbers::pi;
  Eigen::VectorXd lower(5), upper(5);
  lower << 0, 0, 0, 0, 0;
  upper << two_pi, two_pi, two_pi, two_pi, 0.5 * std::numbers::pi;
  const SearchResult best = maximize_multistart(objective, lower, upper, cfg);

  JointOracleResult out;
  out.value = best.value;
  out.a1 = best.x(0);
  out.a2 = best.x(1);
  out.b1 = best.x(2);
  out.b2 = best.x(3);
  out.gamma = best.x(4);
  out.converged = best.converged;
  out.starts_used = best.starts_used;
  return out;
}

}  // namespace nlgames
