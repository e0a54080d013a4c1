#include "nlgames/analysis.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "nlgames/classical.hpp"
#include "nlgames/errors.hpp"
#include "nlgames/nonsignaling.hpp"
#include "nlgames/quantum_chsh.hpp"
#include "nlgames/svetlichny.hpp"

namespace nlgames {

namespace {

void write_double(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

double svetlichny_gap(int n, double p, const OptimizerConfig& cfg) {
  const double classical = classical_value_svetlichny(n, p).value;
  const double quantum = quantum_value_svetlichny(n, p, cfg).value;
  return quantum - classical;
}

}  // namespace

std::vector<ScanRow> region_scan(int grid_steps) {
  if (grid_steps < 2) throw ValidationError("region scan needs at least 2 grid steps");
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(grid_steps) * grid_steps);
  for (int i = 1; i <= grid_steps; ++i) {
    for (int j = 1; j <= grid_steps; ++j) {
      ScanRow row;
      row.p = static_cast<double>(i) / (grid_steps + 1);
      row.q = static_cast<double>(j) / (grid_steps + 1);
      const JointBias bias = JointBias::product(row.p, row.q);
      row.classical = classical_value_chsh(bias).value;
      row.quantum = quantum_value_chsh(row.p, row.q);
      row.ns = ns_value(bias).value;
      row.gap = row.quantum - row.classical;
      row.advantage = classify_region(row.p, row.q).advantage();
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<ScanRow> svetlichny_curves(int n, std::span<const double> p_grid,
                                       const OptimizerConfig& cfg) {
  std::vector<ScanRow> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) {
    ScanRow row;
    row.n = n;
    row.p = p;
    row.classical = classical_value_svetlichny(n, p).value;
    const OptResult opt = quantum_value_svetlichny(n, p, cfg);
    row.quantum = opt.value;
    row.converged = opt.converged;
    row.gap = row.quantum - row.classical;
    row.advantage = row.gap > kGapTolOptimizer;
    row.ns = std::numeric_limits<double>::quiet_NaN();  // two-party notion only
    rows.push_back(row);
  }
  return rows;
}

double threshold_p_star(int n, double tol_p, const OptimizerConfig& cfg) {
  if (tol_p < 1e-6) throw ValidationError("tol_p must be at least 1e-6");

  constexpr int kScanPoints = 101;
  constexpr double kLo = 0.5;
  constexpr double kHi = 0.999;
  double grid[kScanPoints];
  double gaps[kScanPoints];
  for (int i = 0; i < kScanPoints; ++i) {
    grid[i] = kLo + (kHi - kLo) * i / (kScanPoints - 1);
    gaps[i] = svetlichny_gap(n, grid[i], cfg);
  }

  // Largest sign change of (gap - threshold tolerance); the scan guards
  // against multiple crossings.
  int bracket = -1;
  for (int i = 0; i + 1 < kScanPoints; ++i) {
    if (gaps[i] > kThresholdGapTol && gaps[i + 1] <= kThresholdGapTol) bracket = i;
  }
  if (bracket < 0) {
    throw DomainError("no advantage crossing found on [0.5, 1) for n=" + std::to_string(n));
  }

  double lo = grid[bracket];
  double hi = grid[bracket + 1];
  while (hi - lo > tol_p) {
    const double mid = 0.5 * (lo + hi);
    if (svetlichny_gap(n, mid, cfg) > kThresholdGapTol) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<ThresholdPoint> thresholds_vs_n(int n_max, double tol_p,
                                            const OptimizerConfig& cfg) {
  if (n_max < 3 || n_max > 12) {
    throw ValidationError("thresholds_vs_n supports 3 <= n_max <= 12");
  }
  std::vector<ThresholdPoint> out;
  for (int n = 3; n <= n_max; ++n) {
    out.push_back({n, threshold_p_star(n, tol_p, cfg), tol_p});
  }
  return out;
}

void write_region_csv(std::ostream& os, std::span<const ScanRow> rows) {
  os << "p,q,classical,quantum,ns,gap,advantage\n";
  for (const ScanRow& r : rows) {
    write_double(os, r.p);
    os << ',';
    write_double(os, r.q);
    os << ',';
    write_double(os, r.classical);
    os << ',';
    write_double(os, r.quantum);
    os << ',';
    write_double(os, r.ns);
    os << ',';
    write_double(os, r.gap);
    os << ',' << (r.advantage ? "true" : "false") << '\n';
  }
}

void write_curves_csv(std::ostream& os, std::span<const ScanRow> rows) {
  os << "n,p,classical,quantum,gap,converged\n";
  for (const ScanRow& r : rows) {
    os << r.n << ',';
    write_double(os, r.p);
    os << ',';
    write_double(os, r.classical);
    os << ',';
    write_double(os, r.quantum);
    os << ',';
    write_double(os, r.gap);
    os << ',' << (r.converged ? "true" : "false") << '\n';
  }
}

void write_thresholds_csv(std::ostream& os, std::span<const ThresholdPoint> rows) {
  os << "n,p_star,tol_p\n";
  for (const ThresholdPoint& r : rows) {
    os << r.n << ',';
    write_double(os, r.p_star);
    os << ',';
    write_double(os, r.tol_p);
    os << '\n';
  }
}

}  // namespace nlgames
