#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "nlgames/optimize.hpp"

namespace nlgames {

/// One scan point. Region scans fill (p, q); Svetlichny curves fill (n, p)
/// and the convergence flag. gap = quantum - classical.
struct ScanRow {
  double p = 0.0;
  double q = 0.0;
  int n = 0;
  double classical = 0.0;
  double quantum = 0.0;
  double ns = 1.0;
  double gap = 0.0;
  bool advantage = false;
  bool converged = true;
};

/// Advantage cut for values that come out of the numerical optimizer.
inline constexpr double kGapTolOptimizer = 1e-5;
/// Advantage cut for closed-form values.
inline constexpr double kGapTolClosedForm = 1e-9;

/// CHSH values on a grid_steps x grid_steps grid over (0,1)^2, endpoints
/// excluded: p_i = i/(grid_steps+1). Classical by enumeration, quantum by
/// the folded closed form, non-signaling by vertex evaluation.
std::vector<ScanRow> region_scan(int grid_steps);

/// Classical and quantum S_n[p] values along a grid of biases.
std::vector<ScanRow> svetlichny_curves(int n, std::span<const double> p_grid,
                                       const OptimizerConfig& cfg = {});

/// Smallest bias above which the n-party game shows no quantum advantage:
/// a 101-point scan of gap(p) over [1/2, 1) brackets the largest crossing of
/// gap_tol, then bisection refines it to tol_p. The gap meets zero
/// tangentially, so the cut uses a tighter tolerance than the advantage flag
/// (see threshold_gap_tol below).
double threshold_p_star(int n, double tol_p, const OptimizerConfig& cfg = {});

/// Crossing level used by threshold_p_star.
inline constexpr double kThresholdGapTol = 1e-6;

struct ThresholdPoint {
  int n = 0;
  double p_star = 0.0;
  double tol_p = 0.0;
};

/// p*(n) for n = 3..n_max (the Fig.-3 style series).
std::vector<ThresholdPoint> thresholds_vs_n(int n_max, double tol_p,
                                            const OptimizerConfig& cfg = {});

// CSV writers. Header row first, one data row per entry, full double
// round-trip precision.
void write_region_csv(std::ostream& os, std::span<const ScanRow> rows);
void write_curves_csv(std::ostream& os, std::span<const ScanRow> rows);
void write_thresholds_csv(std::ostream& os, std::span<const ThresholdPoint> rows);

}  // namespace nlgames
