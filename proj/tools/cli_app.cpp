#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "nlgames/analysis.hpp"
#include "nlgames/classical.hpp"
#include "nlgames/errors.hpp"
#include "nlgames/game_model.hpp"
#include "nlgames/nonsignaling.hpp"
#include "nlgames/quantum_chsh.hpp"
#include "nlgames/serialize.hpp"
#include "nlgames/svetlichny.hpp"

namespace nlgames::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNonConverged = 4;

const CLI::Validator OpenUnit =
    CLI::Validator(
        [](std::string& s) -> std::string {
          double v = 0.0;
          try {
            v = std::stod(s);
          } catch (const std::exception&) {
            return "not a number: " + s;
          }
          if (!(v > 0.0 && v < 1.0)) return "value must lie strictly in (0,1)";
          return {};
        },
        "FLOAT in (0,1)", "open_unit");

struct CommonFlags {
  double p = 0.5;
  double q = 0.5;
  std::vector<double> pij;
  int n = 3;
  std::string game = "chsh";
  std::string model = "quantum";
  std::string behavior = "pr";
  std::string format = "json";
  std::string out_path;
  int grid = 41;
  int n_max = 8;
  double p_min = 0.5;
  double p_max = 0.99;
  double tol = 1e-4;
  std::uint64_t rounds = 1000000;
  OptimizerConfig opt;
};

void add_optimizer_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--starts", f.opt.starts, "multi-start count")->check(CLI::PositiveNumber);
  cmd->add_option("--iters", f.opt.max_iters, "max iterations per start")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--opt-tol", f.opt.tol, "objective convergence tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.opt.seed, "optimizer seed");
}

json optimizer_params(const OptimizerConfig& opt) {
  return json{{"starts", opt.starts},
              {"iters", opt.max_iters},
              {"opt_tol", opt.tol},
              {"seed", opt.seed}};
}

JointBias bias_from_flags(const CommonFlags& f, const CLI::App* cmd) {
  if (cmd->count("--pij") > 0) {
    Eigen::Matrix2d w;
    w << f.pij[0], f.pij[1], f.pij[2], f.pij[3];
    return JointBias(w);
  }
  return JointBias::product(f.p, f.q);
}

json bias_params(const CommonFlags& f, const CLI::App* cmd) {
  if (cmd->count("--pij") > 0) return json{{"pij", f.pij}};
  return json{{"p", f.p}, {"q", f.q}};
}

void emit(const std::string& text, const CommonFlags& f, std::ostream& out, std::ostream& err) {
  if (f.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(f.out_path, std::ios::binary);
  if (!file) throw ValidationError("cannot open output path: " + f.out_path);
  file << text;
  if (!file.good()) throw ValidationError("write failed: " + f.out_path);
  err << "wrote " << f.out_path << "\n";
}

std::string region_name(const RegionTag& tag) {
  return tag.advantage() ? "Advantage" : "NoAdvantage";
}

// --- value ------------------------------------------------------------

int run_value(const CommonFlags& f, const CLI::App* cmd, std::ostream& out, std::ostream& err) {
  json result{{"command", "value"}, {"game", f.game}, {"model", f.model}};
  int exit_code = kExitOk;

  if (f.game == "chsh" || f.game == "joint") {
    const JointBias bias = bias_from_flags(f, cmd);
    json params = bias_params(f, cmd);
    if (f.model == "classical") {
      const ClassicalResult r = classical_value_chsh(bias);
      result["value"] = r.value;
      result["success_probability"] = expectation_to_success(r.value);
      result["witness"] = strategy_to_json(r.witness);
    } else if (f.model == "ns") {
      const NsResult r = ns_value(bias);
      result["value"] = r.value;
      result["witness"] = behavior_to_json(r.witness);
    } else if (f.model == "quantum" && f.game == "chsh" && cmd->count("--pij") == 0) {
      const RegionTag tag = classify_region(f.p, f.q);
      const double value = tsirelson_biased(tag.r, tag.s);
      result["value"] = value;
      result["success_probability"] = expectation_to_success(value);
      result["region"] = region_name(tag);
      result["folded"] = {{"r", tag.r}, {"s", tag.s}};
      if (tag.advantage()) {
        // Witness for the folded game; sign flips map it to other quadrants.
        result["witness"] = strategy_to_json(optimal_strategy(tag.r, tag.s));
      } else {
        result["witness"] =
            strategy_to_json(classical_value_chsh(JointBias::product(tag.r, tag.s)).witness);
        result["witness_model"] = "classical";
      }
    } else if (f.model == "quantum") {
      const JointOracleResult r = quantum_value_joint_oracle(bias, f.opt);
      const JointCondition cond = joint_no_advantage(bias);
      result["value"] = r.value;
      result["value_is_lower_bound"] = true;
      result["condition_lhs"] = cond.lhs;
      result["no_advantage"] = cond.no_advantage;
      result["converged"] = r.converged;
      result["starts_used"] = r.starts_used;
      result["witness"] = {{"a1", r.a1}, {"a2", r.a2}, {"b1", r.b1},
                           {"b2", r.b2}, {"gamma", r.gamma}};
      params.update(optimizer_params(f.opt));
      if (!r.converged) exit_code = kExitNonConverged;
    } else {
      throw ValidationError("unknown model: " + f.model);
    }
    result["params"] = std::move(params);
  } else if (f.game == "svetlichny") {
    json params{{"n", f.n}, {"p", f.p}};
    if (f.model == "classical") {
      const ClassicalResult r = classical_value_svetlichny(f.n, f.p);
      result["value"] = r.value;
      result["witness"] = strategy_to_json(r.witness);
    } else if (f.model == "quantum") {
      const OptResult r = quantum_value_svetlichny(f.n, f.p, f.opt);
      result.update(opt_result_to_json(r, f.p));
      params.update(optimizer_params(f.opt));
      if (!r.converged) exit_code = kExitNonConverged;
    } else if (f.model == "ns") {
      throw DomainError("the non-signaling module is two-party; svetlichny has no ns value");
    } else {
      throw ValidationError("unknown model: " + f.model);
    }
    result["params"] = std::move(params);
  } else {
    throw ValidationError("unknown game: " + f.game);
  }

  emit(result.dump(2) + "\n", f, out, err);
  return exit_code;
}

// --- expand -----------------------------------------------------------

int run_expand(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  json result = expansion_to_json(expand_svetlichny(f.n, f.p));
  result["command"] = "expand";
  result["params"] = {{"n", f.n}, {"p", f.p}};
  emit(result.dump(2) + "\n", f, out, err);
  return kExitOk;
}

// --- region / curves / threshold / thresholds --------------------------

json scan_row_json(const ScanRow& r, bool with_q) {
  json j{{"p", r.p},       {"classical", r.classical}, {"quantum", r.quantum},
         {"gap", r.gap},   {"advantage", r.advantage}};
  if (with_q) {
    j["q"] = r.q;
    j["ns"] = r.ns;
  } else {
    j["n"] = r.n;
    j["converged"] = r.converged;
  }
  return j;
}

int run_region(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  const std::vector<ScanRow> rows = region_scan(f.grid);
  if (f.format == "csv") {
    std::ostringstream os;
    write_region_csv(os, rows);
    err << json{{"command", "region"}, {"params", {{"grid", f.grid}, {"format", f.format}}}}
               .dump()
        << "\n";
    emit(os.str(), f, out, err);
    return kExitOk;
  }
  json result{{"command", "region"}, {"params", {{"grid", f.grid}, {"format", f.format}}}};
  json jrows = json::array();
  for (const ScanRow& r : rows) jrows.push_back(scan_row_json(r, true));
  result["rows"] = std::move(jrows);
  emit(result.dump(2) + "\n", f, out, err);
  return kExitOk;
}

int run_curves(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  if (f.p_min > f.p_max) throw ValidationError("--p-min must not exceed --p-max");
  std::vector<double> grid;
  for (int i = 0; i < f.grid; ++i) {
    grid.push_back(f.p_min + (f.p_max - f.p_min) * i / std::max(1, f.grid - 1));
  }
  const std::vector<ScanRow> rows = svetlichny_curves(f.n, grid, f.opt);
  const bool all_converged =
      std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.converged; });
  json params{{"n", f.n}, {"grid", f.grid},   {"p_min", f.p_min},
              {"p_max", f.p_max}, {"format", f.format}};
  params.update(optimizer_params(f.opt));
  if (f.format == "csv") {
    std::ostringstream os;
    write_curves_csv(os, rows);
    err << json{{"command", "curves"}, {"params", params}}.dump() << "\n";
    emit(os.str(), f, out, err);
  } else {
    json result{{"command", "curves"}, {"params", params}};
    json jrows = json::array();
    for (const ScanRow& r : rows) jrows.push_back(scan_row_json(r, false));
    result["rows"] = std::move(jrows);
    emit(result.dump(2) + "\n", f, out, err);
  }
  return all_converged ? kExitOk : kExitNonConverged;
}

int run_threshold(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  const double p_star = threshold_p_star(f.n, f.tol, f.opt);
  json params{{"n", f.n}, {"tol", f.tol}};
  params.update(optimizer_params(f.opt));
  json result{{"command", "threshold"},
              {"params", std::move(params)},
              {"n", f.n},
              {"p_star", p_star},
              {"tol_p", f.tol}};
  emit(result.dump(2) + "\n", f, out, err);
  return kExitOk;
}

int run_thresholds(const CommonFlags& f, std::ostream& out, std::ostream& err) {
  const std::vector<ThresholdPoint> points = thresholds_vs_n(f.n_max, f.tol, f.opt);
  json params{{"n_max", f.n_max}, {"tol", f.tol}, {"format", f.format}};
  params.update(optimizer_params(f.opt));
  if (f.format == "csv") {
    std::ostringstream os;
    write_thresholds_csv(os, points);
    err << json{{"command", "thresholds"}, {"params", params}}.dump() << "\n";
    emit(os.str(), f, out, err);
    return kExitOk;
  }
  json result{{"command", "thresholds"}, {"params", std::move(params)}};
  json series = json::array();
  for (const ThresholdPoint& t : points) {
    series.push_back({{"n", t.n}, {"p_star", t.p_star}, {"tol_p", t.tol_p}});
  }
  result["series"] = std::move(series);
  emit(result.dump(2) + "\n", f, out, err);
  return kExitOk;
}

// --- simulate -----------------------------------------------------------

int run_simulate(const CommonFlags& f, const CLI::App* cmd, std::ostream& out,
                 std::ostream& err) {
  const JointBias bias = bias_from_flags(f, cmd);

  BehaviorTable behavior = pr_box();
  if (f.behavior == "pr") {
    // keep the PR box
  } else if (f.behavior == "classical") {
    Eigen::Matrix4d t = Eigen::Matrix4d::Zero();
    for (int row = 0; row < 4; ++row) t(row, 0) = 1.0;  // both always output +1
    behavior = BehaviorTable(t);
  } else if (f.behavior == "quantum") {
    if (cmd->count("--pij") > 0) {
      throw DomainError("--behavior quantum needs a product bias with 1/2 <= p, q");
    }
    behavior = behavior_from_correlators(optimal_strategy(f.p, f.q).correlators());
  } else {
    throw ValidationError("unknown behavior: " + f.behavior);
  }

  const SimulationReport report = simulate_rounds(behavior, bias, f.rounds, f.opt.seed);
  json result = simulation_to_json(report);
  result["command"] = "simulate";
  json params = bias_params(f, cmd);
  params["behavior"] = f.behavior;
  params["rounds"] = f.rounds;
  params["seed"] = f.opt.seed;
  result["params"] = std::move(params);
  result["behavior_table"] = behavior_to_json(behavior);
  emit(result.dump(2) + "\n", f, out, err);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"solver for biased nonlocal games (CHSH, joint-bias CHSH, Svetlichny)"};
  app.require_subcommand(1);
  CommonFlags f;

  auto* value = app.add_subcommand("value", "optimal value of a game at one parameter point");
  value->add_option("--game", f.game, "chsh|joint|svetlichny")
      ->check(CLI::IsMember({"chsh", "joint", "svetlichny"}));
  value->add_option("--model", f.model, "classical|quantum|ns")
      ->check(CLI::IsMember({"classical", "quantum", "ns"}));
  value->add_option("--p", f.p, "Alice bias / Svetlichny bias")->check(OpenUnit);
  value->add_option("--q", f.q, "Bob bias")->check(OpenUnit);
  value->add_option("--pij", f.pij, "joint bias, row-major P00,P01,P10,P11")
      ->delimiter(',')
      ->expected(4)
      ->check(CLI::Range(0.0, 1.0));
  value->add_option("--n", f.n, "party count")->check(CLI::Range(2, 12));
  add_optimizer_flags(value, f);

  auto* expand = app.add_subcommand("expand", "dump the S_n[p] correlator expansion");
  expand->add_option("--n", f.n, "party count")->check(CLI::Range(2, 16))->required();
  expand->add_option("--p", f.p, "per-party bias")->check(OpenUnit)->required();
  expand->add_option("--out", f.out_path, "write to file instead of stdout");

  auto* region = app.add_subcommand("region", "scan the (p,q) square for quantum advantage");
  region->add_option("--grid", f.grid, "grid steps per axis")->check(CLI::Range(2, 2000));
  region->add_option("--format", f.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  auto* curves = app.add_subcommand("curves", "classical vs quantum Svetlichny curves");
  curves->add_option("--n", f.n, "party count")->check(CLI::Range(2, 12));
  curves->add_option("--grid", f.grid, "number of p samples");
  curves->add_option("--p-min", f.p_min)->check(OpenUnit);
  curves->add_option("--p-max", f.p_max)->check(OpenUnit);
  curves->add_option("--format", f.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  add_optimizer_flags(curves, f);

  auto* threshold = app.add_subcommand("threshold", "advantage threshold p*(n)");
  threshold->add_option("--n", f.n, "party count")->check(CLI::Range(2, 12));
  threshold->add_option("--tol", f.tol, "bisection tolerance on p")
      ->check(CLI::Range(1e-6, 0.1));
  add_optimizer_flags(threshold, f);

  auto* thresholds = app.add_subcommand("thresholds", "p*(n) series for n = 3..n_max");
  thresholds->add_option("--n-max", f.n_max)->check(CLI::Range(3, 12));
  thresholds->add_option("--tol", f.tol, "bisection tolerance on p")
      ->check(CLI::Range(1e-6, 0.1));
  thresholds->add_option("--format", f.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  add_optimizer_flags(thresholds, f);

  auto* simulate = app.add_subcommand("simulate", "seeded Monte Carlo rounds of a behavior");
  simulate->add_option("--behavior", f.behavior, "pr|classical|quantum")
      ->check(CLI::IsMember({"pr", "classical", "quantum"}));
  simulate->add_option("--p", f.p, "Alice bias")->check(OpenUnit);
  simulate->add_option("--q", f.q, "Bob bias")->check(OpenUnit);
  simulate->add_option("--pij", f.pij, "joint bias, row-major")
      ->delimiter(',')
      ->expected(4)
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--rounds", f.rounds)->check(CLI::PositiveNumber);
  simulate->add_option("--seed", f.opt.seed, "simulation seed");

  for (CLI::App* cmd : {value, region, curves, threshold, thresholds, simulate}) {
    if (cmd->get_option_no_throw("--out") == nullptr) {
      cmd->add_option("--out", f.out_path, "write to file instead of stdout");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (value->parsed()) return run_value(f, value, out, err);
    if (expand->parsed()) return run_expand(f, out, err);
    if (region->parsed()) return run_region(f, out, err);
    if (curves->parsed()) return run_curves(f, out, err);
    if (threshold->parsed()) return run_threshold(f, out, err);
    if (thresholds->parsed()) return run_thresholds(f, out, err);
    if (simulate->parsed()) return run_simulate(f, simulate, out, err);
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << "\n";
    return kExitDomain;
  }
  err << "no subcommand given\n";
  return kExitUsage;
}

}  // namespace nlgames::cli
