#include "nlgames/serialize.hpp"

#include "nlgames/errors.hpp"

namespace nlgames {

using nlohmann::json;

json expansion_to_json(const CorrelatorExpansion& expansion) {
  json terms = json::array();
  for (const auto& [subset, w] : expansion.weights) {
    json primed = json::array();
    for (int k = 0; k < expansion.n; ++k) {
      if ((subset >> k) & 1u) primed.push_back(k + 1);
    }
    terms.push_back({{"primed", std::move(primed)}, {"weight", w}});
  }
  return json{{"n", expansion.n}, {"p", expansion.p}, {"terms", std::move(terms)}};
}

CorrelatorExpansion expansion_from_json(const json& j) {
  CorrelatorExpansion out;
  out.n = j.at("n").get<int>();
  out.p = j.at("p").get<double>();
  for (const auto& term : j.at("terms")) {
    std::uint32_t subset = 0;
    for (int party : term.at("primed")) {
      if (party < 1 || party > out.n) {
        throw ValidationError("primed party index out of range");
      }
      subset |= 1u << (party - 1);
    }
    out.weights[subset] = term.at("weight").get<double>();
  }
  return out;
}

json strategy_to_json(const DeterministicStrategy& strategy) {
  json out = json::array();
  for (const auto& pair : strategy.outcomes) out.push_back({pair[0], pair[1]});
  return out;
}

json strategy_to_json(const ChshStrategy& strategy) {
  json state = json::array();
  for (Eigen::Index i = 0; i < strategy.state.amplitudes.size(); ++i) {
    const auto& a = strategy.state.amplitudes(i);
    state.push_back({a.real(), a.imag()});
  }
  return json{{"a1", strategy.a1.theta}, {"a2", strategy.a2.theta},
              {"b1", strategy.b1.theta}, {"b2", strategy.b2.theta},
              {"cos_beta", strategy.cos_beta}, {"state", std::move(state)}};
}

json opt_result_to_json(const OptResult& result, double p) {
  return json{{"n", result.angles.parties()}, {"p", p},           {"value", result.value},
              {"phi0", result.angles.phi0},   {"phi", result.angles.phi},
              {"converged", result.converged}, {"starts_used", result.starts_used}};
}

json behavior_to_json(const BehaviorTable& behavior) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(behavior.p(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

BehaviorTable behavior_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw ValidationError("behavior JSON must be a 4x4 array");
  }
  Eigen::Matrix4d t;
  for (int r = 0; r < 4; ++r) {
    if (!j[r].is_array() || j[r].size() != 4) {
      throw ValidationError("behavior JSON must be a 4x4 array");
    }
    for (int c = 0; c < 4; ++c) t(r, c) = j[r][c].get<double>();
  }
  return BehaviorTable(t);
}

json simulation_to_json(const SimulationReport& report) {
  json counts = json::array();
  json conditionals = json::array();
  for (int x = 0; x < 2; ++x) {
    json count_row = json::array();
    json cond_row = json::array();
    for (int y = 0; y < 2; ++y) {
      count_row.push_back(report.counts(x, y));
      if (report.conditional[x][y].has_value()) {
        cond_row.push_back(*report.conditional[x][y]);
      } else {
        cond_row.push_back(nullptr);
      }
    }
    counts.push_back(std::move(count_row));
    conditionals.push_back(std::move(cond_row));
  }
  return json{{"rounds", report.rounds},
              {"seed", report.seed},
              {"counts", std::move(counts)},
              {"conditionals", std::move(conditionals)},
              {"empirical_score", report.empirical_score}};
}

}  // namespace nlgames
