#pragma once

#include <json.hpp>

#include "nlgames/classical.hpp"
#include "nlgames/game_model.hpp"
#include "nlgames/nonsignaling.hpp"
#include "nlgames/quantum_chsh.hpp"
#include "nlgames/svetlichny.hpp"

// Wire formats. Layouts are part of the external interface and are pinned by
// golden tests; do not reorder fields casually.

namespace nlgames {

/// {"n": int, "p": float, "terms": [{"primed": [1-based parties], "weight": w}, ...]}
/// Terms are ordered by subset bitmask.
nlohmann::json expansion_to_json(const CorrelatorExpansion& expansion);
CorrelatorExpansion expansion_from_json(const nlohmann::json& j);

/// Array of per-party [unprimed, primed] outcome pairs, entries +-1.
nlohmann::json strategy_to_json(const DeterministicStrategy& strategy);

/// Observable angles in radians plus the state as [re, im] amplitude pairs.
nlohmann::json strategy_to_json(const ChshStrategy& strategy);

nlohmann::json opt_result_to_json(const OptResult& result, double p);

/// 4x4 row-major table, setting pair (x,y) outer, outcome pair (a,b) inner.
nlohmann::json behavior_to_json(const BehaviorTable& behavior);
BehaviorTable behavior_from_json(const nlohmann::json& j);

/// counts, conditionals (null where a setting never occurred),
/// empirical_score, seed.
nlohmann::json simulation_to_json(const SimulationReport& report);

}  // namespace nlgames
