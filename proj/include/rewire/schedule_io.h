#pragma once

#include <string>

#include "json.hpp"
#include "rewire/compiler.h"

namespace rewire {

/// Schedule document:
///   { "code": {"name", "hash"}, "steps": [{"measure", "correct_on_minus"}],
///     "pauli_fixup", "claimed_action": {"symplectic": [[0|1...]...], "signs": [0|1...]},
///     "audit": [{"generators": [...], "distance": {"exact"|"at_least": d}, "css"}] }
nlohmann::json schedule_to_json(const Schedule &schedule);
/// Throws CodeError naming the schema problem.
Schedule schedule_from_json(const nlohmann::json &doc);

Schedule load_schedule_file(const std::string &path);
void save_schedule_file(const Schedule &schedule, const std::string &path);

nlohmann::json action_to_json(const LogicalAction &action);
LogicalAction action_from_json(const nlohmann::json &doc);

}  // namespace rewire
