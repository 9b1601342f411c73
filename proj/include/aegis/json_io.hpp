#pragma once

#include <string>

#include <json.hpp>

#include "aegis/dynamics.hpp"
#include "aegis/scenario.hpp"

namespace aegis {

// Strict parse: every ScenarioConfig field under its lower_snake_case name,
// unknown keys rejected. threshold, bernstein_degree, hvu_position and the
// optional layout fields fall back to their defaults.
ScenarioConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ScenarioConfig& config);

// Parse + validate from a file on disk.
ValidatedConfig load_config_file(const std::string& path);

// Control points keyed by defender ordinal and axis.
TrajectoryParams trajectories_from_json(const nlohmann::json& j);
nlohmann::json trajectories_to_json(const TrajectoryParams& params);

TrajectoryParams load_trajectories_file(const std::string& path);
void save_trajectories_file(const TrajectoryParams& params, const std::string& path);

}  // namespace aegis
