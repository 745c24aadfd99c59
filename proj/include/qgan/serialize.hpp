#pragma once

#include <json.hpp>

#include "qgan/engine.hpp"
#include "qgan/fit.hpp"
#include "qgan/framework.hpp"
#include "qgan/harness.hpp"

// JSON forms of the core types, used both for run artifacts and for sweep
// resume files. nlohmann emits shortest round-trip doubles, so a value that
// survives a dump/parse cycle is bit-identical.

namespace qgan {

nlohmann::json to_json(const Ratio& ratio);
Ratio ratio_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AdamConfig& config);
AdamConfig adam_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TrainingConfig& config);
TrainingConfig training_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Statevector& state);
Statevector statevector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CircuitFramework& framework);
CircuitFramework framework_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TrialResult& result);
TrialResult trial_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CaseSettings& settings);
CaseSettings case_settings_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BestSettings& settings);
BestSettings best_settings_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FitModel& model);
FitModel fit_model_from_json(const nlohmann::json& j);

}  // namespace qgan
