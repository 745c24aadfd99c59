#include "qgan/serialize.hpp"

#include <stdexcept>

namespace qgan {

using nlohmann::json;

json to_json(const Ratio& ratio) {
  return json{{"num", ratio.disc_updates}, {"den", ratio.gen_updates}};
}

Ratio ratio_from_json(const json& j) {
  Ratio ratio;
  ratio.disc_updates = j.at("num").get<std::int64_t>();
  ratio.gen_updates = j.at("den").get<std::int64_t>();
  if (ratio.disc_updates < 1 || ratio.gen_updates < 1) {
    throw std::invalid_argument("ratio sides must be >= 1");
  }
  return ratio;
}

json to_json(const AdamConfig& config) {
  return json{{"lr", config.lr},
              {"beta1", config.beta1},
              {"beta2", config.beta2},
              {"epsilon", config.epsilon}};
}

AdamConfig adam_config_from_json(const json& j) {
  AdamConfig config;
  config.lr = j.at("lr").get<double>();
  config.beta1 = j.at("beta1").get<double>();
  config.beta2 = j.at("beta2").get<double>();
  config.epsilon = j.at("epsilon").get<double>();
  return config;
}

json to_json(const TrainingConfig& config) {
  return json{{"n_qubits", config.n_qubits},
              {"epochs", config.epochs},
              {"ratio", to_json(config.ratio)},
              {"adam", to_json(config.adam)},
              {"seed", config.seed}};
}

TrainingConfig training_config_from_json(const json& j) {
  TrainingConfig config;
  config.n_qubits = j.at("n_qubits").get<int>();
  config.epochs = j.at("epochs").get<int>();
  config.ratio = ratio_from_json(j.at("ratio"));
  config.adam = adam_config_from_json(j.at("adam"));
  config.seed = j.at("seed").get<std::uint64_t>();
  return config;
}

json to_json(const Statevector& state) {
  json amps = json::array();
  for (const auto& a : state.amps) {
    amps.push_back(json::array({a.real(), a.imag()}));
  }
  return json{{"n_qubits", state.n_qubits}, {"amplitudes", std::move(amps)}};
}

Statevector statevector_from_json(const json& j) {
  std::vector<std::complex<double>> amps;
  for (const auto& pair : j.at("amplitudes")) {
    amps.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  }
  Statevector state = Statevector::from_amplitudes(std::move(amps));
  if (j.contains("n_qubits") && j.at("n_qubits").get<int>() != state.n_qubits) {
    throw std::invalid_argument("statevector n_qubits does not match amplitude count");
  }
  return state;
}

namespace {

std::string gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::U: return "u";
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::CNOT: return "cnot";
  }
  throw std::invalid_argument("unknown gate kind");
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "rx") return GateKind::RX;
  if (name == "ry") return GateKind::RY;
  if (name == "rz") return GateKind::RZ;
  if (name == "u") return GateKind::U;
  if (name == "h") return GateKind::H;
  if (name == "x") return GateKind::X;
  if (name == "cnot") return GateKind::CNOT;
  throw std::invalid_argument("unknown gate kind '" + name + "'");
}

}  // namespace

json to_json(const CircuitFramework& framework) {
  json slots = json::array();
  for (const ParamSlot& slot : framework.slots) {
    json entry{{"gate", gate_kind_name(slot.kind)}, {"target", slot.target}};
    if (slot.kind == GateKind::CNOT) {
      entry["control"] = slot.control;
    }
    const int n_angles = gate_angle_count(slot.kind);
    if (n_angles > 0) {
      json param = json::array();
      json fixed = json::array();
      for (int i = 0; i < n_angles; ++i) {
        param.push_back(slot.param[i]);
        fixed.push_back(slot.fixed[i]);
      }
      entry["param"] = std::move(param);
      entry["fixed"] = std::move(fixed);
    }
    slots.push_back(std::move(entry));
  }
  return json{{"n_qubits", framework.n_qubits},
              {"param_count", framework.param_count},
              {"slots", std::move(slots)}};
}

CircuitFramework framework_from_json(const json& j) {
  CircuitFramework framework;
  framework.n_qubits = j.at("n_qubits").get<int>();
  framework.param_count = j.at("param_count").get<int>();
  for (const auto& entry : j.at("slots")) {
    ParamSlot slot;
    slot.kind = gate_kind_from_name(entry.at("gate").get<std::string>());
    slot.target = entry.at("target").get<int>();
    if (slot.kind == GateKind::CNOT) {
      slot.control = entry.at("control").get<int>();
    }
    const int n_angles = gate_angle_count(slot.kind);
    for (int i = 0; i < n_angles; ++i) {
      slot.param[i] = entry.at("param").at(i).get<int>();
      slot.fixed[i] = entry.at("fixed").at(i).get<double>();
    }
    framework.slots.push_back(slot);
  }
  validate_framework(framework);
  return framework;
}

json to_json(const TrialResult& result) {
  json records = json::array();
  for (const EpochRecord& r : result.records) {
    records.push_back(json::array({r.epoch, r.gen_loss, r.disc_loss, r.kl}));
  }
  return json{{"config", to_json(result.config)},
              {"gen_seed", result.gen_seed},
              {"disc_seed", result.disc_seed},
              {"initial_kl", result.initial_kl},
              {"records", std::move(records)},
              {"final_gen_params", result.final_gen_params},
              {"final_disc_params", result.final_disc_params}};
}

TrialResult trial_result_from_json(const json& j) {
  TrialResult result;
  result.config = training_config_from_json(j.at("config"));
  result.gen_seed = j.at("gen_seed").get<std::uint64_t>();
  result.disc_seed = j.at("disc_seed").get<std::uint64_t>();
  result.initial_kl = j.at("initial_kl").get<double>();
  for (const auto& r : j.at("records")) {
    EpochRecord record;
    record.epoch = r.at(0).get<int>();
    record.gen_loss = r.at(1).get<double>();
    record.disc_loss = r.at(2).get<double>();
    record.kl = r.at(3).get<double>();
    result.records.push_back(record);
  }
  result.final_gen_params = j.at("final_gen_params").get<std::vector<double>>();
  result.final_disc_params = j.at("final_disc_params").get<std::vector<double>>();
  return result;
}

json to_json(const CaseSettings& settings) {
  return json{{"ratio", to_json(settings.ratio)},
              {"epochs", settings.epochs},
              {"kl_nats", settings.kl}};
}

CaseSettings case_settings_from_json(const json& j) {
  CaseSettings settings;
  settings.ratio = ratio_from_json(j.at("ratio"));
  settings.epochs = j.at("epochs").get<int>();
  settings.kl = j.at("kl_nats").get<double>();
  return settings;
}

json to_json(const BestSettings& settings) {
  return json{{"average_case", to_json(settings.average_case)},
              {"best_case", to_json(settings.best_case)}};
}

BestSettings best_settings_from_json(const json& j) {
  BestSettings settings;
  settings.average_case = case_settings_from_json(j.at("average_case"));
  settings.best_case = case_settings_from_json(j.at("best_case"));
  return settings;
}

json to_json(const FitModel& model) {
  return json{{"family", fit_family_name(model.family)},
              {"a", model.a},
              {"b", model.b},
              {"rss", model.rss}};
}

FitModel fit_model_from_json(const json& j) {
  FitModel model;
  model.family = parse_fit_family(j.at("family").get<std::string>());
  model.a = j.at("a").get<double>();
  model.b = j.at("b").get<double>();
  model.rss = j.at("rss").get<double>();
  return model;
}

}  // namespace qgan
