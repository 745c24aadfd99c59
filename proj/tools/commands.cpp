#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "qgan/artifacts.hpp"
#include "qgan/engine.hpp"
#include "qgan/fit.hpp"
#include "qgan/harness.hpp"
#include "qgan/serialize.hpp"
#include "qgan/svg.hpp"

namespace qgan::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// relative --out paths are rooted at $QGAN_OUT_ROOT when it is set
fs::path resolve_out(const std::string& out) {
  fs::path path(out);
  if (path.is_relative()) {
    if (const char* root = std::getenv("QGAN_OUT_ROOT")) {
      return fs::path(root) / path;
    }
  }
  return path;
}

std::string json_scalar_to_string(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number() || value.is_null()) return value.dump();
  throw UsageError("config values must be flat scalars, got " + value.dump());
}

// key=value lines or a flat JSON object, mapped onto the long option names
std::vector<std::pair<std::string, std::string>> load_config_file(
    const std::string& file) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::string text;
  try {
    text = read_text_file(file);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const std::exception& e) {
      throw UsageError("config file '" + file + "' is not valid JSON: " + e.what());
    }
    for (const auto& [key, value] : j.items()) {
      entries.emplace_back(key, json_scalar_to_string(value));
    }
    return entries;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    const std::size_t eq = line.find('=', start);
    if (eq == std::string::npos) {
      throw UsageError("config file '" + file + "': expected key=value, got '" +
                       line + "'");
    }
    std::string key = line.substr(start, eq - start);
    std::string value = line.substr(eq + 1);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    const std::size_t vstart = value.find_first_not_of(" \t");
    value = vstart == std::string::npos ? "" : value.substr(vstart);
    while (!value.empty() && (value.back() == ' ' || value.back() == '\t' ||
                              value.back() == '\r')) {
      value.pop_back();
    }
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

// Splices `--config FILE` contents into the token stream right after the
// subcommand name, so explicit flags (parsed later, TakeLast) win. CLI11's
// own set_config never fires for subcommand-attached configs, hence the
// pre-parse.
std::vector<std::string> expand_config_tokens(std::vector<std::string> args) {
  std::string config_file;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) {
        throw UsageError("--config needs a file argument");
      }
      config_file = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_file = args[i].substr(9);
      args.erase(args.begin() + i);
    } else {
      ++i;
    }
  }
  if (config_file.empty()) return args;
  if (args.empty()) {
    throw UsageError("--config requires a subcommand");
  }
  std::vector<std::string> tokens;
  for (const auto& [key, value] : load_config_file(config_file)) {
    tokens.push_back("--" + key + "=" + value);
  }
  args.insert(args.begin() + 1, tokens.begin(), tokens.end());
  return args;
}

// every scalar option takes the last occurrence, so values spliced in from a
// config file are overridden by explicit flags
CLI::Option* opt(CLI::Option* option) {
  return option->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

struct AdamFlags {
  double lr = 0.02;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  void attach(CLI::App* cmd) {
    opt(cmd->add_option("--lr", lr, "Adam learning rate")->capture_default_str());
    opt(cmd->add_option("--beta1", beta1, "Adam beta1")->capture_default_str());
    opt(cmd->add_option("--beta2", beta2, "Adam beta2")->capture_default_str());
    opt(cmd->add_option("--epsilon", epsilon, "Adam epsilon")
            ->capture_default_str());
  }

  AdamConfig to_config() const { return AdamConfig{lr, beta1, beta2, epsilon}; }
};

std::vector<Ratio> parse_ratio_list(const std::string& text) {
  std::vector<Ratio> ratios;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = text.find(',', start);
    const std::string part = text.substr(
        start, pos == std::string::npos ? std::string::npos : pos - start);
    if (!part.empty()) ratios.push_back(parse_ratio(part));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (ratios.empty()) {
    throw UsageError("no training ratios given");
  }
  return ratios;
}

struct ResolvedTarget {
  TargetState state;
  std::string source;  // "bell" | "haar" | "file"
  std::string path;
};

ResolvedTarget resolve_target(const std::string& spec, int qubits,
                              std::uint64_t seed) {
  ResolvedTarget target;
  if (spec == "bell") {
    if (qubits != 2) {
      throw UsageError("the bell preset is a 2-qubit target");
    }
    target.state = bell_target();
    target.source = "bell";
    return target;
  }
  if (spec == "haar") {
    Rng rng(derive_seed(seed, 0, SeedRole::Target));
    target.state = sample_target(qubits, rng);
    target.source = "haar";
    return target;
  }
  // anything else is a statevector file
  json j;
  try {
    j = json::parse(read_text_file(spec));
  } catch (const std::exception& e) {
    throw UsageError("unreadable target file '" + spec + "': " + e.what());
  }
  try {
    target.state = target_from_statevector(statevector_from_json(j));
  } catch (const std::exception& e) {
    throw UsageError("invalid target statevector in '" + spec + "': " + e.what());
  }
  if (target.state.n_qubits != qubits) {
    throw UsageError("target file holds a " +
                     std::to_string(target.state.n_qubits) +
                     "-qubit state but --qubits is " + std::to_string(qubits));
  }
  target.source = "file";
  target.path = spec;
  return target;
}

std::vector<Chart> run_charts(const std::vector<EpochRecord>& records) {
  std::vector<double> epochs, gen_loss, disc_loss, kl;
  for (const EpochRecord& r : records) {
    epochs.push_back(r.epoch);
    gen_loss.push_back(r.gen_loss);
    disc_loss.push_back(r.disc_loss);
    kl.push_back(r.kl);
  }
  Chart losses;
  losses.options.title = "Training loss";
  losses.options.x_label = "epoch";
  losses.options.y_label = "loss (nats)";
  losses.series.push_back({"generator", epochs, gen_loss, "#1f77b4"});
  losses.series.push_back({"discriminator", epochs, disc_loss, "#d62728"});

  Chart divergence;
  divergence.options.title = "KL divergence";
  divergence.options.x_label = "epoch";
  divergence.options.y_label = "KL (nats)";
  divergence.series.push_back({"KL", epochs, kl, "#2ca02c"});
  return {losses, divergence};
}

std::vector<Chart> sweep_charts(const AggregateCurves& curves) {
  const auto make_panel = [&](const std::string& title,
                              const std::vector<std::vector<double>>& kl) {
    Chart chart;
    chart.options.title = title;
    chart.options.x_label = "epoch";
    chart.options.y_label = "KL (nats)";
    for (std::size_t ri = 0; ri < curves.ratios.size(); ++ri) {
      std::vector<double> epochs(kl[ri].size());
      for (std::size_t e = 0; e < epochs.size(); ++e) {
        epochs[e] = static_cast<double>(e + 1);
      }
      chart.series.push_back(
          {"ratio " + format_ratio(curves.ratios[ri]), epochs, kl[ri], ""});
    }
    return chart;
  };
  return {make_panel("Average case (mean KL over trials)", curves.mean_kl),
          make_panel("Best case (min KL over trials)", curves.min_kl)};
}

// ---------------------------------------------------------------- train --

struct TrainArgs {
  int qubits = 2;
  std::string target = "haar";
  std::string ratio = "1";
  int epochs = 100;
  std::uint64_t seed = 0;
  std::string out;
  AdamFlags adam;
  bool svg = false;
};

void cmd_train(const TrainArgs& args) {
  TrainingConfig config;
  config.n_qubits = args.qubits;
  config.epochs = args.epochs;
  try {
    config.ratio = parse_ratio(args.ratio);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  config.adam = args.adam.to_config();
  config.seed = args.seed;
  try {
    validate_config(config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const ResolvedTarget target = resolve_target(args.target, args.qubits, args.seed);
  const std::uint64_t gen_seed = derive_seed(args.seed, 0, SeedRole::GenInit);
  const std::uint64_t disc_seed = derive_seed(args.seed, 0, SeedRole::DiscInit);

  const TrialResult result = train(config, target.state, gen_seed, disc_seed);

  const fs::path out = resolve_out(args.out);
  json run_meta{
      {"version", std::string(kVersion)},
      {"kind", "train"},
      {"seed_derivation", std::string(kSeedDerivation)},
      {"config", to_json(config)},
      {"target",
       {{"source", target.source},
        {"path", target.path},
        {"statevector", to_json(target.state.state)}}},
      {"gen_seed", gen_seed},
      {"disc_seed", disc_seed},
      {"frameworks",
       {{"generator", to_json(build_generator(args.qubits))},
        {"discriminator", to_json(build_discriminator(args.qubits))}}},
      {"initial_kl", result.initial_kl},
      {"final_kl", result.records.back().kl},
  };
  write_text_file(out / "run.json", run_meta.dump(2) + "\n");
  write_text_file(out / "epochs.csv", epochs_csv(result));

  json params{{"gen_params", result.final_gen_params},
              {"disc_params", result.final_disc_params},
              {"final_kl", result.records.back().kl}};
  write_text_file(out / "final_params.json", params.dump(2) + "\n");

  if (args.svg) {
    write_text_file(out / "training.svg", render_svg(run_charts(result.records)));
  }

  std::cout << "train: " << config.epochs << " epochs at ratio "
            << format_ratio(config.ratio) << ", final KL "
            << format_double17(result.records.back().kl) << " nats -> "
            << out.string() << "\n";
}

// ---------------------------------------------------------------- sweep --

struct SweepArgs {
  int qubits = 2;
  int trials = 25;
  std::string ratios = "1/8,1/4,1/2,1,2,5,10,25,50";
  int epochs = -1;  // -1 = per-qubit default
  std::uint64_t seed = 0;
  std::string out;
  int jobs = 1;
  AdamFlags adam;
};

int default_epochs_for(int qubits) { return qubits >= 3 ? 350 : 100; }

void cmd_sweep(const SweepArgs& args) {
  SweepConfig config;
  config.n_qubits = args.qubits;
  config.trials = args.trials;
  try {
    config.ratios = parse_ratio_list(args.ratios);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  config.epochs = args.epochs > 0 ? args.epochs : default_epochs_for(args.qubits);
  config.master_seed = args.seed;
  config.adam = args.adam.to_config();
  config.jobs = args.jobs;
  if (config.n_qubits < 1 || config.n_qubits > 8 || config.trials < 1 ||
      config.jobs < 1) {
    throw UsageError("sweep needs 1-8 qubits, trials >= 1 and jobs >= 1");
  }

  const fs::path out = resolve_out(args.out);
  config.resume_dir = (out / "trials").string();

  const SweepResult sweep = run_sweep(config);
  const auto [curves, best] = aggregate_and_best(sweep);

  json ratios_json = json::array();
  for (const Ratio& ratio : sweep.config.ratios) {
    ratios_json.push_back(to_json(ratio));
  }
  json trials_json = json::array();
  for (const TrialSpec& spec : sweep.specs) {
    trials_json.push_back(json{{"index", spec.trial_index},
                               {"target_seed", spec.target_seed},
                               {"gen_seed", spec.gen_seed},
                               {"disc_seed", spec.disc_seed}});
  }
  json sweep_meta{
      {"version", std::string(kVersion)},
      {"kind", "sweep"},
      {"seed_derivation", std::string(kSeedDerivation)},
      {"n_qubits", config.n_qubits},
      {"trials", config.trials},
      {"epochs", config.epochs},
      {"master_seed", config.master_seed},
      {"adam", to_json(config.adam)},
      {"ratios", std::move(ratios_json)},
      {"trial_seeds", std::move(trials_json)},
  };
  write_text_file(out / "sweep.json", sweep_meta.dump(2) + "\n");
  write_text_file(out / "sweep.csv", sweep_csv(sweep));
  write_text_file(out / "aggregates.csv", aggregates_csv(curves));

  json best_json = to_json(best);
  best_json["version"] = std::string(kVersion);
  best_json["n_qubits"] = config.n_qubits;
  best_json["epochs_run"] = config.epochs;
  write_text_file(out / "best_settings.json", best_json.dump(2) + "\n");

  std::cout << "sweep: " << sweep.config.ratios.size() << " ratios x "
            << config.trials << " trials x " << config.epochs
            << " epochs -> " << out.string() << "\n"
            << "  average case: ratio " << format_ratio(best.average_case.ratio)
            << ", " << best.average_case.epochs << " epochs, KL "
            << format_double17(best.average_case.kl) << "\n"
            << "  best case:    ratio " << format_ratio(best.best_case.ratio)
            << ", " << best.best_case.epochs << " epochs, KL "
            << format_double17(best.best_case.kl) << "\n";
}

// ------------------------------------------------------------------ fit --

struct FitArgs {
  std::vector<std::string> inputs;
  std::string holdout;
  std::string out;
};

struct LoadedSettings {
  int n_qubits = 0;
  BestSettings settings;
  std::string file;
};

LoadedSettings load_best_settings(const std::string& file) {
  LoadedSettings loaded;
  loaded.file = file;
  json j;
  try {
    j = json::parse(read_text_file(file));
    loaded.n_qubits = j.at("n_qubits").get<int>();
    loaded.settings = best_settings_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError("cannot load best settings from '" + file + "': " + e.what());
  }
  return loaded;
}

std::string verdict_for_family(FitFamily family) {
  // the scaling question is polynomial vs exponential; linear counts as
  // polynomial (degree 1)
  return family == FitFamily::Exponential ? "exponential" : "polynomial";
}

void cmd_fit(const FitArgs& args) {
  if (args.inputs.size() < 2) {
    throw UsageError("fit needs at least 2 best_settings.json inputs");
  }
  std::vector<LoadedSettings> inputs;
  for (const std::string& file : args.inputs) {
    inputs.push_back(load_best_settings(file));
  }
  std::sort(inputs.begin(), inputs.end(),
            [](const auto& a, const auto& b) { return a.n_qubits < b.n_qubits; });
  for (std::size_t i = 1; i < inputs.size(); ++i) {
    if (inputs[i].n_qubits == inputs[i - 1].n_qubits) {
      throw UsageError("fit inputs must have distinct qubit counts");
    }
  }

  std::optional<LoadedSettings> holdout;
  if (!args.holdout.empty()) {
    holdout = load_best_settings(args.holdout);
    for (const LoadedSettings& input : inputs) {
      if (input.n_qubits == holdout->n_qubits) {
        throw UsageError("holdout qubit count collides with a fitted input");
      }
    }
  }

  struct Quantity {
    std::string name;
    std::function<double(const BestSettings&)> extract;
  };
  const std::vector<Quantity> quantities = {
      {"epochs",
       [](const BestSettings& s) { return static_cast<double>(s.average_case.epochs); }},
      {"average_ratio",
       [](const BestSettings& s) { return ratio_value(s.average_case.ratio); }},
      {"best_ratio",
       [](const BestSettings& s) { return ratio_value(s.best_case.ratio); }},
  };

  json quantities_json;
  std::map<std::string, int> verdict_votes;
  for (const Quantity& quantity : quantities) {
    std::vector<std::pair<double, double>> points;
    for (const LoadedSettings& input : inputs) {
      points.emplace_back(static_cast<double>(input.n_qubits),
                          quantity.extract(input.settings));
    }

    json entry;
    json points_json = json::array();
    for (const auto& [n, y] : points) {
      points_json.push_back(json::array({n, y}));
    }
    entry["points"] = std::move(points_json);

    std::vector<FitModel> models;
    json fits_json;
    for (FitFamily family :
         {FitFamily::Linear, FitFamily::Power, FitFamily::Exponential}) {
      const FitModel model = fit_curve(family, points);
      fits_json[fit_family_name(family)] = to_json(model);
      models.push_back(model);
    }
    entry["fits"] = std::move(fits_json);

    if (holdout) {
      const std::pair<double, double> point{
          static_cast<double>(holdout->n_qubits),
          quantity.extract(holdout->settings)};
      const SelectionResult selection = select_family(models, point);
      entry["holdout_point"] = json::array({point.first, point.second});
      json errors;
      for (const auto& [family, error] : selection.holdout_errors) {
        errors[fit_family_name(family)] = error;
      }
      entry["holdout_errors"] = std::move(errors);
      entry["selected"] = fit_family_name(selection.family);
      entry["verdict"] = verdict_for_family(selection.family);
      ++verdict_votes[verdict_for_family(selection.family)];
    }
    quantities_json[quantity.name] = std::move(entry);
  }

  json fits{
      {"version", std::string(kVersion)},
      {"kind", "fit"},
      {"quantities", std::move(quantities_json)},
  };
  json inputs_json = json::array();
  for (const LoadedSettings& input : inputs) {
    inputs_json.push_back(json{{"n_qubits", input.n_qubits}, {"file", input.file}});
  }
  fits["inputs"] = std::move(inputs_json);
  if (holdout) {
    fits["holdout"] =
        json{{"n_qubits", holdout->n_qubits}, {"file", holdout->file}};
    // majority across the three quantities decides the headline verdict
    std::string verdict = "polynomial";
    int best_votes = 0;
    for (const auto& [name, votes] : verdict_votes) {
      if (votes > best_votes) {
        best_votes = votes;
        verdict = name;
      }
    }
    fits["verdict"] = verdict;
  }

  const fs::path out = resolve_out(args.out);
  write_text_file(out / "fits.json", fits.dump(2) + "\n");
  if (holdout) {
    std::cout << "fit: verdict " << fits["verdict"].get<std::string>() << " -> "
              << (out / "fits.json").string() << "\n";
  } else {
    std::cout << "fit: coefficients written -> " << (out / "fits.json").string()
              << "\n";
  }
}

// --------------------------------------------------------------- report --

struct ReportArgs {
  std::string in;
  std::string out;
};

void report_run(const fs::path& in, const fs::path& out) {
  const auto records = parse_epochs_csv(read_text_file(in / "epochs.csv"));
  if (records.empty()) {
    throw std::runtime_error("epochs.csv holds no records");
  }
  write_text_file(out / "training.svg", render_svg(run_charts(records)));

  const json run_meta = json::parse(read_text_file(in / "run.json"));
  std::string md = "# Training run report\n\n";
  md += "| quantity | value |\n|---|---|\n";
  md += "| qubits | " +
        std::to_string(run_meta.at("config").at("n_qubits").get<int>()) + " |\n";
  md += "| ratio | " +
        format_ratio(ratio_from_json(run_meta.at("config").at("ratio"))) + " |\n";
  md += "| epochs | " + std::to_string(records.size()) + " |\n";
  md += "| initial KL (nats) | " +
        format_double17(run_meta.at("initial_kl").get<double>()) + " |\n";
  md += "| final KL (nats) | " + format_double17(records.back().kl) + " |\n";
  md += "| final generator loss | " + format_double17(records.back().gen_loss) +
        " |\n";
  md += "| final discriminator loss | " +
        format_double17(records.back().disc_loss) + " |\n";
  md += "\n![training curves](training.svg)\n";
  write_text_file(out / "summary.md", md);
}

void report_sweep(const fs::path& in, const fs::path& out) {
  const AggregateCurves curves =
      parse_aggregates_csv(read_text_file(in / "aggregates.csv"));
  write_text_file(out / "sweep_curves.svg", render_svg(sweep_charts(curves)));

  const json best = json::parse(read_text_file(in / "best_settings.json"));
  const BestSettings settings = best_settings_from_json(best);
  std::string md = "# Sweep report\n\n";
  md += "Best settings found (" + std::to_string(best.at("n_qubits").get<int>()) +
        " qubits):\n\n";
  md += "| case | ratio | epochs | KL (nats) |\n|---|---|---|---|\n";
  md += "| average | " + format_ratio(settings.average_case.ratio) + " | " +
        std::to_string(settings.average_case.epochs) + " | " +
        format_double17(settings.average_case.kl) + " |\n";
  md += "| best | " + format_ratio(settings.best_case.ratio) + " | " +
        std::to_string(settings.best_case.epochs) + " | " +
        format_double17(settings.best_case.kl) + " |\n";
  md += "\nFinal-epoch KL per ratio:\n\n";
  md += "| ratio | mean KL | min KL |\n|---|---|---|\n";
  for (std::size_t ri = 0; ri < curves.ratios.size(); ++ri) {
    md += "| " + format_ratio(curves.ratios[ri]) + " | " +
          format_double17(curves.mean_kl[ri].back()) + " | " +
          format_double17(curves.min_kl[ri].back()) + " |\n";
  }
  md += "\n![sweep curves](sweep_curves.svg)\n";
  write_text_file(out / "summary.md", md);
}

void cmd_report(const ReportArgs& args) {
  const fs::path in = resolve_out(args.in);
  const fs::path out = args.out.empty() ? in : resolve_out(args.out);
  if (fs::exists(in / "run.json")) {
    report_run(in, out);
  } else if (fs::exists(in / "sweep.json")) {
    report_sweep(in, out);
  } else {
    throw UsageError("no run.json or sweep.json under '" + in.string() + "'");
  }
  std::cout << "report -> " << out.string() << "\n";
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Fully-quantum GAN training on a statevector simulator", "qgan"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.footer(
      "Any subcommand accepts --config FILE (key=value lines or a flat JSON\n"
      "object keyed by long option names); explicit flags take precedence.\n"
      "Relative --out paths are rooted at $QGAN_OUT_ROOT when it is set.");

  auto train_args = std::make_shared<TrainArgs>();
  CLI::App* train_cmd =
      app.add_subcommand("train", "Train one QGAN against a target state");
  opt(train_cmd->add_option("--qubits", train_args->qubits, "data qubit count")
          ->required());
  opt(train_cmd->add_option("--target", train_args->target,
                            "'bell', 'haar', or a statevector JSON file")
          ->capture_default_str());
  opt(train_cmd->add_option("--ratio", train_args->ratio,
                            "training ratio d or d/g"));
  opt(train_cmd->add_option("--epochs", train_args->epochs, "epoch count")
          ->required());
  opt(train_cmd->add_option("--seed", train_args->seed, "master seed")
          ->capture_default_str());
  opt(train_cmd->add_option("--out", train_args->out, "output directory")
          ->required());
  train_cmd->add_flag("--svg", train_args->svg, "also write training.svg");
  train_args->adam.attach(train_cmd);
  train_cmd->callback([train_args]() { cmd_train(*train_args); });

  auto sweep_args = std::make_shared<SweepArgs>();
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Randomized trials across training ratios (shared trial set)");
  opt(sweep_cmd->add_option("--qubits", sweep_args->qubits, "data qubit count")
          ->required());
  opt(sweep_cmd->add_option("--trials", sweep_args->trials, "randomized trials")
          ->capture_default_str());
  opt(sweep_cmd->add_option("--ratios", sweep_args->ratios,
                            "comma-separated ratio list")
          ->capture_default_str());
  opt(sweep_cmd->add_option("--epochs", sweep_args->epochs,
                            "epoch count (default 100, or 350 for 3+ qubits)"));
  opt(sweep_cmd->add_option("--seed", sweep_args->seed, "master seed")
          ->capture_default_str());
  opt(sweep_cmd->add_option("--out", sweep_args->out, "output directory")
          ->required());
  opt(sweep_cmd->add_option("--jobs", sweep_args->jobs, "worker threads")
          ->capture_default_str());
  sweep_args->adam.attach(sweep_cmd);
  sweep_cmd->callback([sweep_args]() { cmd_sweep(*sweep_args); });

  auto fit_args = std::make_shared<FitArgs>();
  CLI::App* fit_cmd = app.add_subcommand(
      "fit", "Fit scaling curves over per-qubit best settings");
  fit_cmd->add_option("inputs", fit_args->inputs,
                      "best_settings.json files (distinct qubit counts)");
  opt(fit_cmd->add_option("--holdout", fit_args->holdout,
                          "held-out best_settings.json for model selection"));
  opt(fit_cmd->add_option("--out", fit_args->out, "output directory")
          ->required());
  fit_cmd->callback([fit_args]() { cmd_fit(*fit_args); });

  auto report_args = std::make_shared<ReportArgs>();
  CLI::App* report_cmd =
      app.add_subcommand("report", "Render SVG charts and a markdown summary");
  opt(report_cmd->add_option("--in", report_args->in, "run or sweep directory")
          ->required());
  opt(report_cmd->add_option("--out", report_args->out,
                             "output directory (default: --in)"));
  report_cmd->callback([report_args]() { cmd_report(*report_args); });

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config_tokens(std::move(args));
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "runtime failure: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace qgan::cli
