#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qgan/engine.hpp"
#include "qgan/harness.hpp"

// CSV artifact schemas. Every file starts with a versioned comment line so
// downstream tooling can detect drift; numbers are printed with %.17g and
// therefore round-trip exactly.

namespace qgan {

inline constexpr std::string_view kVersion = "0.1.0";

std::string format_double17(double value);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// epoch,gen_loss,disc_loss,kl_nats
std::string epochs_csv(const TrialResult& result);
std::vector<EpochRecord> parse_epochs_csv(const std::string& text);

/// ratio_num,ratio_den,trial,epoch,gen_loss,disc_loss,kl_nats
std::string sweep_csv(const SweepResult& sweep);

/// ratio_num,ratio_den,epoch,mean_kl,min_kl
std::string aggregates_csv(const AggregateCurves& curves);
AggregateCurves parse_aggregates_csv(const std::string& text);

}  // namespace qgan
