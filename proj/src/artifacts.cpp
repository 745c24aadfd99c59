#include "qgan/artifacts.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qgan {

namespace {

constexpr std::string_view kEpochsHeader = "# qgan epochs csv v1";
constexpr std::string_view kSweepHeader = "# qgan sweep csv v1";
constexpr std::string_view kAggregatesHeader = "# qgan aggregates csv v1";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_number(const std::string& field) {
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (end != field.c_str() + field.size() || field.empty()) {
    throw std::invalid_argument("bad numeric CSV field '" + field + "'");
  }
  return value;
}

// lines after the version comment and the column header
std::vector<std::string> data_lines(const std::string& text,
                                    std::string_view expected_header) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  bool saw_version = false, saw_columns = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!saw_version) {
      if (line != expected_header) {
        throw std::invalid_argument("unexpected CSV header '" + line + "'");
      }
      saw_version = true;
      continue;
    }
    if (!saw_columns) {
      saw_columns = true;  // column-name line
      continue;
    }
    lines.push_back(line);
  }
  if (!saw_version) {
    throw std::invalid_argument("CSV is missing its version header");
  }
  return lines;
}

}  // namespace

std::string format_double17(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path.string());
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << text;
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

std::string epochs_csv(const TrialResult& result) {
  std::string out{kEpochsHeader};
  out += "\nepoch,gen_loss,disc_loss,kl_nats\n";
  for (const EpochRecord& r : result.records) {
    out += std::to_string(r.epoch);
    out += ",";
    out += format_double17(r.gen_loss);
    out += ",";
    out += format_double17(r.disc_loss);
    out += ",";
    out += format_double17(r.kl);
    out += "\n";
  }
  return out;
}

std::vector<EpochRecord> parse_epochs_csv(const std::string& text) {
  std::vector<EpochRecord> records;
  for (const std::string& line : data_lines(text, kEpochsHeader)) {
    const auto fields = split(line, ',');
    if (fields.size() != 4) {
      throw std::invalid_argument("epochs CSV row needs 4 fields");
    }
    EpochRecord r;
    r.epoch = static_cast<int>(parse_number(fields[0]));
    r.gen_loss = parse_number(fields[1]);
    r.disc_loss = parse_number(fields[2]);
    r.kl = parse_number(fields[3]);
    records.push_back(r);
  }
  return records;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string out{kSweepHeader};
  out += "\nratio_num,ratio_den,trial,epoch,gen_loss,disc_loss,kl_nats\n";
  for (std::size_t ri = 0; ri < sweep.results.size(); ++ri) {
    const Ratio& ratio = sweep.config.ratios[ri];
    for (std::size_t ti = 0; ti < sweep.results[ri].size(); ++ti) {
      for (const EpochRecord& r : sweep.results[ri][ti].records) {
        out += std::to_string(ratio.disc_updates);
        out += ",";
        out += std::to_string(ratio.gen_updates);
        out += ",";
        out += std::to_string(ti);
        out += ",";
        out += std::to_string(r.epoch);
        out += ",";
        out += format_double17(r.gen_loss);
        out += ",";
        out += format_double17(r.disc_loss);
        out += ",";
        out += format_double17(r.kl);
        out += "\n";
      }
    }
  }
  return out;
}

std::string aggregates_csv(const AggregateCurves& curves) {
  std::string out{kAggregatesHeader};
  out += "\nratio_num,ratio_den,epoch,mean_kl,min_kl\n";
  for (std::size_t ri = 0; ri < curves.ratios.size(); ++ri) {
    for (std::size_t e = 0; e < curves.mean_kl[ri].size(); ++e) {
      out += std::to_string(curves.ratios[ri].disc_updates);
      out += ",";
      out += std::to_string(curves.ratios[ri].gen_updates);
      out += ",";
      out += std::to_string(e + 1);
      out += ",";
      out += format_double17(curves.mean_kl[ri][e]);
      out += ",";
      out += format_double17(curves.min_kl[ri][e]);
      out += "\n";
    }
  }
  return out;
}

AggregateCurves parse_aggregates_csv(const std::string& text) {
  AggregateCurves curves;
  for (const std::string& line : data_lines(text, kAggregatesHeader)) {
    const auto fields = split(line, ',');
    if (fields.size() != 5) {
      throw std::invalid_argument("aggregates CSV row needs 5 fields");
    }
    Ratio ratio{static_cast<std::int64_t>(parse_number(fields[0])),
                static_cast<std::int64_t>(parse_number(fields[1]))};
    if (curves.ratios.empty() || !(curves.ratios.back() == ratio)) {
      curves.ratios.push_back(ratio);
      curves.mean_kl.emplace_back();
      curves.min_kl.emplace_back();
    }
    curves.mean_kl.back().push_back(parse_number(fields[3]));
    curves.min_kl.back().push_back(parse_number(fields[4]));
  }
  return curves;
}

}  // namespace qgan
