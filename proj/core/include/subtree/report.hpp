#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace subtree {

inline constexpr int kReportSchemaVersion = 1;

/// One measurement. Rows are in long format: one metric per row, so every
/// experiment shares a schema. `trial` is empty for aggregate rows.
struct ReportRow {
  std::string experiment;
  int n = 0;
  std::string p;  // the schedule as configured, e.g. "0.5" or "log:3"
  double p_value = 0.0;
  std::optional<std::uint64_t> trial;
  std::uint64_t seed = 0;  // the trial seed (the master seed for aggregates)
  std::string metric;
  std::string measured;
  std::string target;
  std::string deviation;
  std::string flag;
};

struct Report {
  std::string experiment;
  std::string generator;
  std::uint64_t master_seed = 0;
  std::vector<ReportRow> rows;
  /// Failed assertions; nonzero makes the CLI exit with status 1.
  int violations = 0;
};

/// %.12g, with "nan"/"inf" spelled out.
std::string format_double(double x);

/// Header plus one line per row. Each line carries schema, generator and
/// master seed.
std::string to_csv(const Report& report);
std::string to_json(const Report& report);

}  // namespace subtree
