#include "subtree/report.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace subtree {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "schema,generator,master_seed,experiment,n,p,p_value,trial,seed,metric,measured,target,deviation,flag\n";
  for (const auto& r : report.rows) {
    out << kReportSchemaVersion << ',' << csv_field(report.generator) << ',' << report.master_seed << ','
        << csv_field(r.experiment) << ',' << r.n << ',' << csv_field(r.p) << ',' << format_double(r.p_value) << ','
        << (r.trial ? std::to_string(*r.trial) : std::string()) << ',' << r.seed << ',' << csv_field(r.metric) << ','
        << csv_field(r.measured) << ',' << csv_field(r.target) << ',' << csv_field(r.deviation) << ','
        << csv_field(r.flag) << '\n';
  }
  return out.str();
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchemaVersion;
  j["experiment"] = report.experiment;
  j["generator"] = report.generator;
  j["master_seed"] = std::to_string(report.master_seed);
  j["violations"] = report.violations;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json row;
    row["experiment"] = r.experiment;
    row["generator"] = report.generator;
    row["master_seed"] = std::to_string(report.master_seed);
    row["n"] = r.n;
    row["p"] = r.p;
    row["p_value"] = format_double(r.p_value);
    row["trial"] = r.trial ? nlohmann::ordered_json(*r.trial) : nlohmann::ordered_json(nullptr);
    row["seed"] = std::to_string(r.seed);
    row["metric"] = r.metric;
    row["measured"] = r.measured;
    row["target"] = r.target;
    row["deviation"] = r.deviation;
    row["flag"] = r.flag;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace subtree
