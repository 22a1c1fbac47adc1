#include "subtree/experiment_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace subtree {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + ": '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument("bad " + what + ": '" + text + "'");
  return v;
}

long long parse_integer(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + ": '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("bad " + what + ": '" + text + "'");
  return v;
}

int parse_positive(const std::string& text, const std::string& what) {
  const long long v = parse_integer(text, what);
  if (v < 1 || v > 1'000'000'000) throw std::invalid_argument(what + " must be positive");
  return static_cast<int>(v);
}

}  // namespace

PSchedule PSchedule::parse(const std::string& raw) {
  const std::string text = trim(raw);
  PSchedule s;
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    s.kind_ = Kind::constant;
    s.c_ = parse_double(text, "p");
    if (s.c_ < 0.0 || s.c_ > 1.0) throw std::invalid_argument("constant p must lie in [0, 1]");
  } else {
    const std::string name = text.substr(0, colon);
    if (name == "log") {
      s.kind_ = Kind::log;
    } else if (name == "sqrt") {
      s.kind_ = Kind::sqrt;
    } else {
      throw std::invalid_argument("unknown p schedule '" + name + "' (use a number, log:c or sqrt:c)");
    }
    s.c_ = parse_double(text.substr(colon + 1), "p coefficient");
    if (!(s.c_ > 0.0)) throw std::invalid_argument("p coefficient must be positive");
  }
  s.text_ = text;
  return s;
}

double PSchedule::at(int n) const {
  double p = c_;
  if (kind_ == Kind::log) p = n > 1 ? c_ * std::log(static_cast<double>(n)) / n : 1.0;
  if (kind_ == Kind::sqrt) p = c_ / std::sqrt(static_cast<double>(n));
  return std::clamp(p, 0.0, 1.0);
}

std::map<std::string, std::string> parse_config_text(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw std::invalid_argument("config line " + std::to_string(number) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  return parse_config_text(in);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_positive(part, "n"));
  if (out.empty()) throw std::invalid_argument("empty n grid");
  return out;
}

void apply_settings(ExperimentConfig& config, const std::map<std::string, std::string>& settings) {
  for (const auto& [key, value] : settings) {
    if (key == "n") {
      config.n_grid = parse_int_list(value);
    } else if (key == "p") {
      config.p_grid.clear();
      for (const auto& part : split(value, ',')) config.p_grid.push_back(PSchedule::parse(part));
      if (config.p_grid.empty()) throw std::invalid_argument("empty p grid");
    } else if (key == "trials") {
      config.trials = parse_positive(value, "trials");
    } else if (key == "seed") {
      std::size_t used = 0;
      unsigned long long s = 0;
      try {
        if (value.empty() || value[0] == '-') throw std::invalid_argument("negative");
        s = std::stoull(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != value.size()) throw std::invalid_argument("bad seed: '" + value + "'");
      config.master = Seed{s};
    } else if (key == "threads") {
      config.threads = parse_positive(value, "threads");
    } else if (key == "max-exact-n") {
      config.max_exact_n = parse_positive(value, "max-exact-n");
    } else if (key == "k") {
      const long long k = parse_integer(value, "k");
      if (k < 0 || k > 64) throw std::invalid_argument("k must lie in [0, 64]");
      config.k = static_cast<int>(k);
    } else if (key == "out") {
      config.out = value;
    } else if (key == "format") {
      if (value != "csv" && value != "json") throw std::invalid_argument("format must be csv or json");
      config.format = value;
    } else if (key == "experiment") {
      if (!config.name.empty() && value != config.name) {
        throw std::invalid_argument("config names experiment '" + value + "' but '" + config.name + "' was requested");
      }
      config.name = value;
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
}

}  // namespace subtree
