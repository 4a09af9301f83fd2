#include "bimult/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace bimult {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  if (v == "inf" || v == "Inf" || v == "INF") return kInf;
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config field '" + key + "': cannot parse number from '" + v + "'");
  }
}

}  // namespace

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

ExperimentConfig ExperimentConfig::parse_text(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    cfg.kv_[key] = value;
  }
  return cfg;
}

std::string ExperimentConfig::get_string(const std::string& key) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) throw ConfigError("config field '" + key + "' is required");
  return it->second;
}

std::string ExperimentConfig::get_string(const std::string& key,
                                         const std::string& fallback) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

double ExperimentConfig::get_double(const std::string& key) const {
  return parse_double(key, get_string(key));
}

double ExperimentConfig::get_double(const std::string& key, double fallback) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? fallback : parse_double(key, it->second);
}

int ExperimentConfig::get_int(const std::string& key) const {
  double d = get_double(key);
  int v = static_cast<int>(std::llround(d));
  if (d != static_cast<double>(v))
    throw ConfigError("config field '" + key + "' must be an integer");
  return v;
}

int ExperimentConfig::get_int(const std::string& key, int fallback) const {
  return has(key) ? get_int(key) : fallback;
}

uint64_t ExperimentConfig::get_seed(uint64_t fallback) const {
  if (!has("seed")) return fallback;
  return static_cast<uint64_t>(std::stoull(get_string("seed")));
}

std::optional<ExponentTriple> ExperimentConfig::triple() const {
  if (!has("triple.p1") && !has("triple.p2") && !has("triple.p3")) return std::nullopt;
  double p1 = get_double("triple.p1");
  double p2 = get_double("triple.p2");
  double p3 = get_double("triple.p3");
  try {
    return ExponentTriple(p1, p2, p3);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config fields triple.p1/p2/p3: ") + e.what() +
                      " (need 1/p1 + 1/p2 = 1/p3)");
  }
}

std::optional<Grid1D> ExperimentConfig::grid() const {
  if (!has("grid.L") && !has("grid.N")) return std::nullopt;
  double L = get_double("grid.L");
  int N = get_int("grid.N");
  Grid1D g;
  try {
    g = Grid1D(L, N);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config fields grid.L/grid.N: ") + e.what());
  }
  double ratio = N / (2.0 * L);
  int r = static_cast<int>(std::llround(ratio));
  bool pow2 = r > 0 && (r & (r - 1)) == 0 && ratio == static_cast<double>(r);
  if (!pow2)
    throw ConfigError(
        "config field 'grid.N': N must be a power-of-two multiple of 2L");
  return g;
}

}  // namespace bimult
