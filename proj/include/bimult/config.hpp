#pragma once

#include <map>
#include <optional>
#include <string>

#include "bimult/types.hpp"

namespace bimult {

/// Flat key-value experiment config with dotted keys, e.g.
///
///   op = verify.restriction
///   symbol = tentcell-periodized
///   triple.p1 = 2
///   grid.L = 8
///   grid.N = 4096
///   seed = 42
///   trials = 50
///   output = report.json
///   format = json
///
/// Lines starting with '#' are comments. Values are free text up to end of
/// line. "inf" parses as infinity for exponents.
class ExperimentConfig {
 public:
  static ExperimentConfig parse_file(const std::string& path);
  static ExperimentConfig parse_text(const std::string& text);

  bool has(const std::string& key) const { return kv_.count(key) > 0; }
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  uint64_t get_seed(uint64_t fallback = 1) const;

  /// Holder-related triple from triple.p1/p2/p3; ConfigError citing the
  /// relation when it fails.
  std::optional<ExponentTriple> triple() const;

  /// Grid from grid.L / grid.N: requires N to be a power-of-two multiple of
  /// 2L so the grid holds the integers and the transforms stay fast.
  std::optional<Grid1D> grid() const;

  const std::map<std::string, std::string>& entries() const { return kv_; }

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace bimult
