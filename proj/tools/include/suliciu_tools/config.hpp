#pragma once

#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "suliciu/lax_friedrichs.hpp"
#include "suliciu/output.hpp"
#include "suliciu/verification.hpp"

namespace suliciu::tools {

/// Bad or missing configuration; `key()` names the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error("config key '" + key + "': " + what), key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Limits checked by `verify`; exceeding any of them exits with status 5.
struct Thresholds {
  double max_shock_error_dx = 2.0;
  double max_weight_error_rel = 0.15;
  double max_plateau_error = 1e-3;
  double max_weak_residual = 1e-6;
  double max_conservation_drift = 1e-12;
};

struct RunConfig {
  Params params;
  State left;
  State right;
  fv::Grid grid{-1.0, 1.0, 1780};
  double cfl = 0.1969889;
  fv::TimeStepPolicy policy = fv::TimeStepPolicy::kCourant;
  double t_final = 0.1;
  std::vector<double> snapshots;
  std::string out_dir = ".";
  verify::ReportOptions report;
  std::vector<std::size_t> refinements{445, 890, 1780};
  std::optional<double> sample_at;
  Thresholds thresholds;

  fv::SimConfig sim() const;
};

using KeyValues = std::map<std::string, std::string>;

/// Flat `key = value` lines; blank lines and lines starting with '#' or ';'
/// are skipped. Later keys override earlier ones.
KeyValues parse_key_values(std::istream& in, const std::string& source);

/// Builds and validates a RunConfig. Triples may use fractions ("14/5").
/// Unknown keys and malformed or invalid values raise ConfigError.
RunConfig resolve(const KeyValues& kv);

/// Every resolved key with doubles printed as %.17g, so feeding the result
/// back through resolve() reproduces the same configuration.
KeyValues to_key_values(const RunConfig& c);

std::string to_ini(const KeyValues& kv);

void write_config(io::JsonWriter& json, const KeyValues& kv);

}  // namespace suliciu::tools
