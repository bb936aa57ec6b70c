#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "semibounded/errors.hpp"
#include "semibounded/report.hpp"

namespace semibounded::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Suite name, seed, tolerance scale and flat numeric overrides.
struct SuiteConfig {
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  double tol_scale = 1.0;
  std::map<std::string, double> params;

  double param(const std::string& name, double fallback) const;
  int int_param(const std::string& name, int fallback) const;
};

class UnknownSuite : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Reads {"suite": ..., "seed": ..., "tol_scale": ..., <name>: number, ...}.
SuiteConfig parse_config(const std::string& json_text);
SuiteConfig load_config(const std::string& path);

std::vector<std::string> suite_names();

/// Deterministic given the config. Throws UnknownSuite or DomainError.
Report run_suite(const SuiteConfig& config);

}  // namespace semibounded::verify
