#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace semibounded::verify {

/// One named comparison. Boolean checks use residual 0/1 and tolerance 0.
struct Check {
  std::string id;
  std::string anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  std::map<std::string, std::string> environment;
  std::string timestamp;

  /// pass = residual <= tolerance; non-finite residuals fail.
  void add(std::string id, std::string anchor, double residual, double tolerance);
  void add_flag(std::string id, std::string anchor, bool ok);
  bool passed() const;
  int failures() const;
  /// Orders checks by id.
  void normalize();
};

enum class Format { json, csv };

Format parse_format(const std::string& name);

/// Stable field order: suite, seed, environment, timestamp (optional), checks.
std::string to_json(const Report& report, bool include_timestamp = true);
std::string to_json(const std::vector<Report>& reports, bool include_timestamp = true);
Report report_from_json(const std::string& text);

/// Header plus one row per check: suite,id,anchor,residual,tolerance,pass.
std::string to_csv(const std::vector<Report>& reports);

/// Writes to `path` ("-" is stdout); throws std::runtime_error if unwritable.
void emit(const std::vector<Report>& reports, Format format, const std::string& path, bool include_timestamp = true);

}  // namespace semibounded::verify
