#include "semibounded/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "semibounded/errors.hpp"

namespace semibounded::verify {

namespace {

using Json = nlohmann::ordered_json;

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json report_json(const Report& r, bool include_timestamp) {
  Json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  Json env = Json::object();
  for (const auto& [k, v] : r.environment) env[k] = v;
  j["environment"] = env;
  if (include_timestamp) j["timestamp"] = r.timestamp;
  j["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["id"] = c.id;
    cj["anchor"] = c.anchor;
    cj["residual"] = number_or_null(c.residual);
    cj["tolerance"] = number_or_null(c.tolerance);
    cj["pass"] = c.pass;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

void Report::add(std::string id, std::string anchor, double residual, double tolerance) {
  const bool ok = std::isfinite(residual) && residual <= tolerance;
  checks.push_back({std::move(id), std::move(anchor), residual, tolerance, ok});
}

void Report::add_flag(std::string id, std::string anchor, bool ok) {
  checks.push_back({std::move(id), std::move(anchor), ok ? 0.0 : 1.0, 0.0, ok});
}

bool Report::passed() const { return failures() == 0; }

int Report::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

void Report::normalize() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw DomainError("unknown format '" + name + "' (expected json or csv)");
}

std::string to_json(const Report& report, bool include_timestamp) {
  return report_json(report, include_timestamp).dump(2) + "\n";
}

std::string to_json(const std::vector<Report>& reports, bool include_timestamp) {
  if (reports.size() == 1) return to_json(reports.front(), include_timestamp);
  Json all = Json::array();
  for (const auto& r : reports) all.push_back(report_json(r, include_timestamp));
  return all.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  const Json j = Json::parse(text);
  Report r;
  r.suite = j.at("suite").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& [k, v] : j.at("environment").items()) r.environment[k] = v.get<std::string>();
  if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
  for (const auto& cj : j.at("checks")) {
    Check c;
    c.id = cj.at("id").get<std::string>();
    c.anchor = cj.at("anchor").get<std::string>();
    c.residual = cj.at("residual").is_null() ? std::nan("") : cj.at("residual").get<double>();
    c.tolerance = cj.at("tolerance").is_null() ? std::nan("") : cj.at("tolerance").get<double>();
    c.pass = cj.at("pass").get<bool>();
    r.checks.push_back(c);
  }
  return r;
}

std::string to_csv(const std::vector<Report>& reports) {
  std::ostringstream os;
  os << "suite,id,anchor,residual,tolerance,pass\n";
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      os << csv_field(r.suite) << ',' << csv_field(c.id) << ',' << csv_field(c.anchor) << ','
         << format_double(c.residual) << ',' << format_double(c.tolerance) << ',' << (c.pass ? "true" : "false")
         << '\n';
    }
  }
  return os.str();
}

void emit(const std::vector<Report>& reports, Format format, const std::string& path, bool include_timestamp) {
  const std::string text = format == Format::json ? to_json(reports, include_timestamp) : to_csv(reports);
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report to '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed while writing report to '" + path + "'");
}

}  // namespace semibounded::verify
