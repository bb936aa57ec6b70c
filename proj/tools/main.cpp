#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semibounded/circle.hpp"
#include "semibounded/random.hpp"
#include "semibounded/suites.hpp"
#include "semibounded/verma.hpp"
#include "semibounded/virasoro.hpp"

namespace sb = semibounded;

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out = "-";
  std::string format = "json";
  std::optional<double> tol_scale;
  bool no_timestamp = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "JSON config with a suite key and numeric overrides");
  cmd->add_option("--seed", opts.seed, "RNG seed (u64)");
  cmd->add_option("--out", opts.out, "output path, '-' for stdout");
  cmd->add_option("--format", opts.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--tol-scale", opts.tol_scale, "multiplies every tolerance")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-timestamp", opts.no_timestamp, "omit the timestamp field");
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw sb::DomainError("cannot write '" + path + "'");
  out << text;
}

int run_verify(const std::string& target, const CommonOptions& opts) {
  sb::verify::SuiteConfig base;
  if (!opts.config_path.empty()) base = sb::verify::load_config(opts.config_path);
  if (opts.seed) base.seed = *opts.seed;
  if (opts.tol_scale) base.tol_scale = *opts.tol_scale;

  std::string name = target.empty() ? base.suite : target;
  if (name.empty()) throw CLI::ValidationError("verify", "no suite given (argument or config 'suite' key)");

  std::vector<std::string> names = name == "all" ? sb::verify::suite_names() : std::vector<std::string>{name};
  std::vector<sb::verify::Report> reports;
  for (const auto& suite : names) {
    auto config = base;
    config.suite = suite;
    // Config overrides apply to the config's own suite only.
    if (name == "all" && !base.suite.empty() && base.suite != suite) config.params.clear();
    reports.push_back(sb::verify::run_suite(config));
  }
  sb::verify::emit(reports, sb::verify::parse_format(opts.format), opts.out, !opts.no_timestamp);

  bool ok = true;
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      if (!c.pass) std::cerr << "FAIL " << r.suite << "/" << c.id << " residual=" << c.residual
                                                 << " tolerance=" << c.tolerance << "\n";
    }
    ok = ok && r.passed();
  }
  return ok ? 0 : kExitFailures;
}

int run_orbit(int n, double s_max, int steps, int trials, std::uint64_t seed, double beta, double alpha, int degree,
              const std::string& out) {
  std::vector<double> s;
  for (int k = 0; k <= steps; ++k) s.push_back(s_max * k / steps);
  std::ostringstream os;
  os.precision(17);
  os << "kind,n,s,beta,alpha\n";
  const sb::virasoro::CartanCoords x{beta, alpha};
  const auto curve = sb::virasoro::projection_curve(x, n, s, degree);
  for (std::size_t k = 0; k < s.size(); ++k) {
    os << "curve," << n << "," << s[k] << "," << curve[k].beta << "," << curve[k].alpha << "\n";
  }
  // Individual samples of p(Ad_phi x) for random phi.
  sb::Rng rng(seed);
  const auto element = sb::virasoro::from_cartan(x, degree);
  for (int t = 0; t < trials; ++t) {
    const auto phi = sb::circle::random_diffeo(rng, degree);
    const auto p = sb::virasoro::cartan_projection(sb::virasoro::adjoint_action(phi, element));
    os << "sample,," << t << "," << p.beta << "," << p.alpha << "\n";
  }
  write_text(out, os.str());
  return 0;
}

int run_gram(int level, const std::string& c_text, const std::string& h_text, bool exact, const std::string& out) {
  std::ostringstream os;
  os.precision(17);
  const auto basis = sb::virasoro::partitions(level);
  os << "level " << level << " basis:";
  for (const auto& p : basis) {
    os << " (";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
  }
  os << "\n";
  if (exact) {
    const sb::virasoro::Rational c(c_text), h(h_text);
    const auto g = sb::virasoro::verma_gram<sb::virasoro::Rational>(basis, c, h);
    for (const auto& row : g) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].str();
      os << "\n";
    }
    os << "det " << sb::virasoro::determinant(g).str() << "\n";
  } else {
    const auto g = sb::virasoro::verma_gram<double>(basis, std::stod(c_text), std::stod(h_text));
    for (const auto& row : g) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
      os << "\n";
    }
  }
  write_text(out, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification suites for semibounded representations"};
  app.require_subcommand(1);

  CommonOptions verify_opts;
  std::string target;
  auto* verify = app.add_subcommand("verify", "run a suite (or 'all') and emit a report");
  verify->add_option("suite", target, "suite name or 'all'");
  add_common(verify, verify_opts);

  app.add_subcommand("list", "list suite names");

  int orbit_n = 2, orbit_steps = 20, orbit_trials = 0, orbit_degree = sb::circle::kDefaultDegree;
  double orbit_smax = 0.25, orbit_beta = 0.0, orbit_alpha = 1.0;
  std::uint64_t orbit_seed = sb::verify::kDefaultSeed;
  std::string orbit_out = "-";
  auto* orbit = app.add_subcommand("orbit", "CSV of Cartan projections of an adjoint orbit");
  orbit->add_option("-n,--mode", orbit_n, "root mode n")->check(CLI::PositiveNumber);
  orbit->add_option("--s-max", orbit_smax, "largest flow time");
  orbit->add_option("--steps", orbit_steps, "curve samples")->check(CLI::PositiveNumber);
  orbit->add_option("--samples", orbit_trials, "random diffeo samples")->check(CLI::NonNegativeNumber);
  orbit->add_option("--beta", orbit_beta, "central coordinate of x");
  orbit->add_option("--alpha", orbit_alpha, "constant field coordinate of x")->check(CLI::PositiveNumber);
  orbit->add_option("--degree", orbit_degree, "Fourier truncation degree")->check(CLI::PositiveNumber);
  orbit->add_option("--seed", orbit_seed, "RNG seed");
  orbit->add_option("--out", orbit_out, "output path, '-' for stdout");

  int gram_level = 2;
  std::string gram_c = "0", gram_h = "1", gram_out = "-";
  bool gram_exact = false;
  auto* gram = app.add_subcommand("gram", "print a Verma module Gram matrix");
  gram->add_option("level", gram_level, "level")->check(CLI::Range(1, sb::virasoro::kMaxVermaLevel));
  gram->add_option("-c,--central-charge", gram_c, "c (rational like 7/3 with --exact)");
  gram->add_option("-w,--weight", gram_h, "highest weight h");
  gram->add_flag("--exact", gram_exact, "exact rational arithmetic");
  gram->add_option("--out", gram_out, "output path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return run_verify(target, verify_opts);
    if (app.got_subcommand("list")) {
      for (const auto& name : sb::verify::suite_names()) std::cout << name << "\n";
      return 0;
    }
    if (*orbit) return run_orbit(orbit_n, orbit_smax, orbit_steps, orbit_trials, orbit_seed, orbit_beta, orbit_alpha,
                                 orbit_degree, orbit_out);
    if (*gram) return run_gram(gram_level, gram_c, gram_h, gram_exact, gram_out);
  } catch (const sb::verify::UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
