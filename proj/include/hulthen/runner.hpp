#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hulthen/model.hpp"
#include "hulthen/oracle.hpp"

namespace hulthen::cli {

/// Command-line misuse distinct from numerical failures; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exit-code contract shared by all subcommands.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

/// "2p" or "n_r,l" -> quantum numbers; throws UsageError for labels whose
/// n_r = N - l - 1 would be negative.
QuantumNumbers parse_state_label(const std::string& label);

/// Fixed 10-significant-digit float formatting used by every emitter.
std::string format_sig10(double x);
/// Published-precision formatting (7 decimals) for side-by-side comparisons.
std::string format_paper(double x);

enum class OutputFormat { csv, json, pretty };

OutputFormat parse_format(const std::string& name);
Method parse_method(const std::string& name);
double parse_c0(const std::string& text);

struct RunConfig {
  PotentialSpec spec;                     // atomic-unit defaults
  std::vector<std::string> states;        // labels, resolved on use
  std::vector<Method> methods = {Method::nu};
  OutputFormat format = OutputFormat::pretty;
  std::string out_path;                   // empty = stdout
  int grid_points = 8000;
  double rmax_factor = 50.0;
  bool quick = false;
  int threads = 0;                        // 0 = hardware concurrency
};

int run_energy(const RunConfig& cfg, std::ostream& os);
int run_wavefunction(const RunConfig& cfg, std::ostream& os);
int run_table(const RunConfig& cfg, std::ostream& os);
int run_compare(const RunConfig& cfg, std::ostream& os);
int run_verify(const RunConfig& cfg, std::ostream& os);

/// One measured invariant with its verdict.
struct VerifyCheck {
  std::string name;
  std::string state;
  double delta = 0.0;
  double c0 = 0.0;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  int failures = 0;
  bool pass = false;
};

struct VerifyOptions {
  bool quick = false;
  int threads = 0;
  /// Test hook: added to the superpotential B coefficient before the Riccati
  /// checks, so an injected fault shows up in the report.
  double b_perturbation = 0.0;
};

/// Runs the invariant sweep (analytic identities, residuals, normalization);
/// deterministic check order regardless of thread count.
VerifyReport verify_suite(const VerifyOptions& opts);

}  // namespace hulthen::cli
