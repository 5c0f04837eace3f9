#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hulthen/runner.hpp"

namespace cli = hulthen::cli;

namespace {

struct CommonFlags {
  CLI::Option* mu = nullptr;
  CLI::Option* hbar = nullptr;
};

int dispatch(const cli::RunConfig& cfg, const std::string& name, std::ostream& os) {
  if (name == "energy") return cli::run_energy(cfg, os);
  if (name == "wavefunction") return cli::run_wavefunction(cfg, os);
  if (name == "table") return cli::run_table(cfg, os);
  if (name == "compare") return cli::run_compare(cfg, os);
  return cli::run_verify(cfg, os);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Bound states of the Hulthen potential: closed-form levels by the "
      "Nikiforov-Uvarov reduction and the SUSY shape-invariance chain, "
      "normalized eigenfunctions, and a finite-difference eigensolver for "
      "cross-validation."};
  app.require_subcommand(1);

  cli::RunConfig cfg;
  std::string c0_text = "1/12";
  std::vector<std::string> method_names{"nu"};
  std::string format_name = "pretty";
  CommonFlags flags;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--state", cfg.states, "state label ('2p') or 'n_r,l'");
    sub->add_option("--delta", cfg.spec.delta, "screening parameter");
    sub->add_option("--z", cfg.spec.z, "charge strength Z e^2");
    flags.mu = sub->add_option("--mu", cfg.spec.mu, "reduced mass");
    flags.hbar = sub->add_option("--hbar", cfg.spec.hbar, "reduced Planck constant");
    sub->add_option("--c0", c0_text, "centrifugal constant: 0, 1/12, or a number");
    sub->add_option("--method", method_names, "nu, susy, numeric-exact, numeric-approx")
        ->delimiter(',');
    sub->add_option("--format", format_name, "csv, json, pretty");
    sub->add_option("--grid-points", cfg.grid_points, "oracle grid points");
    sub->add_option("--rmax-factor", cfg.rmax_factor, "grid extent in units of 1/delta");
    sub->add_option("--out", cfg.out_path, "write output to this path");
    sub->add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
    sub->add_flag("--quick", cfg.quick, "reduced verification sweep");
    sub->set_config("--config");
  };

  add_common(app.add_subcommand("energy", "energies of the requested states"));
  add_common(app.add_subcommand("wavefunction", "normalized radial eigenfunctions"));
  add_common(app.add_subcommand("table", "regenerate the level tables and the published comparison"));
  add_common(app.add_subcommand("compare", "side-by-side energies of several methods"));
  add_common(app.add_subcommand("verify", "run the invariant suite"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::exit_usage;
  }

  try {
    const char* atomic_env = std::getenv("HULTHEN_ATOMIC_UNITS");
    if (atomic_env != nullptr && std::string(atomic_env) == "0") {
      if (flags.mu->count() == 0 || flags.hbar->count() == 0)
        throw cli::UsageError(
            "HULTHEN_ATOMIC_UNITS=0: --mu and --hbar must be supplied explicitly");
    }
    cfg.spec.c0 = cli::parse_c0(c0_text);
    cfg.format = cli::parse_format(format_name);
    cfg.methods.clear();
    for (const std::string& name : method_names) cfg.methods.push_back(cli::parse_method(name));

    const std::string sub = app.get_subcommands().front()->get_name();
    if (cfg.out_path.empty()) return dispatch(cfg, sub, std::cout);
    std::ofstream out(cfg.out_path);
    if (!out) {
      std::cerr << "error: cannot open output file: " << cfg.out_path << '\n';
      return cli::exit_check_failed;
    }
    return dispatch(cfg, sub, out);
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return cli::exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_check_failed;
  }
}
