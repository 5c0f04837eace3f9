#include "hulthen/runner.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "hulthen/nu.hpp"
#include "hulthen/specfun.hpp"
#include "hulthen/susy.hpp"
#include "hulthen/tables.hpp"

namespace hulthen::cli {

using nlohmann::json;

namespace {

constexpr const char* orbital_letters = "spdfghik";

std::string state_name(const QuantumNumbers& q) {
  if (q.l < 8) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%d%c", q.principal(), orbital_letters[q.l]);
    return buf;
  }
  return std::to_string(q.n_r) + "," + std::to_string(q.l);
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i; (i = next.fetch_add(1)) < n;) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
        next.store(n);
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace

QuantumNumbers parse_state_label(const std::string& label) {
  const auto comma = label.find(',');
  if (comma != std::string::npos) {
    try {
      size_t pos = 0;
      const int n_r = std::stoi(label.substr(0, comma), &pos);
      if (pos != comma) throw std::invalid_argument(label);
      const std::string rest = label.substr(comma + 1);
      const int l = std::stoi(rest, &pos);
      if (pos != rest.size()) throw std::invalid_argument(label);
      if (n_r < 0 || l < 0)
        throw UsageError("state '" + label + "': n_r and l must both be >= 0");
      return {n_r, l};
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("state '" + label + "': expected 'n_r,l' with two integers");
    }
  }
  size_t i = 0;
  while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
  if (i == 0 || i + 1 != label.size())
    throw UsageError("state '" + label + "': expected '<N><letter>' such as 2p, or 'n_r,l'");
  const int n_big = std::stoi(label.substr(0, i));
  const char letter = static_cast<char>(std::tolower(static_cast<unsigned char>(label[i])));
  const char* hit = std::strchr(orbital_letters, letter);
  if (hit == nullptr || letter == '\0')
    throw UsageError("state '" + label + "': unknown orbital letter '" + letter + "'");
  const int l = static_cast<int>(hit - orbital_letters);
  const int n_r = n_big - l - 1;
  if (n_r < 0)
    throw UsageError("state '" + label + "': n_r = N - l - 1 = " + std::to_string(n_r) +
                     " must be >= 0");
  return {n_r, l};
}

std::string format_sig10(double x) {
  if (std::isnan(x)) return "nan";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string format_paper(double x) {
  if (std::isnan(x)) return "";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.7f", x);
  return buf;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "pretty") return OutputFormat::pretty;
  throw UsageError("unknown format '" + name + "' (expected csv, json, or pretty)");
}

Method parse_method(const std::string& name) {
  if (name == "nu") return Method::nu;
  if (name == "susy") return Method::susy;
  if (name == "numeric-exact") return Method::numeric_exact;
  if (name == "numeric-approx") return Method::numeric_approx;
  throw UsageError("unknown method '" + name +
                   "' (expected nu, susy, numeric-exact, numeric-approx)");
}

double parse_c0(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const double num = std::stod(text.substr(0, slash));
      const double den = std::stod(text.substr(slash + 1));
      if (den == 0.0) throw UsageError("c0 '" + text + "': division by zero");
      const double v = num / den;
      if (v < 0.0) throw UsageError("c0 must be >= 0");
      return v;
    }
    const double v = std::stod(text);
    if (v < 0.0) throw UsageError("c0 must be >= 0");
    return v;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("c0 '" + text + "': expected 0, 1/12, or a number");
  }
}

namespace {

struct EnergyRow {
  std::string state;
  QuantumNumbers q;
  Method method = Method::nu;
  double energy = std::numeric_limits<double>::quiet_NaN();
  bool bound = false;
  std::optional<EnergyResult> analytic;
  std::optional<double> err_estimate;
  std::optional<int> node_count;
  std::optional<bool> converged;
};

oracle::GridSpec config_grid(const RunConfig& cfg, const PotentialSpec& spec) {
  return {1e-6 / spec.delta, cfg.rmax_factor / spec.delta, cfg.grid_points};
}

EnergyRow compute_energy_row(const RunConfig& cfg, const PotentialSpec& spec,
                             const std::string& label, const QuantumNumbers& q, Method m) {
  EnergyRow row;
  row.state = label;
  row.q = q;
  row.method = m;
  switch (m) {
    case Method::nu: {
      row.analytic = nu::energy_nu(spec, q);
      break;
    }
    case Method::susy: {
      row.analytic = susy::energy_susy(spec, q);
      break;
    }
    default: {
      const auto mode = m == Method::numeric_exact ? CentrifugalMode::exact
                                                   : CentrifugalMode::approximated;
      const auto spectrum = oracle::solve_radial(spec, q.l, mode, config_grid(cfg, spec));
      for (size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
        if (spectrum.node_counts[i] == q.n_r) {
          row.energy = spectrum.eigenvalues[i];
          row.bound = true;
          row.err_estimate = spectrum.error_estimates[i];
          row.node_count = spectrum.node_counts[i];
          row.converged = spectrum.converged;
          break;
        }
      }
      return row;
    }
  }
  row.energy = row.analytic->energy;
  row.bound = row.analytic->bound;
  return row;
}

json row_to_json(const EnergyRow& row, const PotentialSpec& spec) {
  json j{{"state", row.state},   {"n_r", row.q.n_r},
         {"l", row.q.l},         {"delta", spec.delta},
         {"c0", spec.c0},        {"method", method_name(row.method)},
         {"energy", row.energy}, {"bound", row.bound}};
  if (row.analytic) {
    j["intermediates"] = {{"alpha_sq", row.analytic->dimensionless.alpha_sq},
                          {"epsilon_sq", row.analytic->dimensionless.epsilon_sq},
                          {"sqrt_c", row.analytic->sqrt_c},
                          {"big_k", row.analytic->big_k}};
  } else {
    j["intermediates"] = {{"error_estimate", row.err_estimate ? json(*row.err_estimate) : json()},
                          {"node_count", row.node_count ? json(*row.node_count) : json()},
                          {"converged", row.converged ? json(*row.converged) : json()}};
  }
  return j;
}

void emit_energy_csv(const std::vector<EnergyRow>& rows, const PotentialSpec& spec,
                     std::ostream& os) {
  os << "state,n_r,l,delta,c0,method,energy,bound\n";
  for (const auto& row : rows) {
    os << row.state << ',' << row.q.n_r << ',' << row.q.l << ',' << format_sig10(spec.delta)
       << ',' << format_sig10(spec.c0) << ',' << method_name(row.method) << ','
       << format_sig10(row.energy) << ',' << (row.bound ? "true" : "false") << '\n';
  }
}

void emit_energy_pretty(const std::vector<EnergyRow>& rows, const PotentialSpec& spec,
                        std::ostream& os) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-6s %-4s %-3s %-10s %-12s %-15s %-16s %s\n", "state", "n_r",
                "l", "delta", "c0", "method", "energy", "bound");
  os << buf;
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%-6s %-4d %-3d %-10s %-12s %-15s %-16s %s\n",
                  row.state.c_str(), row.q.n_r, row.q.l, format_sig10(spec.delta).c_str(),
                  format_sig10(spec.c0).c_str(), method_name(row.method),
                  format_sig10(row.energy).c_str(), row.bound ? "true" : "false");
    os << buf;
  }
}

}  // namespace

int run_energy(const RunConfig& cfg, std::ostream& os) {
  cfg.spec.validate();
  std::vector<EnergyRow> rows;
  for (const std::string& label : cfg.states) {
    const QuantumNumbers q = parse_state_label(label);
    for (Method m : cfg.methods) rows.push_back(compute_energy_row(cfg, cfg.spec, label, q, m));
  }
  switch (cfg.format) {
    case OutputFormat::csv:
      emit_energy_csv(rows, cfg.spec, os);
      break;
    case OutputFormat::json: {
      json arr = json::array();
      for (const auto& row : rows) arr.push_back(row_to_json(row, cfg.spec));
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::pretty:
      emit_energy_pretty(rows, cfg.spec, os);
      break;
  }
  return exit_ok;
}

int run_wavefunction(const RunConfig& cfg, std::ostream& os) {
  cfg.spec.validate();
  const double r_max = cfg.rmax_factor / cfg.spec.delta;
  const int n = cfg.grid_points;
  const bool csv = cfg.format == OutputFormat::csv;
  json arr = json::array();
  if (csv) os << "state,n_r,l,delta,c0,r,chi,R\n";
  for (const std::string& label : cfg.states) {
    const QuantumNumbers q = parse_state_label(label);
    const nu::RadialWavefunction chi(cfg.spec, q);
    if (cfg.format == OutputFormat::pretty) {
      char buf[200];
      std::snprintf(buf, sizeof buf,
                    "%s: E = %s   C_n = %s   sqrt_c = %s   K = %s   degree = %d\n",
                    label.c_str(), format_sig10(chi.energy()).c_str(),
                    format_sig10(chi.norm_const()).c_str(), format_sig10(chi.sqrt_c()).c_str(),
                    format_sig10(chi.big_k()).c_str(), chi.degree());
      os << buf;
      continue;
    }
    json samples = json::array();
    for (int i = 1; i <= n; ++i) {
      const double r = r_max * i / n;
      const double value = chi.chi_r(r);
      if (csv) {
        os << label << ',' << q.n_r << ',' << q.l << ',' << format_sig10(cfg.spec.delta) << ','
           << format_sig10(cfg.spec.c0) << ',' << format_sig10(r) << ',' << format_sig10(value)
           << ',' << format_sig10(value / r) << '\n';
      } else {
        samples.push_back({{"r", r}, {"chi", value}, {"R", value / r}});
      }
    }
    if (!csv) {
      arr.push_back({{"state", label},
                     {"n_r", q.n_r},
                     {"l", q.l},
                     {"delta", cfg.spec.delta},
                     {"c0", cfg.spec.c0},
                     {"energy", chi.energy()},
                     {"norm_const", chi.norm_const()},
                     {"sqrt_c", chi.sqrt_c()},
                     {"big_k", chi.big_k()},
                     {"samples", samples}});
    }
  }
  if (cfg.format == OutputFormat::json) os << arr.dump(2) << '\n';
  return exit_ok;
}

namespace {

struct Discrepancy {
  const LevelRow* row;
  int column;
  double printed;
  double computed;
};

struct ReferenceComputed {
  const ReferenceRow* row;
  double analytic;  // closed form, C0 = 1/12, signed
  double numeric_exact = std::numeric_limits<double>::quiet_NaN();  // signed
  bool have_numeric = false;
};

PotentialSpec table_spec(double delta, double c0) {
  PotentialSpec spec;  // the published grids assume atomic units and Z = 1
  spec.delta = delta;
  spec.c0 = c0;
  return spec;
}

double level_value(const LevelRow& row, int col) {
  const PotentialSpec spec = table_spec(row.delta, level_column_c0[col]);
  const QuantumNumbers q{row.n_r, row.l};
  return level_column_method[col] == Method::nu ? nu::energy_nu(spec, q).energy
                                                : susy::energy_susy(spec, q).energy;
}

}  // namespace

int run_table(const RunConfig& cfg, std::ostream& os) {
  constexpr double printed_tol = 5e-7;   // half-ulp of the published precision
  constexpr double reference_tol = 1e-4;  // oracle vs published numerics, delta <= 0.1

  std::vector<const LevelRow*> level_filter;
  std::vector<const ReferenceRow*> reference_filter;
  {
    std::vector<std::string> wanted = cfg.states;
    for (const auto& label : wanted) parse_state_label(label);  // validate early
    auto selected = [&](const char* state) {
      return wanted.empty() || std::find(wanted.begin(), wanted.end(), state) != wanted.end();
    };
    for (const LevelRow& row : analytic_levels())
      if (selected(row.state)) level_filter.push_back(&row);
    for (const ReferenceRow& row : published_reference())
      if (selected(row.state)) reference_filter.push_back(&row);
  }

  // Closed-form side: computed values, and every cell that disagrees with the
  // printed table beyond its printing precision.
  std::vector<std::array<double, levels_columns>> level_values(level_filter.size());
  std::vector<Discrepancy> discrepancies;
  bool levels_ok = true;
  for (size_t i = 0; i < level_filter.size(); ++i) {
    const LevelRow& row = *level_filter[i];
    for (int col = 0; col < levels_columns; ++col) {
      const double computed = level_value(row, col);
      level_values[i][col] = computed;
      const double printed = parse_printed(row.printed[col]);
      const bool deviates = std::abs(computed - printed) > printed_tol;
      if (deviates) discrepancies.push_back({&row, col, printed, computed});
      // Known defects must deviate and everything else must match.
      if (deviates != ((row.misprint_mask >> col) & 1u)) levels_ok = false;
    }
  }

  // Oracle side: one exact-mode spectrum per distinct (l, delta).
  std::map<std::pair<int, double>, oracle::SpectrumResult> spectra;
  {
    std::vector<std::pair<int, double>> keys;
    for (const ReferenceRow* row : reference_filter) {
      const std::pair<int, double> key{row->l, row->delta};
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }
    std::vector<oracle::SpectrumResult> solved(keys.size());
    parallel_for(static_cast<int>(keys.size()), cfg.threads, [&](int i) {
      PotentialSpec spec = table_spec(keys[i].second, improved_c0);
      oracle::GridSpec grid = config_grid(cfg, spec);
      solved[i] = oracle::solve_radial(spec, keys[i].first, CentrifugalMode::exact, grid, 1e-7);
    });
    for (size_t i = 0; i < keys.size(); ++i) spectra.emplace(keys[i], std::move(solved[i]));
  }

  std::vector<ReferenceComputed> reference(reference_filter.size());
  bool reference_ok = true;
  for (size_t i = 0; i < reference_filter.size(); ++i) {
    const ReferenceRow& row = *reference_filter[i];
    ReferenceComputed& out = reference[i];
    out.row = &row;
    out.analytic =
        nu::energy_nu(table_spec(row.delta, improved_c0), QuantumNumbers{row.n_r, row.l}).energy;
    const auto& spectrum = spectra.at({row.l, row.delta});
    for (size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
      if (spectrum.node_counts[k] == row.n_r) {
        out.numeric_exact = spectrum.eigenvalues[k];
        out.have_numeric = true;
        break;
      }
    }
    if (row.delta <= 0.1 && !std::isnan(row.numerical)) {
      if (!out.have_numeric ||
          std::abs(std::abs(out.numeric_exact) - row.numerical) > reference_tol)
        reference_ok = false;
    }
  }

  const bool pass = levels_ok && reference_ok;

  if (cfg.format == OutputFormat::json) {
    json j;
    j["levels"] = json::array();
    for (size_t i = 0; i < level_filter.size(); ++i) {
      const LevelRow& row = *level_filter[i];
      json entry{{"state", row.state}, {"n_r", row.n_r}, {"l", row.l}, {"delta", row.delta}};
      for (int col = 0; col < levels_columns; ++col) {
        entry[level_column_name(col)] = level_values[i][col];
        entry[std::string("printed_") + level_column_name(col)] = row.printed[col];
      }
      j["levels"].push_back(std::move(entry));
    }
    j["discrepancies"] = json::array();
    for (const Discrepancy& d : discrepancies) {
      j["discrepancies"].push_back({{"state", d.row->state},
                                    {"delta", d.row->delta},
                                    {"column", level_column_name(d.column)},
                                    {"printed", d.printed},
                                    {"computed", d.computed},
                                    {"abs_diff", std::abs(d.computed - d.printed)}});
    }
    j["reference"] = json::array();
    for (const ReferenceComputed& rc : reference) {
      const ReferenceRow& row = *rc.row;
      j["reference"].push_back(
          {{"state", row.state},
           {"n_r", row.n_r},
           {"l", row.l},
           {"delta", row.delta},
           {"analytic_c0_1_12", rc.analytic},
           {"numeric_exact", rc.have_numeric ? json(rc.numeric_exact) : json()},
           {"aim", std::isnan(row.aim) ? json() : json(row.aim)},
           {"susy_ref", std::isnan(row.susy_ref) ? json() : json(row.susy_ref)},
           {"numerical", std::isnan(row.numerical) ? json() : json(row.numerical)},
           {"variational", std::isnan(row.variational) ? json() : json(row.variational)}});
    }
    j["pass"] = pass;
    os << j.dump(2) << '\n';
  } else {
    // csv and pretty share the sectioned layout
    os << "# levels\n";
    os << "state,n_r,l,delta,nu_c0_0,nu_c0_1_12,susy_c0_0,susy_c0_1_12\n";
    for (size_t i = 0; i < level_filter.size(); ++i) {
      const LevelRow& row = *level_filter[i];
      os << row.state << ',' << row.n_r << ',' << row.l << ',' << format_sig10(row.delta);
      for (int col = 0; col < levels_columns; ++col) os << ',' << format_sig10(level_values[i][col]);
      os << '\n';
    }
    os << "# discrepancies\n";
    os << "state,delta,column,printed,computed,abs_diff\n";
    for (const Discrepancy& d : discrepancies) {
      os << d.row->state << ',' << format_sig10(d.row->delta) << ',' << level_column_name(d.column)
         << ',' << d.row->printed[d.column] << ',' << format_sig10(d.computed) << ','
         << format_sig10(std::abs(d.computed - d.printed)) << '\n';
    }
    os << "# reference\n";
    os << "state,n_r,l,delta,analytic_c0_1_12,numeric_exact,aim,susy_ref,numerical,variational\n";
    for (const ReferenceComputed& rc : reference) {
      const ReferenceRow& row = *rc.row;
      os << row.state << ',' << row.n_r << ',' << row.l << ',' << format_sig10(row.delta) << ','
         << format_sig10(rc.analytic) << ','
         << (rc.have_numeric ? format_sig10(rc.numeric_exact) : std::string()) << ','
         << (std::isnan(row.aim) ? std::string() : format_sig10(row.aim)) << ','
         << (std::isnan(row.susy_ref) ? std::string() : format_sig10(row.susy_ref)) << ','
         << (std::isnan(row.numerical) ? std::string() : format_sig10(row.numerical)) << ','
         << (std::isnan(row.variational) ? std::string() : format_sig10(row.variational)) << '\n';
    }
    os << "# summary\n";
    os << "levels_consistent," << (levels_ok ? "true" : "false") << '\n';
    os << "reference_within_1e-4," << (reference_ok ? "true" : "false") << '\n';
  }
  return pass ? exit_ok : exit_check_failed;
}

int run_compare(const RunConfig& cfg, std::ostream& os) {
  cfg.spec.validate();
  if (cfg.methods.empty()) throw UsageError("compare: need at least one --method");
  std::vector<std::vector<EnergyRow>> rows(cfg.states.size());
  std::vector<QuantumNumbers> qs(cfg.states.size());
  for (size_t i = 0; i < cfg.states.size(); ++i) qs[i] = parse_state_label(cfg.states[i]);
  parallel_for(static_cast<int>(cfg.states.size()), cfg.threads, [&](int i) {
    for (Method m : cfg.methods)
      rows[i].push_back(compute_energy_row(cfg, cfg.spec, cfg.states[i], qs[i], m));
  });

  if (cfg.format == OutputFormat::json) {
    json arr = json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
      json entry{{"state", cfg.states[i]},
                 {"n_r", qs[i].n_r},
                 {"l", qs[i].l},
                 {"delta", cfg.spec.delta},
                 {"c0", cfg.spec.c0}};
      for (const EnergyRow& row : rows[i]) entry[method_name(row.method)] = row.energy;
      for (size_t m = 1; m < rows[i].size(); ++m)
        entry[std::string("abs_diff_") + method_name(rows[i][m].method)] =
            std::abs(rows[i][m].energy - rows[i][0].energy);
      arr.push_back(std::move(entry));
    }
    os << arr.dump(2) << '\n';
  } else {
    os << "state,n_r,l,delta,c0";
    for (Method m : cfg.methods) os << ',' << method_name(m);
    for (size_t m = 1; m < cfg.methods.size(); ++m)
      os << ",abs_diff_" << method_name(cfg.methods[m]);
    os << '\n';
    for (size_t i = 0; i < rows.size(); ++i) {
      os << cfg.states[i] << ',' << qs[i].n_r << ',' << qs[i].l << ','
         << format_sig10(cfg.spec.delta) << ',' << format_sig10(cfg.spec.c0);
      for (const EnergyRow& row : rows[i]) os << ',' << format_sig10(row.energy);
      for (size_t m = 1; m < rows[i].size(); ++m)
        os << ',' << format_sig10(std::abs(rows[i][m].energy - rows[i][0].energy));
      os << '\n';
    }
  }
  return exit_ok;
}

namespace {

std::vector<double> verify_radii(double delta) {
  return {0.2 / delta, 0.5 / delta, 1.0 / delta, 2.0 / delta, 5.0 / delta, 10.0 / delta};
}

void check_state_invariants(const PotentialSpec& spec, const QuantumNumbers& q,
                            std::vector<VerifyCheck>& out) {
  const std::string name = state_name(q);
  const EnergyResult e_nu = nu::energy_nu(spec, q);
  const EnergyResult e_susy = susy::energy_susy(spec, q);

  VerifyCheck identity{"nu-susy-identity", name, spec.delta, spec.c0, 0.0, 1e-12, false};
  identity.measured =
      std::abs(e_nu.energy - e_susy.energy) / std::max(std::abs(e_nu.energy), 1e-30);
  identity.pass = identity.measured < identity.tolerance;
  out.push_back(identity);

  const double eps_sq = e_nu.dimensionless.epsilon_sq;
  if (eps_sq >= 0.0) {
    if (e_nu.sqrt_c > 0.0) {  // the condition only has this root for alpha > N
      VerifyCheck quant{"quantization-residual", name, spec.delta, spec.c0, 0.0, 1e-9, false};
      quant.measured = std::abs(nu::quantization_residual(spec, q, eps_sq));
      quant.pass = quant.measured < quant.tolerance;
      out.push_back(quant);
    }

    VerifyCheck kid{"k-identity", name, spec.delta, spec.c0, 0.0, 1e-10, false};
    kid.measured = std::abs(nu::nu_parameters(spec, q, eps_sq).big_k() - (q.l + 1.0));
    kid.pass = kid.measured < kid.tolerance;
    out.push_back(kid);
  }

  if (e_nu.bound && e_nu.sqrt_c > 0.0) {
    const nu::RadialWavefunction chi(spec, q);
    VerifyCheck norm{"normalization", name, spec.delta, spec.c0, 0.0, 1e-8, false};
    const double r_max =
        std::max(40.0 / spec.delta, 21.0 / (spec.delta * chi.sqrt_c()));
    const auto quad = specfun::quadrature([&](double r) { const double v = chi.chi_r(r); return v * v; },
                                          0.0, r_max, 64);
    norm.measured = std::abs(quad.value - 1.0);
    norm.pass = quad.converged && norm.measured < norm.tolerance;
    out.push_back(norm);

    VerifyCheck ode{"ode-residual", name, spec.delta, spec.c0, 0.0, 1e-6, false};
    const oracle::GridSpec grid{0.1 / spec.delta, 20.0 / spec.delta, 4001};
    ode.measured = oracle::ode_residual(chi, e_nu.energy, grid);
    ode.pass = ode.measured < ode.tolerance;
    out.push_back(ode);
  }
}

void check_tower_invariants(const PotentialSpec& spec, int l, double b_perturbation,
                            std::vector<VerifyCheck>& out) {
  const std::string name = state_name(QuantumNumbers{0, l});
  susy::SuperpotentialCoeffs coeffs = susy::superpotential_coeffs(spec, l);
  coeffs.B += b_perturbation;
  const double e0 = susy::ground_energy(spec, l).energy;

  VerifyCheck riccati{"riccati-residual", name, spec.delta, spec.c0, 0.0, 1e-10, false};
  for (double r : verify_radii(spec.delta)) {
    riccati.measured = std::max(
        riccati.measured, std::abs(susy::riccati_residual(coeffs, spec, QuantumNumbers{0, l}, e0, r)));
  }
  riccati.pass = riccati.measured < riccati.tolerance;
  out.push_back(riccati);

  VerifyCheck shape{"shape-invariance", name, spec.delta, spec.c0, 0.0, 1e-10, false};
  for (int i = 1; i <= 5; ++i) {
    const auto prev = susy::partner_potentials(susy::shifted_coeffs(spec, l, i - 1), spec);
    const auto next = susy::partner_potentials(susy::shifted_coeffs(spec, l, i), spec);
    const double remainder = susy::shape_invariance_remainder(spec, l, i);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double r : verify_radii(spec.delta)) {
      const double diff = prev.v_plus(r) - next.v_minus(r);
      lo = std::min(lo, diff);
      hi = std::max(hi, diff);
      shape.measured = std::max(shape.measured, std::abs(diff - remainder));
    }
    shape.measured = std::max(shape.measured, hi - lo);
  }
  shape.pass = shape.measured < shape.tolerance;
  out.push_back(shape);
}

}  // namespace

VerifyReport verify_suite(const VerifyOptions& opts) {
  const std::vector<double> deltas =
      opts.quick ? std::vector<double>{0.025, 0.05}
                 : std::vector<double>{0.025, 0.05, 0.075, 0.1, 0.15};
  const std::vector<double> c0s{0.0, improved_c0};
  std::vector<QuantumNumbers> states;
  if (opts.quick) {
    states = {{0, 1}, {1, 1}};  // the 2p / 3p subset
  } else {
    for (int n_r = 0; n_r <= 4; ++n_r)
      for (int l = 0; l <= 4; ++l) states.push_back({n_r, l});
  }
  std::vector<int> ls;
  for (const auto& q : states)
    if (std::find(ls.begin(), ls.end(), q.l) == ls.end()) ls.push_back(q.l);

  struct Task {
    bool tower;
    QuantumNumbers q;
    double delta;
    double c0;
  };
  std::vector<Task> tasks;
  for (double delta : deltas)
    for (double c0 : c0s) {
      for (const auto& q : states) tasks.push_back({false, q, delta, c0});
      for (int l : ls) tasks.push_back({true, {0, l}, delta, c0});
    }

  std::vector<std::vector<VerifyCheck>> partial(tasks.size());
  parallel_for(static_cast<int>(tasks.size()), opts.threads, [&](int i) {
    const Task& task = tasks[i];
    PotentialSpec spec;
    spec.delta = task.delta;
    spec.c0 = task.c0;
    if (task.tower)
      check_tower_invariants(spec, task.q.l, opts.b_perturbation, partial[i]);
    else
      check_state_invariants(spec, task.q, partial[i]);
  });

  VerifyReport report;
  for (auto& chunk : partial)
    for (auto& check : chunk) {
      if (!check.pass) ++report.failures;
      report.checks.push_back(std::move(check));
    }
  report.pass = report.failures == 0;
  return report;
}

int run_verify(const RunConfig& cfg, std::ostream& os) {
  VerifyOptions opts;
  opts.quick = cfg.quick;
  opts.threads = cfg.threads;
  const VerifyReport report = verify_suite(opts);

  if (cfg.format == OutputFormat::json) {
    json j;
    j["checks"] = json::array();
    for (const VerifyCheck& c : report.checks) {
      j["checks"].push_back({{"name", c.name},
                             {"state", c.state},
                             {"delta", c.delta},
                             {"c0", c.c0},
                             {"measured", c.measured},
                             {"tolerance", c.tolerance},
                             {"pass", c.pass}});
    }
    j["failures"] = report.failures;
    j["pass"] = report.pass;
    os << j.dump(2) << '\n';
  } else if (cfg.format == OutputFormat::csv) {
    os << "name,state,delta,c0,measured,tolerance,pass\n";
    for (const VerifyCheck& c : report.checks) {
      os << c.name << ',' << c.state << ',' << format_sig10(c.delta) << ',' << format_sig10(c.c0)
         << ',' << format_sig10(c.measured) << ',' << format_sig10(c.tolerance) << ','
         << (c.pass ? "true" : "false") << '\n';
    }
  } else {
    for (const VerifyCheck& c : report.checks) {
      if (c.pass) continue;
      os << "FAIL " << c.name << " state=" << c.state << " delta=" << format_sig10(c.delta)
         << " c0=" << format_sig10(c.c0) << " measured=" << format_sig10(c.measured)
         << " tolerance=" << format_sig10(c.tolerance) << '\n';
    }
    os << "verify: " << report.checks.size() << " checks, " << report.failures << " failures\n";
  }
  return report.pass ? exit_ok : exit_check_failed;
}

}  // namespace hulthen::cli
