// vacrad: estimates of vacuum-radiation momentum diffusion in a colliding
// gas, quadrature validation, parameter sweeps, and an event-driven
// hard-sphere simulator with machine-readable output.
//
// Exit codes: 0 success, 2 input/domain/validity error, 3 simulation
// integrity error. Errors print a single `error=...` line to stderr.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vacrad/constants.hpp"
#include "vacrad/errors.hpp"
#include "vacrad/gas_model.hpp"
#include "vacrad/mdw.hpp"
#include "vacrad/quadrature.hpp"
#include "vacrad/randomization.hpp"
#include "vacrad/report.hpp"
#include "vacrad/simulation.hpp"
#include "vacrad/unruh.hpp"

namespace {

using vacrad::domain_error;

struct GasArgs {
  std::string species = "N2";
  std::string species_file;
  double temperature = 273.15;  // STP defaults
  double pressure = 101325.0;
  std::optional<double> radius_override;
};

void add_gas_options(CLI::App* cmd, GasArgs* args, bool as_strings,
                     std::string* t_str, std::string* p_str,
                     std::string* r_str) {
  cmd->add_option("--species", args->species, "Species name (catalogue key)");
  cmd->add_option("--species-file", args->species_file,
                  "key=value species catalogue overriding built-ins");
  if (as_strings) {
    cmd->add_option("--temperature-k", *t_str,
                    "Temperature, K (scalar or lo:hi:count[(log)])");
    cmd->add_option("--pressure-pa", *p_str,
                    "Pressure, Pa (scalar or lo:hi:count[(log)])");
    cmd->add_option("--radius-m", *r_str,
                    "Species radius override, m (scalar or range)");
  } else {
    cmd->add_option("--temperature-k", args->temperature, "Temperature, K");
    cmd->add_option("--pressure-pa", args->pressure, "Pressure, Pa");
    cmd->add_option(
        "--radius-m",
        [args](const std::vector<std::string>& v) {
          args->radius_override = std::stod(v.at(0));
          return true;
        },
        "Species radius override, m");
  }
}

vacrad::GasSpecies resolve_species(const GasArgs& args) {
  auto catalogue = vacrad::SpeciesCatalogue::builtins();
  if (!args.species_file.empty()) catalogue.load_file(args.species_file);
  vacrad::GasSpecies species = catalogue.find(args.species);
  if (args.radius_override) species.radius = *args.radius_override;
  return species;
}

struct Range {
  std::vector<double> values;
};

// "lo:hi:count" or "lo:hi:count(log)"; a plain scalar yields one value.
Range parse_range(std::string text, bool* is_range) {
  bool log_grid = false;
  const std::string log_suffix = "(log)";
  if (text.size() > log_suffix.size() &&
      text.compare(text.size() - log_suffix.size(), log_suffix.size(),
                   log_suffix) == 0) {
    log_grid = true;
    text.erase(text.size() - log_suffix.size());
  }

  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (true) {
    const auto colon = text.find(':', begin);
    if (colon == std::string::npos) {
      parts.push_back(text.substr(begin));
      break;
    }
    parts.push_back(text.substr(begin, colon - begin));
    begin = colon + 1;
  }

  auto to_double = [&](const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || s.empty()) {
      throw domain_error("bad number '" + s + "' in range '" + text + "'");
    }
    return v;
  };

  if (parts.size() == 1 && !log_grid) {
    *is_range = false;
    return {{to_double(parts[0])}};
  }
  if (parts.size() != 3) {
    throw domain_error("range must be lo:hi:count[(log)], got '" + text +
                       "'");
  }
  const double lo = to_double(parts[0]);
  const double hi = to_double(parts[1]);
  const double count_d = to_double(parts[2]);
  const long count = std::lround(count_d);
  if (count_d != static_cast<double>(count) || count < 1) {
    throw domain_error("range count must be a positive integer, got '" +
                       parts[2] + "'");
  }
  if (log_grid && (!(lo > 0.0) || !(hi > 0.0))) {
    throw domain_error("log range endpoints must be positive");
  }

  Range r;
  r.values.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    if (count == 1) {
      r.values.push_back(lo);
    } else if (log_grid) {
      r.values.push_back(
          lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
    } else {
      r.values.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                  (count - 1));
    }
  }
  *is_range = true;
  return r;
}

int run_estimate(const GasArgs& gas, const vacrad::EstimateOptions& options,
                 vacrad::ReportFormat format) {
  const auto species = resolve_species(gas);
  const auto state =
      vacrad::derive_state(species, gas.temperature, gas.pressure);
  const auto report = vacrad::build_estimate_report(state, options);
  std::cout << vacrad::render(report, format);
  return 0;
}

int run_integrate(double alpha, int p, vacrad::ReportFormat format) {
  using vacrad::IntegralMethod;
  const auto adaptive =
      vacrad::bose_power_integral(alpha, p, IntegralMethod::adaptive);
  const auto zeta =
      vacrad::bose_power_integral(alpha, p, IntegralMethod::closed_form_zeta);
  const auto fact = vacrad::bose_power_integral(
      alpha, p, IntegralMethod::closed_form_factorial);

  vacrad::FlatReport r;
  r.push_back({"integrate.alpha", alpha});
  r.push_back({"integrate.p", static_cast<std::int64_t>(p)});
  r.push_back({"integrate.peak_x", vacrad::integrand_peak(alpha, p)});
  r.push_back({"integrate.adaptive.value", adaptive.value});
  r.push_back(
      {"integrate.adaptive.estimated_abs_error", adaptive.estimated_abs_error});
  r.push_back({"integrate.zeta.value", zeta.value});
  r.push_back({"integrate.zeta.estimated_abs_error", zeta.estimated_abs_error});
  r.push_back({"integrate.factorial.value", fact.value});
  r.push_back(
      {"integrate.factorial.estimated_abs_error", fact.estimated_abs_error});
  r.push_back({"integrate.rel_diff_adaptive_vs_zeta",
               std::fabs(adaptive.value / zeta.value - 1.0)});
  r.push_back({"integrate.rel_diff_adaptive_vs_factorial",
               std::fabs(adaptive.value / fact.value - 1.0)});
  r.push_back({"integrate.gap_factorial_to_zeta",
               zeta.value / fact.value - 1.0});
  std::cout << vacrad::render(r, format);
  return 0;
}

int run_simulate(const vacrad::sim::SimConfig& config,
                 vacrad::ReportFormat format) {
  const auto result = vacrad::sim::run(config);
  switch (format) {
    case vacrad::ReportFormat::json:
      std::cout << vacrad::sim::to_json(result) << '\n';
      break;
    case vacrad::ReportFormat::csv: {
      std::cout << "collision_index,rms_angle_rad\n";
      for (const auto& p : result.divergence_series) {
        std::cout << p.collision_index << ','
                  << vacrad::format_double(p.rms_angle) << '\n';
      }
      break;
    }
    case vacrad::ReportFormat::human_table: {
      vacrad::FlatReport r;
      r.push_back({"sim.collisions_elapsed", result.collisions_elapsed});
      r.push_back({"sim.duration_s", result.duration});
      r.push_back({"sim.energy_drift", result.energy_drift});
      r.push_back({"sim.momentum_drift_max",
                   std::max({result.momentum_drift[0],
                             result.momentum_drift[1],
                             result.momentum_drift[2]})});
      r.push_back({"sim.mean_free_path_measured_m",
                   result.mean_free_path_measured});
      r.push_back({"sim.gain_measured", result.gain_measured});
      r.push_back({"sim.fitted_log_growth_per_collision",
                   result.fitted_log_growth_per_collision});
      r.push_back({"sim.decorrelated",
                   std::string(result.decorrelated ? "true" : "false")});
      r.push_back(
          {"sim.decorrelation_collisions_per_particle",
           result.decorrelation_cpp});
      std::cout << vacrad::render_human(r);
      break;
    }
  }
  return 0;
}

int run_sweep(const GasArgs& gas, const std::string& t_str,
              const std::string& p_str, const std::string& r_str,
              const vacrad::EstimateOptions& options,
              vacrad::ReportFormat format) {
  bool t_range = false, p_range = false, r_range = false;
  Range t = parse_range(t_str.empty() ? "273.15" : t_str, &t_range);
  Range p = parse_range(p_str.empty() ? "101325" : p_str, &p_range);
  Range r = parse_range(r_str.empty() ? "0" : r_str, &r_range);
  if (r_str.empty()) r.values.clear();

  const int ranges = int(t_range) + int(p_range) + int(r_range);
  if (ranges != 1) {
    throw domain_error(
        "sweep needs exactly one ranged parameter "
        "(--temperature-k | --pressure-pa | --radius-m as lo:hi:count)");
  }
  if (format == vacrad::ReportFormat::human_table) {
    throw domain_error("sweep emits csv or json, not human_table");
  }

  auto species = resolve_species(gas);
  std::size_t n_rows = std::max({t.values.size(), p.values.size(),
                                 r_range ? r.values.size() : std::size_t{1}});

  std::string json_out = "[\n";
  bool first = true;
  for (std::size_t i = 0; i < n_rows; ++i) {
    auto sp = species;
    if (r_range) sp.radius = r.values[i];
    const double temperature = t_range ? t.values[i] : t.values[0];
    const double pressure = p_range ? p.values[i] : p.values[0];
    const auto state = vacrad::derive_state(sp, temperature, pressure);
    const auto report = vacrad::build_estimate_report(state, options);
    if (format == vacrad::ReportFormat::csv) {
      if (first) std::cout << vacrad::render_csv_header(report);
      std::cout << vacrad::render_csv_row(report);
    } else {
      if (!first) json_out += ",\n";
      json_out += vacrad::render_json(report);
    }
    first = false;
  }
  if (format == vacrad::ReportFormat::json) {
    std::cout << json_out << "]\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vacuum-radiation momentum diffusion and gas randomization"};
  app.require_subcommand(1);

  // ---- estimate ----
  auto* estimate = app.add_subcommand(
      "estimate", "Per-collision kicks, collision counts, timing");
  GasArgs est_gas;
  vacrad::EstimateOptions est_options;
  std::string est_format = "human_table";
  std::string est_method = "factorial";
  double est_gain = 0.0, est_rmv = 0.0, est_alpha = 0.0;
  add_gas_options(estimate, &est_gas, false, nullptr, nullptr, nullptr);
  estimate->add_option("--format", est_format, "human_table|csv|json");
  estimate->add_option("--integral-method", est_method,
                       "adaptive|factorial|zeta");
  auto* gain_opt =
      estimate->add_option("--gain", est_gain, "Explicit amplification gain");
  auto* rmv_opt = estimate->add_option("--calibrate-rmv-hbar", est_rmv,
                                       "Inject r*m*v in units of hbar");
  auto* alpha_opt = estimate->add_option("--calibrate-alpha", est_alpha,
                                         "Inject alpha directly");

  // ---- integrate ----
  auto* integrate = app.add_subcommand(
      "integrate", "Bose-weighted power integral, three methods");
  double int_alpha = 0.0;
  int int_p = 8;
  std::string int_format = "human_table";
  integrate->add_option("--alpha", int_alpha, "Exponent scale alpha")
      ->required();
  integrate->add_option("--p", int_p, "Power of x (default 8)");
  integrate->add_option("--format", int_format, "human_table|csv|json");

  // ---- simulate ----
  auto* simulate = app.add_subcommand(
      "simulate", "Event-driven hard-sphere divergence measurement");
  vacrad::sim::SimConfig sim_config;
  sim_config.n_particles = 500;
  sim_config.radius = 1.0;
  sim_config.speed_scale = 1.0;
  sim_config.max_collisions_per_particle = 10;
  double sim_packing = 0.0;
  double sim_box = 0.0;
  std::string sim_mode = "twin";
  std::string sim_format = "json";
  simulate->add_option("--particles", sim_config.n_particles,
                       "Number of spheres");
  simulate->add_option("--packing", sim_packing,
                       "Packing fraction (sets box length)");
  simulate->add_option("--box-m", sim_box,
                       "Box edge length, m (alternative to --packing)");
  simulate->add_option("--radius-m", sim_config.radius, "Sphere radius, m");
  simulate->add_option("--speed-scale", sim_config.speed_scale,
                       "Per-component initial velocity sigma, m/s");
  simulate->add_option("--seed", sim_config.seed, "64-bit seed");
  simulate->add_option("--mode", sim_mode, "twin|kick");
  simulate->add_option("--perturbation", sim_config.perturbation,
                       "Initial twist (twin) or kick sigma (kick), rad");
  simulate->add_option("--max-collisions",
                       sim_config.max_collisions_per_particle,
                       "Mean collisions per particle to simulate");
  simulate->add_option("--audit-interval", sim_config.audit_interval,
                       "Collisions between conservation audits");
  simulate->add_option("--format", sim_format, "json|csv|human_table");

  // ---- sweep ----
  auto* sweep = app.add_subcommand(
      "sweep", "One estimate row per grid point over T, P, or radius");
  GasArgs sweep_gas;
  vacrad::EstimateOptions sweep_options;
  std::string sweep_t, sweep_p, sweep_r;
  std::string sweep_format = "csv";
  std::string sweep_method = "factorial";
  double sweep_gain = 0.0;
  add_gas_options(sweep, &sweep_gas, true, &sweep_t, &sweep_p, &sweep_r);
  sweep->add_option("--format", sweep_format, "csv|json");
  sweep->add_option("--integral-method", sweep_method,
                    "adaptive|factorial|zeta");
  auto* sweep_gain_opt =
      sweep->add_option("--gain", sweep_gain, "Explicit amplification gain");

  try {
    app.parse(argc, argv);

    if (*estimate) {
      est_options.integral_method =
          vacrad::integral_method_from_string(est_method.c_str());
      if (*gain_opt) est_options.gain_override = est_gain;
      if (*rmv_opt) est_options.calibrate_rmv_over_hbar = est_rmv;
      if (*alpha_opt) est_options.calibrate_alpha = est_alpha;
      return run_estimate(est_gas, est_options,
                          vacrad::report_format_from_string(est_format));
    }
    if (*integrate) {
      return run_integrate(int_alpha, int_p,
                           vacrad::report_format_from_string(int_format));
    }
    if (*simulate) {
      sim_config.mode = vacrad::sim::sim_mode_from_string(sim_mode);
      if (sim_box > 0.0 && sim_packing > 0.0) {
        throw domain_error("give either --packing or --box-m, not both");
      }
      if (sim_box > 0.0) {
        sim_config.box_length = sim_box;
      } else if (sim_packing > 0.0) {
        const double r = sim_config.radius;
        const double volume = sim_config.n_particles * (4.0 / 3.0) *
                              3.14159265358979323846 * r * r * r;
        sim_config.box_length = std::cbrt(volume / sim_packing);
      } else {
        throw domain_error("simulate needs --packing or --box-m");
      }
      return run_simulate(sim_config,
                          vacrad::report_format_from_string(sim_format));
    }
    if (*sweep) {
      sweep_options.integral_method =
          vacrad::integral_method_from_string(sweep_method.c_str());
      if (*sweep_gain_opt) sweep_options.gain_override = sweep_gain;
      return run_sweep(sweep_gas, sweep_t, sweep_p, sweep_r, sweep_options,
                       vacrad::report_format_from_string(sweep_format));
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error=" << e.what() << '\n';
    return 2;
  } catch (const vacrad::integrity_error& e) {
    std::cerr << "error=" << e.what() << '\n';
    return 3;
  } catch (const vacrad::error& e) {
    std::cerr << "error=" << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error=" << e.what() << '\n';
    return 2;
  }
}
