#include "vacrad/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "vacrad/constants.hpp"
#include "vacrad/errors.hpp"
#include "vacrad/mdw.hpp"
#include "vacrad/randomization.hpp"
#include "vacrad/unruh.hpp"

namespace vacrad {

namespace {

void put(FlatReport& r, std::string key, double v) {
  r.push_back({std::move(key), v});
}
void put(FlatReport& r, std::string key, std::int64_t v) {
  r.push_back({std::move(key), v});
}
void put(FlatReport& r, std::string key, std::string v) {
  r.push_back({std::move(key), std::move(v)});
}

void append_randomization(FlatReport& r, const std::string& prefix,
                          const GasState& state, Channel channel,
                          double delta_theta0, double gain) {
  const auto report = build_report(state, channel, delta_theta0, gain);
  put(r, prefix + ".n_collisions", report.n_collisions);
  put(r, prefix + ".n_exact_ratio",
      -std::log(delta_theta0) / std::log(gain));
  put(r, prefix + ".randomization_time_s", report.randomization_time);
}

}  // namespace

FlatReport build_estimate_report(const GasState& state,
                                 const EstimateOptions& options) {
  FlatReport r;

  put(r, "species.name", state.species.name);
  put(r, "species.mass_kg", state.species.mass);
  put(r, "species.radius_m", state.species.radius);

  put(r, "state.temperature_k", state.temperature);
  put(r, "state.pressure_pa", state.pressure);
  put(r, "state.number_density_per_m3", state.number_density);
  put(r, "state.v_rms_m_s", state.v_rms);
  put(r, "state.v_mean_m_s", state.v_mean);
  put(r, "state.mean_free_path_m", state.mean_free_path);
  put(r, "state.collision_rate_hz", state.collision_rate);
  put(r, "state.collision_acceleration_m_s2", collision_acceleration(state));

  const UnruhEstimate unruh = estimate_unruh(state, options.integral_method);
  put(r, "unruh.acceleration_m_s2", unruh.acceleration);
  put(r, "unruh.unruh_temperature_k", unruh.unruh_temperature);
  put(r, "unruh.alpha", unruh.alpha);
  put(r, "unruh.peak_wavenumber_per_m", unruh.peak_wavenumber);
  put(r, "unruh.peak_wavelength_m", unruh.peak_wavelength);
  put(r, "unruh.delta_p_squared_kg2m2s2", unruh.delta_p_squared);
  put(r, "unruh.delta_theta0_rad", unruh.delta_theta0);
  put(r, "unruh.integral_method",
      std::string(to_string(options.integral_method)));

  const MdwEstimate mdw = estimate_mdw(state);
  put(r, "mdw.omega0_rad_s", mdw.omega0);
  put(r, "mdw.coupling_omega_rad_s", mdw.coupling_omega);
  put(r, "mdw.u_ratio", mdw.u_ratio);
  put(r, "mdw.ln_u_ratio", std::log(mdw.u_ratio));
  put(r, "mdw.zeta_value", mdw.zeta_value);
  put(r, "mdw.gamma_rate_hz", mdw.gamma_rate);
  put(r, "mdw.delta_p_squared_kg2m2s2", mdw.delta_p_squared);
  put(r, "mdw.delta_theta0_rad", mdw.delta_theta0);

  const double gain_kinetic =
      2.0 * state.mean_free_path / state.species.radius;
  put(r, "randomization.gain_kinetic", gain_kinetic);
  append_randomization(r, "randomization.unruh", state, Channel::unruh,
                       unruh.delta_theta0, gain_kinetic);
  append_randomization(r, "randomization.mdw", state, Channel::mdw,
                       mdw.delta_theta0, gain_kinetic);
  if (options.gain_override) {
    put(r, "randomization.gain_override", *options.gain_override);
    append_randomization(r, "randomization.unruh_override", state,
                         Channel::unruh, unruh.delta_theta0,
                         *options.gain_override);
    append_randomization(r, "randomization.mdw_override", state, Channel::mdw,
                         mdw.delta_theta0, *options.gain_override);
  }

  if (options.calibrate_rmv_over_hbar || options.calibrate_alpha) {
    const double rmv_over_hbar = options.calibrate_rmv_over_hbar.value_or(
        state.species.radius * state.species.mass * state.v_rms /
        constants().hbar);
    const double alpha = options.calibrate_alpha.value_or(unruh.alpha);
    const auto cal = estimate_unruh_calibrated(rmv_over_hbar, alpha,
                                               state.temperature,
                                               state.v_rms);
    put(r, "calibration.rmv_over_hbar", cal.rmv_over_hbar);
    put(r, "calibration.alpha", cal.alpha);
    put(r, "calibration.collision_speed_m_s", cal.collision_speed);
    put(r, "calibration.delta_theta0_rad", cal.delta_theta0);
    append_randomization(r, "calibration.kinetic_gain", state, Channel::unruh,
                         cal.delta_theta0, gain_kinetic);
    if (options.gain_override) {
      append_randomization(r, "calibration.override_gain", state,
                           Channel::unruh, cal.delta_theta0,
                           *options.gain_override);
    }
  }
  return r;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string render_json(const FlatReport& report) {
  nlohmann::ordered_json root = nlohmann::ordered_json::object();
  for (const auto& field : report) {
    nlohmann::ordered_json* node = &root;
    std::size_t begin = 0;
    while (true) {
      const std::size_t dotpos = field.key.find('.', begin);
      if (dotpos == std::string::npos) break;
      node = &(*node)[field.key.substr(begin, dotpos - begin)];
      begin = dotpos + 1;
    }
    const std::string leaf = field.key.substr(begin);
    std::visit([&](const auto& v) { (*node)[leaf] = v; }, field.value);
  }
  return root.dump(2) + "\n";
}

namespace {

std::string value_string(const ReportField& field) {
  if (const auto* d = std::get_if<double>(&field.value)) {
    return format_double(*d);
  }
  if (const auto* i = std::get_if<std::int64_t>(&field.value)) {
    return std::to_string(*i);
  }
  return std::get<std::string>(field.value);
}

}  // namespace

std::string render_csv_header(const FlatReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.size(); ++i) {
    if (i) out << ',';
    out << report[i].key;
  }
  out << '\n';
  return out.str();
}

std::string render_csv_row(const FlatReport& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.size(); ++i) {
    if (i) out << ',';
    out << value_string(report[i]);
  }
  out << '\n';
  return out.str();
}

std::string render_human(const FlatReport& report) {
  std::size_t width = 0;
  for (const auto& f : report) width = std::max(width, f.key.size());
  std::ostringstream out;
  for (const auto& f : report) {
    out << f.key << std::string(width - f.key.size(), ' ') << " = "
        << value_string(f) << '\n';
  }
  return out.str();
}

std::string render(const FlatReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return render_json(report);
    case ReportFormat::csv:
      return render_csv_header(report) + render_csv_row(report);
    case ReportFormat::human_table:
      return render_human(report);
  }
  throw domain_error("unknown report format");
}

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "human_table" || name == "human") {
    return ReportFormat::human_table;
  }
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw domain_error("unknown format '" + name +
                     "'; expected human_table|csv|json");
}

}  // namespace vacrad
