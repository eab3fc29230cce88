// Acceptance suite: one line per criterion, non-zero exit if any fails.
// Each criterion carries its runtime budget; a budget overrun fails the
// criterion too.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "vacrad/collision.hpp"
#include "vacrad/constants.hpp"
#include "vacrad/gas_model.hpp"
#include "vacrad/mdw.hpp"
#include "vacrad/quadrature.hpp"
#include "vacrad/randomization.hpp"
#include "vacrad/simulation.hpp"
#include "vacrad/unruh.hpp"

namespace {

using namespace vacrad;

struct Outcome {
  bool pass = false;
  std::string details;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> check;
};

GasState n2_stp() {
  return derive_state(builtin_species("N2"), 273.15, 101325.0);
}

sim::SimConfig sim_config(int particles, double packing, sim::SimMode mode,
                          double perturbation, int max_cpp,
                          std::uint64_t seed) {
  sim::SimConfig cfg;
  cfg.n_particles = particles;
  cfg.radius = 1.0;
  cfg.speed_scale = 1.0;
  cfg.box_length = std::cbrt(particles * (4.0 / 3.0) * std::numbers::pi /
                             packing);
  cfg.seed = seed;
  cfg.mode = mode;
  cfg.perturbation = perturbation;
  cfg.max_collisions_per_particle = max_cpp;
  return cfg;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

Outcome criterion_alpha() {
  const auto est = estimate_unruh(n2_stp());
  const double rel = std::fabs(est.alpha / 2e12 - 1.0);
  return {rel < 0.2,
          "alpha=" + fmt(est.alpha) + " vs 2e12 (rel " + fmt(rel) + ")"};
}

Outcome criterion_peak_wavelength() {
  const auto est = estimate_unruh(n2_stp());
  const double relation =
      std::fabs(est.peak_wavelength * est.peak_wavenumber /
                    (2.0 * std::numbers::pi) - 1.0);
  const double injected = 2.0 * std::numbers::pi / 0.007;
  const double vs_paper = std::fabs(injected - 850.0) / 850.0;
  const bool pass = relation < 1e-12 && vs_paper < 0.10;
  return {pass, "lambda*k/2pi-1=" + fmt(relation) + ", 2pi/0.007=" +
                    fmt(injected) + " m vs 850 m (rel " + fmt(vs_paper) +
                    ")"};
}

Outcome criterion_calibrated_kick() {
  const auto st = n2_stp();
  const auto cal = estimate_unruh_calibrated(103.0, 2e12, 273.15, st.v_rms);
  const bool pass = cal.delta_theta0 > 1e-53 && cal.delta_theta0 < 9e-53;
  return {pass, "delta_theta0=" + fmt(cal.delta_theta0) +
                    " vs 3e-53 (factor " + fmt(cal.delta_theta0 / 3e-53) +
                    ")"};
}

Outcome criterion_collision_count() {
  const auto st = n2_stp();
  const auto cal = estimate_unruh_calibrated(103.0, 2e12, 273.15, st.v_rms);
  const auto paper_gain = build_report(st, Channel::unruh, cal.delta_theta0,
                                       35.0);
  const auto kinetic = build_report(st, Channel::unruh, cal.delta_theta0);
  const bool pass = paper_gain.n_collisions == 34 &&
                    kinetic.n_collisions >= 15 && kinetic.n_collisions <= 25;
  std::ostringstream details;
  details << "n(gain 35)=" << paper_gain.n_collisions
          << ", n(kinetic gain " << fmt(kinetic.gain)
          << ")=" << kinetic.n_collisions
          << "; note ceil(-ln(3e-53)/ln 35)="
          << collisions_to_randomize(3e-53, 35.0)
          << " (exact ratio " << fmt(-std::log(3e-53) / std::log(35.0))
          << ")";
  return {pass, details.str()};
}

Outcome criterion_mdw_ratio() {
  const auto st = n2_stp();
  const auto unruh = estimate_unruh(st);
  const auto mdw = estimate_mdw(st);
  const double ratio =
      std::log(mdw.delta_theta0) / std::log(unruh.delta_theta0);
  const bool pass = ratio > 0.35 && ratio < 0.65;
  return {pass, "ln(mdw)/ln(unruh)=" + fmt(ratio) + " (mdw " +
                    fmt(mdw.delta_theta0) + ", unruh " +
                    fmt(unruh.delta_theta0) + ")"};
}

Outcome criterion_quadrature() {
  double worst = 0.0;
  for (double alpha : {1.0, 1e6, 2e12}) {
    const auto adaptive =
        bose_power_integral(alpha, 8, IntegralMethod::adaptive);
    const auto zeta =
        bose_power_integral(alpha, 8, IntegralMethod::closed_form_zeta);
    worst = std::max(worst, std::fabs(adaptive.value / zeta.value - 1.0));
  }
  const auto fact =
      bose_power_integral(1.0, 8, IntegralMethod::closed_form_factorial);
  const auto zeta1 =
      bose_power_integral(1.0, 8, IntegralMethod::closed_form_zeta);
  const double gap_pct = (zeta1.value / fact.value - 1.0) * 100.0;
  const bool pass =
      worst < 1e-8 && gap_pct > 0.2007 && gap_pct < 0.2009;
  return {pass, "max adaptive-vs-zeta rel=" + fmt(worst) + ", gap=" +
                    fmt(gap_pct) + "%"};
}

Outcome criterion_deflection() {
  double worst = 0.0;
  for (double theta : {0.1, 0.4, 0.7}) {
    const double fd =
        sim::deflection_sensitivity_finite_difference(theta, 1e-6);
    worst = std::max(worst, std::fabs(fd - 2.0));
  }
  return {worst < 1e-4, "max |fd - 2| = " + fmt(worst)};
}

Outcome criterion_conservation() {
  auto cfg =
      sim_config(500, 0.01, sim::SimMode::twin, 1e-9, 400, 20260809);
  const auto result = sim::run(cfg);
  bool momentum_ok = true;
  double worst_p = 0.0;
  for (double drift : result.momentum_drift) {
    worst_p = std::max(worst_p, drift);
    momentum_ok =
        momentum_ok && drift < 1e-12 * result.initial_momentum_norm;
  }
  const bool pass = result.collisions_elapsed >= 100000 &&
                    result.energy_drift < 1e-9 && momentum_ok;
  return {pass, "events=" + std::to_string(result.collisions_elapsed) +
                    ", energy drift=" + fmt(result.energy_drift) +
                    ", worst momentum drift=" + fmt(worst_p) + " (|p0|=" +
                    fmt(result.initial_momentum_norm) + ")"};
}

Outcome criterion_lyapunov() {
  const int seeds = 8;
  double slope_sum = 0.0, lambda_sum = 0.0;
  for (int s = 0; s < seeds; ++s) {
    const auto result = sim::run(
        sim_config(500, 0.01, sim::SimMode::twin, 1e-9, 12, 900 + s));
    slope_sum += result.fitted_log_growth_per_collision;
    lambda_sum += result.mean_free_path_measured;
  }
  const double mean_slope = slope_sum / seeds;
  const double mean_gain_log = std::log(2.0 * (lambda_sum / seeds) / 1.0);
  const bool pass =
      mean_slope > 0.5 * mean_gain_log && mean_slope < 2.0 * mean_gain_log;
  return {pass, "mean fitted slope=" + fmt(mean_slope) +
                    ", ln(2 lambda_meas/r)=" + fmt(mean_gain_log) +
                    " (ratio " + fmt(mean_slope / mean_gain_log) + ")"};
}

Outcome criterion_kick() {
  const int seeds = 5;
  double cpp_sum = 0.0, gain_sum = 0.0;
  for (int s = 0; s < seeds; ++s) {
    const auto result = sim::run(
        sim_config(500, 0.01, sim::SimMode::kick, 1e-12, 30, 31415 + s));
    if (!result.decorrelated) {
      return {false, "seed " + std::to_string(31415 + s) +
                         " never decorrelated within the event budget"};
    }
    cpp_sum += result.decorrelation_cpp;
    gain_sum += result.gain_measured;
  }
  const double cpp = cpp_sum / seeds;
  const double gain = gain_sum / seeds;
  const double predicted = std::ceil(-std::log(1e-12) / std::log(gain));
  const double rel = std::fabs(cpp - predicted) / predicted;
  return {rel <= 0.30, "mean decorrelation cpp=" + fmt(cpp) +
                           " vs prediction " + fmt(predicted) + " (rel " +
                           fmt(rel) + ", mean measured gain " + fmt(gain) +
                           ")"};
}

Outcome criterion_determinism() {
  const auto cfg =
      sim_config(64, 0.02, sim::SimMode::twin, 1e-9, 6, 4242);
  const std::string a = sim::to_json(sim::run(cfg));
  const std::string b = sim::to_json(sim::run(cfg));
  return {!a.empty() && a == b,
          "serialized " + std::to_string(a.size()) + " bytes, identical=" +
              (a == b ? "yes" : "no")};
}

Outcome criterion_nanosecond_headline() {
  const auto st = n2_stp();
  const auto cal = estimate_unruh_calibrated(103.0, 2e12, 273.15, st.v_rms);
  const auto report =
      build_report(st, Channel::unruh, cal.delta_theta0, 35.0);
  const bool pass = report.randomization_time > 0.5e-9 &&
                    report.randomization_time < 10e-9;
  return {pass, "time(n=" + std::to_string(report.n_collisions) +
                    ")=" + fmt(report.randomization_time * 1e9) + " ns"};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "alpha reproduction", 1.0, criterion_alpha},
      {2, "peak-wavelength relation", 1.0, criterion_peak_wavelength},
      {3, "calibrated unruh kick", 1.0, criterion_calibrated_kick},
      {4, "collision-count reproduction", 1.0, criterion_collision_count},
      {5, "mdw/unruh log ratio", 1.0, criterion_mdw_ratio},
      {6, "quadrature oracle equivalence", 5.0, criterion_quadrature},
      {7, "deflection sensitivity", 1.0, criterion_deflection},
      {8, "simulator conservation", 120.0, criterion_conservation},
      {9, "lyapunov band", 600.0, criterion_lyapunov},
      {10, "kick-mode consistency", 600.0, criterion_kick},
      {11, "determinism", 120.0, criterion_determinism},
      {12, "nanosecond headline (calibrated)", 1.0,
       criterion_nanosecond_headline},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    const bool in_budget = seconds < c.budget_s;
    const bool pass = outcome.pass && in_budget;
    if (!pass) ++failures;
    std::printf("[%2d] %s  %-32s %s (%.2fs%s)\n", c.id,
                pass ? "PASS" : "FAIL", c.name.c_str(),
                outcome.details.c_str(), seconds,
                in_budget ? "" : ", OVER BUDGET");
  }
  if (failures == 0) {
    std::printf("RESULT: all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("RESULT: %d criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
