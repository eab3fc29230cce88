#include "vacrad/unruh.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vacrad/constants.hpp"
#include "vacrad/errors.hpp"

namespace vacrad {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double kFactorial8 = 40320.0;
constexpr double kAlphaGuard = 1e3;  // nonrelativistic validity threshold
}  // namespace

double unruh_temperature(double acceleration) {
  if (acceleration < 0.0 || !std::isfinite(acceleration)) {
    throw domain_error("unruh_temperature: acceleration must be >= 0, got " +
                       std::to_string(acceleration));
  }
  const auto [hbar, k_B, c] = constants();
  return hbar * acceleration / (2.0 * pi * k_B * c);
}

double mean_occupation(double omega, double acceleration) {
  if (!(omega > 0.0)) {
    throw domain_error("mean_occupation: omega must be positive");
  }
  if (!(acceleration > 0.0)) {
    throw domain_error("mean_occupation: acceleration must be positive");
  }
  const double x = 2.0 * pi * constants().c * omega / acceleration;
  if (x > 700.0) return std::exp(-x);
  return 1.0 / std::expm1(x);
}

double conducting_sphere_cross_section(double wavenumber, double radius) {
  if (!(wavenumber > 0.0)) {
    throw domain_error("cross_section: wavenumber must be positive");
  }
  if (!(radius > 0.0)) {
    throw domain_error("cross_section: radius must be positive");
  }
  const double kr = wavenumber * radius;
  if (kr >= 0.1) {
    throw validity_error(
        "cross_section: k r = " + std::to_string(kr) +
        " violates the Rayleigh (long-wavelength) regime k r < 0.1");
  }
  return (10.0 * pi / 3.0) * radius * radius * kr * kr * kr * kr;
}

double unruh_delta_theta0_closed_form(double rmv, double collision_speed,
                                      double alpha) {
  const auto [hbar, k_B, c] = constants();
  (void)k_B;
  return (hbar / rmv) *
         std::sqrt(kFactorial8 * 5.0 * c / (3.0 * pi * collision_speed)) *
         std::exp(-4.5 * std::log(alpha));
}

UnruhEstimate estimate_unruh(const GasState& state, IntegralMethod method) {
  const auto [hbar, k_B, c] = constants();
  (void)k_B;
  const double r = state.species.radius;
  const double m = state.species.mass;
  const double v = state.v_rms;

  UnruhEstimate est;
  est.integral_method = method;
  est.acceleration = collision_acceleration(state);
  est.unruh_temperature = unruh_temperature(est.acceleration);
  est.alpha = 2.0 * pi * c * c / (est.acceleration * r);
  if (est.alpha < kAlphaGuard) {
    throw validity_error("estimate_unruh: alpha = " +
                         std::to_string(est.alpha) +
                         " below the nonrelativistic guard 1e3");
  }
  est.peak_wavenumber = 8.0 / (est.alpha * r);
  est.peak_wavelength = 2.0 * pi / est.peak_wavenumber;

  const IntegralResult integral = bose_power_integral(est.alpha, 8, method);
  est.delta_p_squared =
      (5.0 * hbar * hbar / (3.0 * pi * r * r)) * (c / v) * integral.value;
  est.delta_theta0 = std::sqrt(est.delta_p_squared) / (m * v);
  return est;
}

CalibratedUnruh estimate_unruh_calibrated(double rmv_over_hbar, double alpha,
                                          double temperature,
                                          double collision_speed) {
  if (!(rmv_over_hbar > 0.0)) {
    throw domain_error("calibration: rmv_over_hbar must be positive");
  }
  if (!(alpha > 0.0)) {
    throw domain_error("calibration: alpha must be positive");
  }
  if (!(collision_speed > 0.0)) {
    throw domain_error("calibration: collision speed must be positive");
  }
  const double rmv = rmv_over_hbar * constants().hbar;
  CalibratedUnruh cal;
  cal.rmv_over_hbar = rmv_over_hbar;
  cal.alpha = alpha;
  cal.temperature = temperature;
  cal.collision_speed = collision_speed;
  cal.delta_theta0 =
      unruh_delta_theta0_closed_form(rmv, collision_speed, alpha);
  return cal;
}

}  // namespace vacrad
