#pragma once

#include "vacrad/gas_model.hpp"
#include "vacrad/quadrature.hpp"

namespace vacrad {

/// Momentum-diffusion estimate for the acceleration-radiation channel of a
/// single hard-sphere collision.
struct UnruhEstimate {
  double acceleration;      // m/s^2
  double unruh_temperature; // K
  double alpha;             // 2 pi c^2 / (a r), dimensionless
  double peak_wavenumber;   // 8 / (alpha r), 1/m
  double peak_wavelength;   // 2 pi / peak_wavenumber, m
  double delta_p_squared;   // kg^2 m^2 / s^2
  double delta_theta0;      // radians
  IntegralMethod integral_method;
};

/// T_U = hbar a / (2 pi k_B c). Zero maps to zero; negative a is a domain error.
double unruh_temperature(double acceleration);

/// Mean thermal occupation 1 / (exp(2 pi c omega / a) - 1); switches to the
/// asymptotic exp(-2 pi c omega / a) once the exponent exceeds 700.
double mean_occupation(double omega, double acceleration);

/// Long-wavelength conducting-sphere cross-section (10 pi / 3) r^2 (k r)^4.
/// Requires k r < 0.1 (Rayleigh regime); throws validity_error otherwise.
double conducting_sphere_cross_section(double wavenumber, double radius);

/// Full per-collision estimate for a gas state. Throws validity_error when
/// alpha falls below 1e3 (relativistic regime, outside the model).
UnruhEstimate estimate_unruh(
    const GasState& state,
    IntegralMethod method = IntegralMethod::closed_form_factorial);

/// Closed-form angular kick
///   delta_theta0 = (hbar / (r m v)) sqrt(8! 5 c / (3 pi v)) alpha^(-9/2),
/// with r m v passed directly. Identical to the delta_p_squared route when
/// the factorial integral is selected.
double unruh_delta_theta0_closed_form(double rmv, double collision_speed,
                                      double alpha);

/// Reproduction entry point: r m v and alpha injected directly (as the
/// quoted intermediates of a worked example) instead of being derived from
/// a gas state.
struct CalibratedUnruh {
  double rmv_over_hbar;
  double alpha;
  double temperature;     // K, echoed
  double collision_speed; // m/s
  double delta_theta0;    // radians
};

CalibratedUnruh estimate_unruh_calibrated(double rmv_over_hbar, double alpha,
                                          double temperature,
                                          double collision_speed);

}  // namespace vacrad
