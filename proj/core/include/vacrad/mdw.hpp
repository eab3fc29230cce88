#pragma once

#include "vacrad/gas_model.hpp"

namespace vacrad {

/// Momentum-diffusion estimate for the moving-boundary (dynamical Casimir)
/// channel of a single hard-sphere collision.
struct MdwEstimate {
  double omega0;          // collision "oscillation" frequency v/r, rad/s
  double coupling_omega;  // Omega, rad/s
  double u_ratio;         // omega0 / Omega
  double zeta_value;      // zeta(u_ratio), dimensionless
  double gamma_rate;      // 1/s
  double delta_p_squared; // kg^2 m^2 / s^2
  double delta_theta0;    // radians
};

/// zeta(u) = ln(1+u^2)/(2u) - arctan(u)/u^2 - 1/u, with a series branch for
/// u < 1e-4. Requires u > 0.
double dn_zeta(double u);

/// Mirror-model coupling Omega = sqrt(10 pi / 3) (k r)^3 omega.
double dn_coupling(double wavenumber, double radius, double omega);

/// Full per-collision estimate. Guards: v_rms/c < 0.01 (nonrelativistic)
/// and u_ratio > 10 (logarithmic regime); throws validity_error naming the
/// violated regime.
MdwEstimate estimate_mdw(const GasState& state);

/// Closed-form route with zeta replaced by its log asymptote:
///   delta_theta0 = (hbar/(r m v)) sqrt((5 pi / 6) ln(omega0/Omega)) (v/c)^4.
double mdw_delta_theta0_closed_form(const GasState& state);

}  // namespace vacrad
