#include "vacrad/mdw.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vacrad/constants.hpp"
#include "vacrad/errors.hpp"

namespace vacrad {

namespace {
constexpr double pi = std::numbers::pi;
const double kCouplingPrefactor = std::sqrt(10.0 * pi / 3.0);
}  // namespace

double dn_zeta(double u) {
  if (!(u > 0.0)) {
    throw domain_error("dn_zeta: u must be positive, got " +
                       std::to_string(u));
  }
  if (u < 1e-4) {
    // Series of the printed formula: -2/u + (5/6)u - (9/20)u^3 + ...
    return -2.0 / u + (5.0 / 6.0) * u - (9.0 / 20.0) * u * u * u;
  }
  return std::log1p(u * u) / (2.0 * u) - std::atan(u) / (u * u) - 1.0 / u;
}

double dn_coupling(double wavenumber, double radius, double omega) {
  if (!(wavenumber > 0.0)) {
    throw domain_error("dn_coupling: wavenumber must be positive");
  }
  if (!(radius > 0.0)) {
    throw domain_error("dn_coupling: radius must be positive");
  }
  if (!(omega > 0.0)) {
    throw domain_error("dn_coupling: omega must be positive");
  }
  const double kr = wavenumber * radius;
  return kCouplingPrefactor * kr * kr * kr * omega;
}

MdwEstimate estimate_mdw(const GasState& state) {
  const auto [hbar, k_B, c] = constants();
  (void)k_B;
  const double r = state.species.radius;
  const double m = state.species.mass;
  const double v = state.v_rms;

  if (!(v / c < 0.01)) {
    throw validity_error("estimate_mdw: v_rms/c = " + std::to_string(v / c) +
                         " violates the nonrelativistic regime v/c < 0.01");
  }

  MdwEstimate est;
  est.omega0 = v / r;
  // The sampled band of the half-period "oscillation" is k r = v/c.
  const double kr = v / c;
  est.coupling_omega = dn_coupling(kr / r, r, est.omega0);
  est.u_ratio = est.omega0 / est.coupling_omega;
  if (!(est.u_ratio > 10.0)) {
    throw validity_error("estimate_mdw: u_ratio = " +
                         std::to_string(est.u_ratio) +
                         " violates the logarithmic regime u_ratio > 10");
  }
  est.zeta_value = dn_zeta(est.u_ratio);
  est.gamma_rate = hbar * est.coupling_omega * est.omega0 /
                   (2.0 * pi * m * c * c) * est.zeta_value;
  // One collision = one half-period: tau = pi / omega0.
  const double tau = pi / est.omega0;
  est.delta_p_squared = est.gamma_rate * m * est.omega0 * hbar * tau / 2.0;
  est.delta_theta0 = std::sqrt(est.delta_p_squared) / (m * v);
  return est;
}

double mdw_delta_theta0_closed_form(const GasState& state) {
  const auto [hbar, k_B, c] = constants();
  (void)k_B;
  const double r = state.species.radius;
  const double m = state.species.mass;
  const double v = state.v_rms;
  const double vc = v / c;
  const double u = 1.0 / (kCouplingPrefactor * vc * vc * vc);
  return hbar / (r * m * v) * std::sqrt((5.0 * pi / 6.0) * std::log(u)) * vc *
         vc * vc * vc;
}

}  // namespace vacrad
