#pragma once

#include <optional>

#include "vacrad/vec3.hpp"

namespace vacrad::sim {

/// Component-wise minimum-image reduction of a separation vector into
/// [-L/2, L/2). Pass box_length <= 0 or infinity for free space (no-op).
Vec3 minimum_image(Vec3 d, double box_length);

/// Earliest t > 0 with |dx + dv t| = 2 r, dx the minimum-image separation
/// x_b - x_a; nullopt if the pair never reaches contact. Overlapping input
/// (centre distance < 2r - 1e-12 r) is an integrity_error.
std::optional<double> predict_pair_collision(const Vec3& pos_a,
                                             const Vec3& vel_a,
                                             const Vec3& pos_b,
                                             const Vec3& vel_b, double radius,
                                             double box_length);

struct VelocityPair {
  Vec3 a, b;
};

/// Elastic equal-mass collision at contact: exchanges the velocity
/// components along the centre line. Requires centre distance 2r within
/// 1e-9 r; throws integrity_error otherwise.
VelocityPair resolve_elastic_collision(const Vec3& pos_a, const Vec3& vel_a,
                                       const Vec3& pos_b, const Vec3& vel_b,
                                       double radius, double box_length);

/// Sensitivity of the outgoing direction to the contact angle for a fixed
/// incoming direction: analytically 2 for specular sphere-sphere exchange.
/// Requires |theta| < pi/2.
double deflection_sensitivity(double theta);

/// Same quantity measured by central finite difference through
/// resolve_elastic_collision at contact angle theta.
double deflection_sensitivity_finite_difference(double theta, double delta);

}  // namespace vacrad::sim
