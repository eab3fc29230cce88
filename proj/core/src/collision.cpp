#include "vacrad/collision.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vacrad/errors.hpp"

namespace vacrad::sim {

namespace {

bool is_periodic(double box_length) {
  return box_length > 0.0 && std::isfinite(box_length);
}

// Earliest non-negative root of |d + dv t| = 2r for one fixed image of the
// separation d, or nullopt. Assumes the pair is not already overlapping
// beyond tolerance (caller checks).
std::optional<double> contact_root(const Vec3& d, const Vec3& dv,
                                   double radius) {
  const double b = dot(d, dv);
  if (b >= 0.0) return std::nullopt;  // receding: distance increasing for t>0
  const double a = norm2(dv);
  if (a == 0.0) return std::nullopt;
  const double c = norm2(d) - 4.0 * radius * radius;
  if (c < 0.0) return 0.0;  // already at/inside contact and approaching
  const double disc = b * b - a * c;
  if (disc < 0.0) return std::nullopt;
  return (-b - std::sqrt(disc)) / a;
}

}  // namespace

Vec3 minimum_image(Vec3 d, double box_length) {
  if (!is_periodic(box_length)) return d;
  d.x -= box_length * std::nearbyint(d.x / box_length);
  d.y -= box_length * std::nearbyint(d.y / box_length);
  d.z -= box_length * std::nearbyint(d.z / box_length);
  return d;
}

std::optional<double> predict_pair_collision(const Vec3& pos_a,
                                             const Vec3& vel_a,
                                             const Vec3& pos_b,
                                             const Vec3& vel_b, double radius,
                                             double box_length) {
  if (!(radius > 0.0)) {
    throw domain_error("predict_pair_collision: radius must be positive");
  }
  const Vec3 d = minimum_image(pos_b - pos_a, box_length);
  const double dist = norm(d);
  if (dist < 2.0 * radius - 1e-12 * radius) {
    throw integrity_error(
        "predict_pair_collision: spheres overlap (centre distance " +
        std::to_string(dist) + " < 2r = " + std::to_string(2.0 * radius) +
        ")");
  }
  return contact_root(d, vel_b - vel_a, radius);
}

VelocityPair resolve_elastic_collision(const Vec3& pos_a, const Vec3& vel_a,
                                       const Vec3& pos_b, const Vec3& vel_b,
                                       double radius, double box_length) {
  const Vec3 d = minimum_image(pos_b - pos_a, box_length);
  const double dist = norm(d);
  if (std::fabs(dist - 2.0 * radius) > 1e-9 * radius) {
    throw integrity_error(
        "resolve_elastic_collision: centres not at contact (distance " +
        std::to_string(dist) + ", 2r = " + std::to_string(2.0 * radius) +
        ")");
  }
  const Vec3 n = d * (1.0 / dist);
  const double exchange = dot(vel_b - vel_a, n);
  return {vel_a + n * exchange, vel_b - n * exchange};
}

double deflection_sensitivity(double theta) {
  if (!(std::fabs(theta) < std::numbers::pi / 2.0)) {
    throw domain_error(
        "deflection_sensitivity: |theta| must be below pi/2, got " +
        std::to_string(theta));
  }
  // In the centre-of-mass frame the relative velocity reflects about the
  // contact normal, so the outgoing direction moves twice as fast as the
  // contact angle.
  return 2.0;
}

double deflection_sensitivity_finite_difference(double theta, double delta) {
  deflection_sensitivity(theta);  // same domain check
  if (!(delta > 0.0)) {
    throw domain_error("deflection_sensitivity_finite_difference: delta > 0");
  }

  const double radius = 0.5;
  auto outgoing_angle = [&](double contact_angle) {
    // Sphere A moving along +x hits resting sphere B whose centre sits at
    // contact angle `contact_angle` from the x axis.
    const Vec3 pos_a{0.0, 0.0, 0.0};
    const Vec3 vel_a{1.0, 0.0, 0.0};
    const Vec3 pos_b{2.0 * radius * std::cos(contact_angle),
                     2.0 * radius * std::sin(contact_angle), 0.0};
    const Vec3 vel_b{0.0, 0.0, 0.0};
    const auto out =
        resolve_elastic_collision(pos_a, vel_a, pos_b, vel_b, radius, 0.0);
    const Vec3 rel = out.a - out.b;
    return std::atan2(rel.y, rel.x);
  };

  double diff = outgoing_angle(theta + delta) - outgoing_angle(theta - delta);
  // Unwrap across the atan2 branch cut.
  constexpr double two_pi = 2.0 * std::numbers::pi;
  while (diff > std::numbers::pi) diff -= two_pi;
  while (diff < -std::numbers::pi) diff += two_pi;
  return diff / (2.0 * delta);
}

}  // namespace vacrad::sim
