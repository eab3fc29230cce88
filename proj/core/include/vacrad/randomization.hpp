#pragma once

#include <cstdint>

#include "vacrad/gas_model.hpp"

namespace vacrad {

enum class Channel { unruh, mdw };

/// Collision count and wall-clock time needed to amplify a per-collision
/// angular kick to order unity.
struct RandomizationReport {
  Channel channel;
  double delta_theta0;       // radians
  double gain;               // per-collision amplification, 2 lambda / r
  std::int64_t n_collisions;
  double randomization_time; // n / collision_rate, s
};

/// gain^n * delta_theta0, evaluated in log space so large n never
/// overflows an intermediate.
double amplified_angle(double delta_theta0, double gain, std::int64_t n);

/// Smallest n with gain^n * delta_theta0 >= 1, i.e.
/// ceil(-ln(delta_theta0)/ln(gain)); 0 when delta_theta0 >= 1 already.
/// Requires delta_theta0 > 0 and gain > 1.
std::int64_t collisions_to_randomize(double delta_theta0, double gain);

/// Report with the kinetic-theory gain 2 * mean_free_path / radius.
RandomizationReport build_report(const GasState& state, Channel channel,
                                 double delta_theta0);

/// Report with an explicitly supplied gain (calibrated reproduction path).
RandomizationReport build_report(const GasState& state, Channel channel,
                                 double delta_theta0, double gain);

const char* to_string(Channel channel);

}  // namespace vacrad
