#include "vacrad/randomization.hpp"

#include <cmath>
#include <string>

#include "vacrad/errors.hpp"

namespace vacrad {

double amplified_angle(double delta_theta0, double gain, std::int64_t n) {
  if (!(delta_theta0 > 0.0)) {
    throw domain_error("amplified_angle: delta_theta0 must be positive");
  }
  if (!(gain > 0.0)) {
    throw domain_error("amplified_angle: gain must be positive");
  }
  if (n < 0) {
    throw domain_error("amplified_angle: n must be >= 0");
  }
  if (n == 0) return delta_theta0;
  return std::exp(static_cast<double>(n) * std::log(gain) +
                  std::log(delta_theta0));
}

std::int64_t collisions_to_randomize(double delta_theta0, double gain) {
  if (!(delta_theta0 > 0.0)) {
    throw domain_error("collisions_to_randomize: delta_theta0 must be > 0");
  }
  if (!(gain > 1.0)) {
    throw domain_error(
        "collisions_to_randomize: gain must exceed 1 for exponential "
        "amplification, got " +
        std::to_string(gain));
  }
  if (delta_theta0 >= 1.0) return 0;
  const double ratio = -std::log(delta_theta0) / std::log(gain);
  // Nudge below the ceiling so an exactly-integer ratio (delta_theta0 a
  // whole power of 1/gain) is not pushed one collision up by round-off.
  return static_cast<std::int64_t>(std::ceil(ratio - 1e-12));
}

RandomizationReport build_report(const GasState& state, Channel channel,
                                 double delta_theta0) {
  return build_report(state, channel, delta_theta0,
                      2.0 * state.mean_free_path / state.species.radius);
}

RandomizationReport build_report(const GasState& state, Channel channel,
                                 double delta_theta0, double gain) {
  RandomizationReport report;
  report.channel = channel;
  report.delta_theta0 = delta_theta0;
  report.gain = gain;
  report.n_collisions = collisions_to_randomize(delta_theta0, gain);
  report.randomization_time =
      static_cast<double>(report.n_collisions) / state.collision_rate;
  return report;
}

const char* to_string(Channel channel) {
  return channel == Channel::unruh ? "unruh" : "mdw";
}

}  // namespace vacrad
