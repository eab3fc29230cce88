#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vacrad/vec3.hpp"

namespace vacrad::sim {

enum class SimMode { twin, kick };

/// Reproducible event-driven hard-sphere run. All lengths/speeds are SI but
/// the dynamics are scale-free (equal unit masses).
struct SimConfig {
  int n_particles = 0;
  double box_length = 0.0;  // cubic periodic box, m
  double radius = 0.0;      // m
  double speed_scale = 1.0; // per-component sigma of the initial
                            // Maxwell-Boltzmann velocity draw, m/s
  std::uint64_t seed = 0;   // fully determines the run
  SimMode mode = SimMode::twin;
  double perturbation = 0.0; // rad: initial rotation of one velocity (twin)
                             // or per-collision kick sigma (kick)
  int max_collisions_per_particle = 0;
  int audit_interval = 4096; // collisions between full conservation and
                             // overlap audits
};

double packing_fraction(const SimConfig& config);

/// Throws domain_error for invalid configs (packing >= 0.3, bad counts, ...).
void validate(const SimConfig& config);

struct DivergencePoint {
  std::int64_t collision_index;
  double rms_angle;  // radians
};

struct SimResult {
  SimConfig config;       // echo of the effective config
  std::string prng_name;
  std::int64_t collisions_elapsed = 0;
  double duration = 0.0;  // simulated time, s
  std::vector<DivergencePoint> divergence_series;
  double fitted_log_growth_per_collision = 0.0; // slope of ln(rms angle)
                                                // vs collisions per particle
  double energy_drift = 0.0;                    // max relative drift
  std::array<double, 3> momentum_drift{};       // max absolute drift per
                                                // component, per unit mass
  double initial_momentum_norm = 0.0;           // |sum v| at t = 0
  double mean_free_path_measured = 0.0;         // m
  double gain_measured = 0.0;                   // 2 lambda_measured / r
  double collision_rate_measured = 0.0;         // per particle, 1/s
  bool decorrelated = false;                    // kick mode only
  double decorrelation_cpp = 0.0;               // collisions per particle at
                                                // which mean cos < 1/e
};

/// Runs the configured system. Twin mode evolves two replicas differing by
/// one rotated initial velocity and records their angular divergence; kick
/// mode evolves a kicked replica against an unkicked reference and records
/// when the velocity-direction correlation falls below 1/e.
SimResult run(const SimConfig& config);

/// Deterministic structured-text serialization (JSON field layout; see
/// README). Identical SimResults serialize byte-identically.
std::string to_json(const SimResult& result);

std::string to_string(SimMode mode);
SimMode sim_mode_from_string(const std::string& name);

}  // namespace vacrad::sim
