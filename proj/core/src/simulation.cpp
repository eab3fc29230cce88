#include "vacrad/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "vacrad/collision.hpp"
#include "vacrad/errors.hpp"

namespace vacrad::sim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kPrngName = "mt19937_64+boxmuller-v1";
constexpr std::uint64_t kKickSeedSalt = 0x9E3779B97F4A7C15ull;

// Uniform/normal draws are hand-rolled on top of mt19937_64: the standard
// pins the engine but not the <random> distributions, and the serialized
// output must not depend on the standard library flavour.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1), 53-bit
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double normal() {  // Box-Muller with cached spare
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = uniform();
    while (u == 0.0) u = uniform();
    const double rho = std::sqrt(-2.0 * std::log(u));
    const double phi = 2.0 * kPi * uniform();
    spare_ = rho * std::sin(phi);
    have_spare_ = true;
    return rho * std::cos(phi);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

struct Event {
  double t = 0.0;
  enum Kind : int { collision = 0, crossing = 1, resync = 2 };
  Kind kind = collision;
  int a = -1, b = -1;
  std::uint64_t stamp_a = 0, stamp_b = 0;
  int axis = 0, dir = 0;  // crossing details
};

// Min-heap order with full tie-break so processing order is reproducible.
// Collisions sort before crossings at equal times, which lets the collision
// invalidate the pending crossing of a participant.
struct EventLater {
  bool operator()(const Event& x, const Event& y) const {
    if (x.t != y.t) return x.t > y.t;
    if (x.kind != y.kind) return x.kind > y.kind;
    if (x.a != y.a) return x.a > y.a;
    return x.b > y.b;
  }
};

double& comp(Vec3& v, int k) { return k == 0 ? v.x : (k == 1 ? v.y : v.z); }

// Earliest non-negative contact root for one image of the separation.
std::optional<double> image_root(const Vec3& d, const Vec3& dv,
                                 double radius) {
  const double b = dot(d, dv);
  if (b >= 0.0) return std::nullopt;
  const double a = norm2(dv);
  if (a == 0.0) return std::nullopt;
  const double c = norm2(d) - 4.0 * radius * radius;
  if (c < 0.0) return 0.0;
  const double disc = b * b - a * c;
  if (disc < 0.0) return std::nullopt;
  const double t = (-b - std::sqrt(disc)) / a;
  return t < 0.0 ? 0.0 : t;
}

/// Single hard-sphere replica: lazy per-particle positions, cell-crossing
/// events where the box admits >= 3 cells per axis, otherwise all-pairs
/// prediction over periodic images refreshed by resync events.
class System {
 public:
  explicit System(const SimConfig& cfg)
      : cfg_(cfg),
        n_(cfg.n_particles),
        pos_(n_),
        vel_(n_),
        commit_t_(n_, 0.0),
        last_collision_t_(n_, 0.0),
        stamp_(n_, 0),
        cell_(n_) {}

  void initialize(Rng& rng) {
    place_positions(rng);
    for (auto& v : vel_) {
      v = {cfg_.speed_scale * rng.normal(), cfg_.speed_scale * rng.normal(),
           cfg_.speed_scale * rng.normal()};
    }
  }

  void rotate_velocity(int i, double angle) {
    const Vec3 axis = any_transverse(normalized(vel_[i]));
    vel_[i] = rotated(vel_[i], axis, angle);
  }

  void enable_kicks(std::uint64_t seed, double sigma) {
    kick_rng_ = Rng(seed);
    kick_sigma_ = sigma;
    kicks_enabled_ = true;
  }

  void start() {
    setup_cells();
    energy0_ = kinetic_energy();
    momentum0_ = total_momentum();
    if (cells_enabled_) {
      for (int i = 0; i < n_; ++i) schedule_crossing(i);
    } else {
      schedule_resync();
    }
    for (int i = 0; i < n_; ++i) {
      for_candidates(i, [&](int j) {
        if (j > i) schedule_pair(i, j);
      });
    }
  }

  /// Processes events until one collision has been resolved.
  void advance_to_next_collision() {
    std::int64_t budget = 0;
    while (true) {
      if (++budget > 200'000'000) {
        throw integrity_error("simulation: no collision within event budget");
      }
      if (queue_.empty()) {
        throw integrity_error("simulation: event queue exhausted");
      }
      const Event e = queue_.top();
      queue_.pop();

      if (e.kind == Event::collision) {
        if (e.stamp_a != stamp_[e.a] || e.stamp_b != stamp_[e.b]) continue;
      } else if (e.kind == Event::crossing) {
        if (e.stamp_a != stamp_[e.a]) continue;
      }
      if (e.t < time_) {
        throw integrity_error("simulation: event time decreased from " +
                              std::to_string(time_) + " to " +
                              std::to_string(e.t));
      }
      time_ = e.t;

      switch (e.kind) {
        case Event::crossing:
          process_crossing(e);
          break;
        case Event::resync:
          process_resync();
          break;
        case Event::collision:
          process_collision(e);
          return;
      }
    }
  }

  std::int64_t collision_events() const { return collision_events_; }
  double time() const { return time_; }
  const std::vector<Vec3>& velocities() const { return vel_; }

  /// Closes the still-open flight legs so the estimate is total distance
  /// over total collisions (dropping them censors long legs and biases
  /// lambda low by ~1/collisions-per-particle).
  void finalize_paths() {
    if (paths_finalized_) return;
    paths_finalized_ = true;
    for (int i = 0; i < n_; ++i) {
      path_sum_ += norm(vel_[i]) * (time_ - last_collision_t_[i]);
    }
  }

  double mean_free_path_measured() const {
    return particle_collisions_ == 0
               ? 0.0
               : path_sum_ / static_cast<double>(particle_collisions_);
  }

  double energy_drift() const { return energy_drift_; }
  const std::array<double, 3>& momentum_drift() const {
    return momentum_drift_;
  }
  double initial_momentum_norm() const { return norm(momentum0_); }

  void final_audit() { audit(); }

 private:
  void place_positions(Rng& rng) {
    const double L = cfg_.box_length;
    const double min_dist2 =
        4.0 * cfg_.radius * cfg_.radius * (1.0 + 1e-9);
    bool done = true;
    for (int i = 0; i < n_; ++i) {
      bool ok = false;
      for (int attempt = 0; attempt < 5000 && !ok; ++attempt) {
        const Vec3 p{rng.uniform() * L, rng.uniform() * L, rng.uniform() * L};
        ok = true;
        for (int j = 0; j < i; ++j) {
          if (norm2(minimum_image(p - pos_[j], L)) < min_dist2) {
            ok = false;
            break;
          }
        }
        if (ok) pos_[i] = p;
      }
      if (!ok) {
        done = false;
        break;
      }
    }
    if (done) return;

    // Dense config: fall back to a simple cubic lattice.
    const int side = static_cast<int>(std::ceil(std::cbrt(double(n_))));
    const double spacing = L / side;
    if (spacing * spacing <= min_dist2) {
      throw domain_error("simulation: packing too dense to place particles");
    }
    int placed = 0;
    for (int x = 0; x < side && placed < n_; ++x) {
      for (int y = 0; y < side && placed < n_; ++y) {
        for (int z = 0; z < side && placed < n_; ++z) {
          pos_[placed++] = {(x + 0.5) * spacing, (y + 0.5) * spacing,
                            (z + 0.5) * spacing};
        }
      }
    }
  }

  void setup_cells() {
    const int by_size = static_cast<int>(
        std::floor(cfg_.box_length / (2.0 * cfg_.radius * (1.0 + 1e-9))));
    const int by_count =
        std::max(3, static_cast<int>(std::cbrt(n_ / 2.0)) + 1);
    n_cells_ = std::min(by_size, by_count);
    cells_enabled_ = n_cells_ >= 3;
    if (!cells_enabled_) return;
    cell_size_ = cfg_.box_length / n_cells_;
    cell_lists_.assign(
        static_cast<std::size_t>(n_cells_) * n_cells_ * n_cells_, {});
    for (int i = 0; i < n_; ++i) {
      for (int k = 0; k < 3; ++k) {
        int c = static_cast<int>(comp(pos_[i], k) / cell_size_);
        cell_[i][k] = std::clamp(c, 0, n_cells_ - 1);
      }
      cell_lists_[cell_index(cell_[i])].push_back(i);
    }
  }

  std::size_t cell_index(const std::array<int, 3>& c) const {
    return static_cast<std::size_t>(c[0]) +
           static_cast<std::size_t>(n_cells_) *
               (static_cast<std::size_t>(c[1]) +
                static_cast<std::size_t>(n_cells_) *
                    static_cast<std::size_t>(c[2]));
  }

  Vec3 projected(int i) const {
    return pos_[i] + vel_[i] * (time_ - commit_t_[i]);
  }

  void commit(int i) {
    pos_[i] = projected(i);
    commit_t_[i] = time_;
    if (!cells_enabled_) {
      // No crossing events wrap positions in this mode.
      const double L = cfg_.box_length;
      for (int k = 0; k < 3; ++k) {
        double& p = comp(pos_[i], k);
        p -= L * std::floor(p / L);
      }
    }
  }

  template <typename F>
  void for_candidates(int i, F&& f) const {
    if (!cells_enabled_) {
      for (int j = 0; j < n_; ++j) {
        if (j != i) f(j);
      }
      return;
    }
    const auto& c = cell_[i];
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dz = -1; dz <= 1; ++dz) {
          const std::array<int, 3> nc{
              (c[0] + dx + n_cells_) % n_cells_,
              (c[1] + dy + n_cells_) % n_cells_,
              (c[2] + dz + n_cells_) % n_cells_};
          for (int j : cell_lists_[cell_index(nc)]) {
            if (j != i) f(j);
          }
        }
      }
    }
  }

  void schedule_pair(int i, int j) {
    const Vec3 da = projected(i);
    const Vec3 db = projected(j);
    const Vec3 dv = vel_[j] - vel_[i];
    const Vec3 d = minimum_image(db - da, cfg_.box_length);

    // Contact residuals scale with ulp(t) * v over long runs; the budget
    // here is the run-wide 1e-9 r overlap invariant, not the tighter
    // fresh-coordinate precondition of the public predictor.
    const double dist = norm(d);
    if (dist < cfg_.radius * (2.0 - 1e-9)) {
      throw integrity_error(
          "simulation: overlapping pair while scheduling (distance " +
          std::to_string(dist) + ")");
    }

    std::optional<double> root;
    if (cells_enabled_) {
      root = image_root(d, dv, cfg_.radius);
    } else {
      // Small box: consider the 27 nearest periodic images. Valid while the
      // relative displacement stays below ~L, which the resync cadence
      // guarantees.
      const double L = cfg_.box_length;
      for (int ix = -1; ix <= 1; ++ix) {
        for (int iy = -1; iy <= 1; ++iy) {
          for (int iz = -1; iz <= 1; ++iz) {
            const Vec3 img{d.x + ix * L, d.y + iy * L, d.z + iz * L};
            const auto t = image_root(img, dv, cfg_.radius);
            if (t && (!root || *t < *root)) root = t;
          }
        }
      }
    }
    if (!root) return;

    Event e;
    e.t = time_ + *root;
    e.kind = Event::collision;
    e.a = std::min(i, j);
    e.b = std::max(i, j);
    e.stamp_a = stamp_[e.a];
    e.stamp_b = stamp_[e.b];
    queue_.push(e);
  }

  void schedule_crossing(int i) {
    double best = std::numeric_limits<double>::infinity();
    int axis = -1, dir = 0;
    for (int k = 0; k < 3; ++k) {
      const double v = comp(vel_[i], k);
      if (v == 0.0) continue;
      const double bound =
          (cell_[i][k] + (v > 0.0 ? 1 : 0)) * cell_size_;
      double t = (bound - comp(pos_[i], k)) / v;
      if (t < 0.0) t = 0.0;  // round-off overshoot of the boundary
      if (t < best) {
        best = t;
        axis = k;
        dir = v > 0.0 ? 1 : -1;
      }
    }
    if (axis < 0) return;
    Event e;
    e.t = time_ + best;
    e.kind = Event::crossing;
    e.a = i;
    e.stamp_a = stamp_[i];
    e.axis = axis;
    e.dir = dir;
    queue_.push(e);
  }

  void process_crossing(const Event& e) {
    const int i = e.a;
    commit(i);

    auto& list = cell_lists_[cell_index(cell_[i])];
    list.erase(std::find(list.begin(), list.end(), i));
    cell_[i][e.axis] += e.dir;
    if (cell_[i][e.axis] < 0) {
      cell_[i][e.axis] += n_cells_;
      comp(pos_[i], e.axis) += cfg_.box_length;
    } else if (cell_[i][e.axis] >= n_cells_) {
      cell_[i][e.axis] -= n_cells_;
      comp(pos_[i], e.axis) -= cfg_.box_length;
    }
    cell_lists_[cell_index(cell_[i])].push_back(i);

    schedule_crossing(i);
    for_candidates(i, [&](int j) { schedule_pair(i, j); });
  }

  void process_resync() {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) schedule_pair(i, j);
    }
    schedule_resync();
  }

  void schedule_resync() {
    // No particle can ever move faster than sqrt(2 E_total), so this
    // cadence keeps every pair's relative displacement under 0.4 L between
    // re-predictions regardless of how collisions redistribute energy.
    const double v_bound = std::sqrt(2.0 * kinetic_energy());
    if (v_bound == 0.0) return;
    Event e;
    e.t = time_ + 0.2 * cfg_.box_length / v_bound;
    e.kind = Event::resync;
    queue_.push(e);
  }

  void process_collision(const Event& e) {
    const int i = e.a, j = e.b;
    commit(i);
    commit(j);

    const auto out = resolve_elastic_collision(pos_[i], vel_[i], pos_[j],
                                               vel_[j], cfg_.radius,
                                               cfg_.box_length);

    // Free-flight legs since each particle's previous collision (speeds are
    // constant in between, kicks only rotate).
    path_sum_ += norm(vel_[i]) * (time_ - last_collision_t_[i]);
    path_sum_ += norm(vel_[j]) * (time_ - last_collision_t_[j]);
    last_collision_t_[i] = last_collision_t_[j] = time_;

    vel_[i] = out.a;
    vel_[j] = out.b;
    if (kicks_enabled_) {
      apply_kick(i);
      apply_kick(j);
    }
    ++stamp_[i];
    ++stamp_[j];
    ++collision_events_;
    particle_collisions_ += 2;

    if (cells_enabled_) {
      schedule_crossing(i);
      schedule_crossing(j);
    }
    for_candidates(i, [&](int k) { schedule_pair(i, k); });
    for_candidates(j, [&](int k) {
      if (k != i) schedule_pair(j, k);
    });

    if (collision_events_ % cfg_.audit_interval == 0) audit();
  }

  void apply_kick(int i) {
    const Vec3 dir = normalized(vel_[i]);
    const Vec3 e1 = any_transverse(dir);
    const Vec3 e2 = cross(dir, e1);
    const double phi = 2.0 * kPi * kick_rng_.uniform();
    const double angle = kick_sigma_ * kick_rng_.normal();
    const Vec3 axis = e1 * std::cos(phi) + e2 * std::sin(phi);
    vel_[i] = rotated(vel_[i], axis, angle);
  }

  double kinetic_energy() const {
    double e = 0.0;
    for (const auto& v : vel_) e += 0.5 * norm2(v);
    return e;
  }

  Vec3 total_momentum() const {
    Vec3 p{};
    for (const auto& v : vel_) p += v;
    return p;
  }

  void audit() {
    const double limit = cfg_.radius * (2.0 - 1e-9);
    for (int i = 0; i < n_; ++i) {
      const Vec3 pi = projected(i);
      for (int j = i + 1; j < n_; ++j) {
        const double dist =
            norm(minimum_image(projected(j) - pi, cfg_.box_length));
        if (dist < limit) {
          throw integrity_error(
              "simulation: overlap beyond tolerance at audit (distance " +
              std::to_string(dist) + ", 2r = " +
              std::to_string(2.0 * cfg_.radius) + ")");
        }
      }
    }
    const double e = kinetic_energy();
    energy_drift_ = std::max(energy_drift_,
                             std::fabs(e - energy0_) / energy0_);
    const Vec3 p = total_momentum();
    momentum_drift_[0] = std::max(momentum_drift_[0],
                                  std::fabs(p.x - momentum0_.x));
    momentum_drift_[1] = std::max(momentum_drift_[1],
                                  std::fabs(p.y - momentum0_.y));
    momentum_drift_[2] = std::max(momentum_drift_[2],
                                  std::fabs(p.z - momentum0_.z));
  }

  SimConfig cfg_;
  int n_;
  std::vector<Vec3> pos_, vel_;
  std::vector<double> commit_t_, last_collision_t_;
  std::vector<std::uint64_t> stamp_;
  std::vector<std::array<int, 3>> cell_;
  std::vector<std::vector<int>> cell_lists_;
  std::priority_queue<Event, std::vector<Event>, EventLater> queue_;

  bool cells_enabled_ = false;
  int n_cells_ = 0;
  double cell_size_ = 0.0;

  double time_ = 0.0;
  std::int64_t collision_events_ = 0;
  std::int64_t particle_collisions_ = 0;
  double path_sum_ = 0.0;
  bool paths_finalized_ = false;

  double energy0_ = 0.0;
  Vec3 momentum0_{};
  double energy_drift_ = 0.0;
  std::array<double, 3> momentum_drift_{};

  Rng kick_rng_{0};
  double kick_sigma_ = 0.0;
  bool kicks_enabled_ = false;
};

double rms_angle(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ang = angle_between(a[i], b[i]);
    sum += ang * ang;
  }
  return std::sqrt(sum / static_cast<double>(a.size()));
}

double mean_direction_correlation(const std::vector<Vec3>& a,
                                  const std::vector<Vec3>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += dot(a[i], b[i]) / (norm(a[i]) * norm(b[i]));
  }
  return sum / static_cast<double>(a.size());
}

// Least-squares slope of ln(rms) vs mean collisions per particle over the
// window where the divergence is past its transient but not yet saturated.
double fit_log_growth(const std::vector<DivergencePoint>& series,
                      int n_particles, double perturbation) {
  const double lo = 0.1 * perturbation;
  const double hi = 0.1;
  std::vector<std::pair<double, double>> pts;
  for (const auto& p : series) {
    if (p.rms_angle > lo && p.rms_angle > 0.0 && p.rms_angle < hi) {
      pts.emplace_back(2.0 * static_cast<double>(p.collision_index) /
                           n_particles,
                       std::log(p.rms_angle));
    }
  }
  if (pts.size() < 2) return 0.0;
  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
  }
  const double mx = sx / pts.size(), my = sy / pts.size();
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  return sxx == 0.0 ? 0.0 : sxy / sxx;
}

}  // namespace

double packing_fraction(const SimConfig& cfg) {
  const double v = (4.0 / 3.0) * kPi * cfg.radius * cfg.radius * cfg.radius;
  return cfg.n_particles * v /
         (cfg.box_length * cfg.box_length * cfg.box_length);
}

void validate(const SimConfig& cfg) {
  if (cfg.n_particles < 2) {
    throw domain_error("sim config: need at least 2 particles");
  }
  if (!(cfg.box_length > 0.0) || !std::isfinite(cfg.box_length)) {
    throw domain_error("sim config: box_length must be positive and finite");
  }
  if (!(cfg.radius > 0.0) || !std::isfinite(cfg.radius)) {
    throw domain_error("sim config: radius must be positive and finite");
  }
  if (!(cfg.speed_scale > 0.0) || !std::isfinite(cfg.speed_scale)) {
    throw domain_error("sim config: speed_scale must be positive and finite");
  }
  if (!(cfg.perturbation >= 0.0) || !std::isfinite(cfg.perturbation)) {
    throw domain_error("sim config: perturbation must be >= 0 and finite");
  }
  if (cfg.max_collisions_per_particle < 1) {
    throw domain_error("sim config: max_collisions_per_particle must be >= 1");
  }
  if (cfg.audit_interval < 1) {
    throw domain_error("sim config: audit_interval must be >= 1");
  }
  const double packing = packing_fraction(cfg);
  if (!(packing < 0.3)) {
    throw domain_error("sim config: packing fraction " +
                       std::to_string(packing) +
                       " outside the dilute regime (< 0.3)");
  }
}

SimResult run(const SimConfig& cfg) {
  validate(cfg);

  Rng rng(cfg.seed);
  System a(cfg);
  a.initialize(rng);
  System b(a);
  if (cfg.mode == SimMode::twin && cfg.perturbation > 0.0) {
    b.rotate_velocity(0, cfg.perturbation);
  }
  if (cfg.mode == SimMode::kick) {
    b.enable_kicks(cfg.seed ^ kKickSeedSalt, cfg.perturbation);
  }
  a.start();
  b.start();

  const std::int64_t target =
      (static_cast<std::int64_t>(cfg.n_particles) *
           cfg.max_collisions_per_particle + 1) / 2;

  SimResult result;
  result.config = cfg;
  result.prng_name = kPrngName;
  result.divergence_series.reserve(static_cast<std::size_t>(target));
  result.initial_momentum_norm = a.initial_momentum_norm();

  constexpr double kDecorrelationThreshold = 0.36787944117144233;  // 1/e
  while (a.collision_events() < target) {
    a.advance_to_next_collision();
    b.advance_to_next_collision();
    const std::int64_t k = a.collision_events();
    result.divergence_series.push_back(
        {k, rms_angle(a.velocities(), b.velocities())});
    if (cfg.mode == SimMode::kick) {
      const double corr =
          mean_direction_correlation(a.velocities(), b.velocities());
      if (corr < kDecorrelationThreshold) {
        result.decorrelated = true;
        result.decorrelation_cpp =
            2.0 * static_cast<double>(k) / cfg.n_particles;
        break;
      }
    }
  }
  a.final_audit();
  b.final_audit();
  a.finalize_paths();

  result.collisions_elapsed = a.collision_events();
  result.duration = a.time();
  result.fitted_log_growth_per_collision =
      fit_log_growth(result.divergence_series, cfg.n_particles,
                     cfg.perturbation);
  result.mean_free_path_measured = a.mean_free_path_measured();
  result.gain_measured = 2.0 * result.mean_free_path_measured / cfg.radius;
  result.collision_rate_measured =
      result.duration > 0.0
          ? 2.0 * static_cast<double>(result.collisions_elapsed) /
                (cfg.n_particles * result.duration)
          : 0.0;

  // Conservation metrics come from Hamiltonian replicas only; the kicked
  // replica changes momentum by construction.
  result.energy_drift = a.energy_drift();
  result.momentum_drift = a.momentum_drift();
  if (cfg.mode == SimMode::twin) {
    result.energy_drift = std::max(result.energy_drift, b.energy_drift());
    for (int c = 0; c < 3; ++c) {
      result.momentum_drift[c] =
          std::max(result.momentum_drift[c], b.momentum_drift()[c]);
    }
  }
  return result;
}

std::string to_string(SimMode mode) {
  return mode == SimMode::twin ? "twin" : "kick";
}

SimMode sim_mode_from_string(const std::string& name) {
  if (name == "twin") return SimMode::twin;
  if (name == "kick") return SimMode::kick;
  throw domain_error("unknown simulation mode '" + name +
                     "'; expected twin|kick");
}

std::string to_json(const SimResult& r) {
  nlohmann::ordered_json j;
  j["config"] = {
      {"n_particles", r.config.n_particles},
      {"box_length_m", r.config.box_length},
      {"radius_m", r.config.radius},
      {"speed_scale_m_s", r.config.speed_scale},
      {"seed", r.config.seed},
      {"mode", to_string(r.config.mode)},
      {"perturbation_rad", r.config.perturbation},
      {"max_collisions_per_particle", r.config.max_collisions_per_particle},
      {"audit_interval", r.config.audit_interval},
      {"packing_fraction", packing_fraction(r.config)},
  };
  j["prng"] = r.prng_name;
  j["collisions_elapsed"] = r.collisions_elapsed;
  j["duration_s"] = r.duration;
  j["energy_drift"] = r.energy_drift;
  j["momentum_drift"] = r.momentum_drift;
  j["initial_momentum_norm"] = r.initial_momentum_norm;
  j["mean_free_path_measured_m"] = r.mean_free_path_measured;
  j["gain_measured"] = r.gain_measured;
  j["collision_rate_measured_per_particle_hz"] = r.collision_rate_measured;
  j["fitted_log_growth_per_collision"] = r.fitted_log_growth_per_collision;
  j["decorrelated"] = r.decorrelated;
  j["decorrelation_collisions_per_particle"] = r.decorrelation_cpp;
  auto& series = j["divergence_series"] = nlohmann::ordered_json::array();
  for (const auto& p : r.divergence_series) {
    series.push_back({p.collision_index, p.rms_angle});
  }
  return j.dump();
}

}  // namespace vacrad::sim
