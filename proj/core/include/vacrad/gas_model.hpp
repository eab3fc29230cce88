#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace vacrad {

/// A hard-sphere gas species.
struct GasSpecies {
  std::string name;
  double mass;    // molecular mass, kg
  double radius;  // effective hard-sphere radius, m
};

/// Kinetic-theory state of an ideal gas at a given temperature and pressure.
struct GasState {
  GasSpecies species;
  double temperature;     // K
  double pressure;        // Pa
  double number_density;  // 1/m^3
  double v_rms;           // sqrt(3 kB T / m), m/s
  double v_mean;          // sqrt(8 kB T / (pi m)), m/s
  double mean_free_path;  // 1/(sqrt(2) pi (2r)^2 n), m
  double collision_rate;  // v_mean / mean_free_path, 1/s
};

/// Derives the full kinetic-theory state. Throws domain_error naming the
/// offending field for non-positive temperature or pressure.
GasState derive_state(const GasSpecies& species, double temperature,
                      double pressure);

/// Characteristic acceleration during a collision, 3 kB T / (m r).
/// Equals v_rms^2 / r.
double collision_acceleration(const GasState& state);

/// Built-in species (N2, Ar, He). Throws lookup_error listing the
/// available names for an unknown species.
GasSpecies builtin_species(const std::string& name);

std::vector<GasSpecies> builtin_catalogue();

/// Species catalogue: built-ins plus optional overrides loaded from a
/// line-oriented key=value file. File format (one key per line, records
/// separated by a `name=` line or blank lines, `#` comments):
///
///   name=N2
///   mass_kg=4.651734508829244e-26
///   radius_m=1.85e-10
///
/// A loaded record with the name of a built-in replaces it.
class SpeciesCatalogue {
 public:
  static SpeciesCatalogue builtins();

  void load_file(const std::filesystem::path& path);
  void add(const GasSpecies& species);

  /// Throws lookup_error listing available species for an unknown name.
  GasSpecies find(const std::string& name) const;

  const std::vector<GasSpecies>& entries() const { return entries_; }

 private:
  std::vector<GasSpecies> entries_;
};

}  // namespace vacrad
