#include "vacrad/gas_model.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "vacrad/constants.hpp"
#include "vacrad/errors.hpp"

namespace vacrad {

namespace {

void check_species(const GasSpecies& s) {
  if (!(s.mass > 0.0)) {
    throw domain_error("species '" + s.name + "': mass must be positive");
  }
  if (!(s.radius > 0.0)) {
    throw domain_error("species '" + s.name + "': radius must be positive");
  }
}

}  // namespace

GasState derive_state(const GasSpecies& species, double temperature,
                      double pressure) {
  check_species(species);
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw domain_error("temperature must be positive and finite, got " +
                       std::to_string(temperature));
  }
  if (!(pressure > 0.0) || !std::isfinite(pressure)) {
    throw domain_error("pressure must be positive and finite, got " +
                       std::to_string(pressure));
  }

  const auto [hbar, k_B, c] = constants();
  (void)hbar;
  (void)c;
  constexpr double pi = std::numbers::pi;

  GasState st;
  st.species = species;
  st.temperature = temperature;
  st.pressure = pressure;
  st.number_density = pressure / (k_B * temperature);
  st.v_rms = std::sqrt(3.0 * k_B * temperature / species.mass);
  st.v_mean = std::sqrt(8.0 * k_B * temperature / (pi * species.mass));
  const double diameter = 2.0 * species.radius;
  st.mean_free_path =
      1.0 / (std::sqrt(2.0) * pi * diameter * diameter * st.number_density);
  st.collision_rate = st.v_mean / st.mean_free_path;
  return st;
}

double collision_acceleration(const GasState& state) {
  return 3.0 * constants().k_B * state.temperature /
         (state.species.mass * state.species.radius);
}

// Masses from standard atomic weights (N2 28.0134 u, He 4.0026 u,
// Ar 39.948 u) times the CODATA-2018 atomic mass unit. Radii are half the
// commonly tabulated kinetic diameters (N2 3.70 A, Ar 3.40 A, He 2.60 A).
std::vector<GasSpecies> builtin_catalogue() {
  return {
      {"N2", 28.0134 * kAtomicMassUnit, 1.85e-10},
      {"Ar", 39.948 * kAtomicMassUnit, 1.70e-10},
      {"He", 4.0026 * kAtomicMassUnit, 1.30e-10},
  };
}

GasSpecies builtin_species(const std::string& name) {
  return SpeciesCatalogue::builtins().find(name);
}

SpeciesCatalogue SpeciesCatalogue::builtins() {
  SpeciesCatalogue cat;
  cat.entries_ = builtin_catalogue();
  return cat;
}

void SpeciesCatalogue::add(const GasSpecies& species) {
  check_species(species);
  for (auto& e : entries_) {
    if (e.name == species.name) {
      e = species;
      return;
    }
  }
  entries_.push_back(species);
}

GasSpecies SpeciesCatalogue::find(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e;
  }
  std::ostringstream msg;
  msg << "unknown species '" << name << "'; available:";
  for (const auto& e : entries_) msg << " " << e.name;
  throw lookup_error(msg.str());
}

void SpeciesCatalogue::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw domain_error("cannot open species file: " + path.string());
  }

  GasSpecies current;
  bool have_name = false, have_mass = false, have_radius = false;
  int lineno = 0;

  auto flush = [&] {
    if (!have_name && !have_mass && !have_radius) return;
    if (!(have_name && have_mass && have_radius)) {
      throw domain_error("species file " + path.string() +
                         ": incomplete record for '" + current.name +
                         "' (need name, mass_kg, radius_m)");
    }
    add(current);
    current = GasSpecies{};
    have_name = have_mass = have_radius = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
      flush();
      continue;
    }
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw domain_error("species file " + path.string() + ":" +
                         std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);

    if (key == "name") {
      if (have_name) flush();  // new record starts
      current.name = value;
      have_name = true;
    } else if (key == "mass_kg" || key == "radius_m") {
      std::size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(value, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != value.size() || !std::isfinite(v)) {
        throw domain_error("species file " + path.string() + ":" +
                           std::to_string(lineno) + ": bad number '" + value +
                           "'");
      }
      (key == "mass_kg" ? current.mass : current.radius) = v;
      (key == "mass_kg" ? have_mass : have_radius) = true;
    } else {
      throw domain_error("species file " + path.string() + ":" +
                         std::to_string(lineno) + ": unknown key '" + key +
                         "'");
    }
  }
  flush();
}

}  // namespace vacrad
