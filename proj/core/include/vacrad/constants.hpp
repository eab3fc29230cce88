#pragma once

namespace vacrad {

/// Fixed physical constants, SI units throughout (CODATA 2018).
struct PhysicalConstants {
  double hbar;  // reduced Planck constant, J s
  double k_B;   // Boltzmann constant, J/K
  double c;     // speed of light in vacuum, m/s
};

constexpr PhysicalConstants constants() noexcept {
  return PhysicalConstants{
      1.054571817e-34,
      1.380649e-23,
      2.99792458e8,
  };
}

/// Atomic mass unit, kg (CODATA 2018). Used by the built-in species catalogue.
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;

}  // namespace vacrad
