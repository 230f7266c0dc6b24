#pragma once

namespace qnd::constants {

inline constexpr double speed_of_light = 299792458.0;        // m/s
inline constexpr double hbar = 1.054571817e-34;              // J*s
inline constexpr double k_boltzmann = 1.380649e-23;          // J/K
inline constexpr double atomic_mass_unit = 1.66053906660e-27; // kg
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Rb-87 values used by the default configuration.
inline constexpr double rb87_mass = 86.909180527 * atomic_mass_unit;     // kg
inline constexpr double rb87_d2_wavelength = 780.241e-9;                 // m
inline constexpr double rb87_d2_linewidth_hz = 6.0666e6;                 // natural linewidth, Hz
inline constexpr double rb87_hyperfine_splitting_hz = 6.834682610904e9;  // clock splitting, Hz

} // namespace qnd::constants
