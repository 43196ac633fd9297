#pragma once

#include <numbers>

// CODATA 2018 values, SI units. Every module reads constants from here.
namespace coldgrav::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double boltzmann = 1.380649e-23;          // J / K
inline constexpr double epsilon_0 = 8.8541878128e-12;      // F / m
inline constexpr double speed_of_light = 299792458.0;      // m / s
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double bohr_dipole = 8.4783536255e-30;    // e a0, C m
inline constexpr double standard_gravity = 9.80665;        // m / s^2

}  // namespace coldgrav::constants
