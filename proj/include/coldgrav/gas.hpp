#pragma once

// Ideal Bose gas in a uniform gravitational field: state equation
// N lambda_dB^3 / s = g_{3/2}(z), local fugacity under a potential offset, and
// the resulting density variation (linear response and exact).

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace coldgrav {

/// Fugacities within this distance of 1 are treated as condensed.
inline constexpr double kCondensationGuard = 1e-9;

/// sqrt(2 pi hbar^2 / (m k_B T)), meters.
double thermal_de_broglie(double mass, double temperature);

/// Unique z in (0, 1) with g_{3/2}(z) = N lambda_dB^3 / s.
/// Throws CondensedError once the phase-space density reaches the guard band
/// below zeta(3/2), DomainError on non-positive inputs.
double solve_fugacity(double number_density, double temperature, double mass,
                      int spin_degeneracy = 1);

/// s g_{3/2}(z) / lambda_dB^3, atoms per m^3.
double density_from_fugacity(double fugacity, double temperature, double mass,
                             int spin_degeneracy = 1);

/// z0 exp(-m dPhi / (k_B T)): fugacity at a point whose gravitational potential
/// exceeds the reference point's by potential_difference (m^2/s^2).
double local_fugacity(double reference_fugacity, double potential_difference,
                      double temperature, double mass);

// Immutable thermodynamic state of the ensemble at the reference point.
class GasState {
 public:
  /// Throws DomainError for invalid inputs and CondensedError when the
  /// ensemble would be Bose-condensed.
  GasState(double number_density, double temperature, double mass,
           int spin_degeneracy = 1);

  double number_density() const noexcept { return number_density_; }
  double temperature() const noexcept { return temperature_; }
  double mass() const noexcept { return mass_; }
  int spin_degeneracy() const noexcept { return spin_degeneracy_; }
  double fugacity() const noexcept { return fugacity_; }
  double de_broglie_wavelength() const noexcept { return de_broglie_; }
  /// N0 lambda_dB^3.
  double phase_space_density() const noexcept { return phase_space_density_; }
  /// 1 / (k_B T).
  double beta() const noexcept;
  /// mu = k_B T ln z0 + m Phi(x0); mu is derived, never stored.
  double chemical_potential(double reference_potential = 0.0) const;

 private:
  double number_density_;
  double temperature_;
  double mass_;
  int spin_degeneracy_;
  double de_broglie_;
  double phase_space_density_;
  double fugacity_;
};

// Field strength g (m/s^2) and the signed displacement Y (m) between the probed
// point and the reference point along the field axis.
struct GravityContext {
  double g = 0.0;
  double separation = 0.0;

  double potential_difference() const noexcept { return g * separation; }
};

/// Linearized response: -N0 (m / k_B T) Y F(z0) g.
double density_variation_linear(const GasState& state, const GravityContext& ctx);

/// N(Y) - N0 from the local fugacity, without linearization.
double density_variation_exact(const GasState& state, const GravityContext& ctx);

/// Density at each height (relative to the reference point) for field g.
/// Non-increasing in height for g > 0. A CondensedError carries the index of
/// the first offending height.
std::vector<double> density_profile(const GasState& state, double g,
                                    std::span<const double> heights);

struct Species {
  std::string_view name;
  double mass;  // kg
};

/// Presets: Li7, Na23, Rb87, Cs133.
std::span<const Species> species_presets();
std::optional<Species> find_species(std::string_view name);

}  // namespace coldgrav
