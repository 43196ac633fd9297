#include "coldgrav/gas.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "coldgrav/constants.hpp"
#include "coldgrav/errors.hpp"
#include "coldgrav/numerics.hpp"
#include "coldgrav/polylog.hpp"

namespace coldgrav {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be positive and finite, got " + fmt(v));
  }
}

// g_{3/2} at the edge of the guard band; phase-space densities at or above
// this (per spin state) have no admissible fugacity.
double max_phase_space_density() {
  static const double value =
      polylog(PolylogOrders::three_halves, 1.0 - kCondensationGuard);
  return value;
}

constexpr double kStateEquationTol = 1e-12;

constexpr std::array<Species, 4> kSpecies = {{
    {"Li7", 7.0160034366 * constants::atomic_mass_unit},
    {"Na23", 22.9897692820 * constants::atomic_mass_unit},
    {"Rb87", 86.909180527 * constants::atomic_mass_unit},
    {"Cs133", 132.905451961 * constants::atomic_mass_unit},
}};

}  // namespace

double thermal_de_broglie(double mass, double temperature) {
  require_positive(mass, "mass");
  require_positive(temperature, "temperature");
  const double hbar = constants::hbar;
  return std::sqrt(2.0 * constants::pi * hbar * hbar /
                   (mass * constants::boltzmann * temperature));
}

double solve_fugacity(double number_density, double temperature, double mass,
                      int spin_degeneracy) {
  require_positive(number_density, "number density");
  if (spin_degeneracy < 1) {
    throw DomainError("spin degeneracy must be >= 1, got " + std::to_string(spin_degeneracy));
  }
  const double lambda = thermal_de_broglie(mass, temperature);
  const double psd = number_density * lambda * lambda * lambda;
  const double target = psd / spin_degeneracy;
  if (target >= max_phase_space_density()) {
    throw CondensedError("phase-space density N lambda^3 = " + fmt(psd) +
                             " reaches the condensation threshold (s zeta(3/2) = " +
                             fmt(spin_degeneracy * zeta_3_2()) + ")",
                         psd);
  }
  const auto residual = [target](double z) {
    return polylog(PolylogOrders::three_halves, z) - target;
  };
  const double z = find_root_bracketed(residual, 0.0, 1.0 - kCondensationGuard,
                                       1e-14 * target);
  if (std::abs(residual(z)) > kStateEquationTol * target) {
    throw RootFindError("fugacity solve missed the state equation tolerance at D = " +
                        fmt(psd));
  }
  return z;
}

double density_from_fugacity(double fugacity, double temperature, double mass,
                             int spin_degeneracy) {
  if (!(fugacity >= 0.0 && fugacity < 1.0)) {
    throw DomainError("fugacity must satisfy 0 <= z < 1, got " + fmt(fugacity));
  }
  if (spin_degeneracy < 1) {
    throw DomainError("spin degeneracy must be >= 1, got " + std::to_string(spin_degeneracy));
  }
  const double lambda = thermal_de_broglie(mass, temperature);
  return spin_degeneracy * polylog(PolylogOrders::three_halves, fugacity) /
         (lambda * lambda * lambda);
}

double local_fugacity(double reference_fugacity, double potential_difference,
                      double temperature, double mass) {
  if (!(reference_fugacity > 0.0 && reference_fugacity < 1.0)) {
    throw DomainError("reference fugacity must satisfy 0 < z0 < 1, got " +
                      fmt(reference_fugacity));
  }
  require_positive(temperature, "temperature");
  require_positive(mass, "mass");
  if (!std::isfinite(potential_difference)) {
    throw DomainError("potential difference must be finite");
  }
  const double z = reference_fugacity *
                   std::exp(-mass * potential_difference /
                            (constants::boltzmann * temperature));
  if (z >= 1.0) {
    throw CondensedError("local fugacity " + fmt(z) +
                             " >= 1: the potential well condenses the gas locally",
                         std::numeric_limits<double>::quiet_NaN());
  }
  return z;
}

GasState::GasState(double number_density, double temperature, double mass,
                   int spin_degeneracy)
    : number_density_(number_density),
      temperature_(temperature),
      mass_(mass),
      spin_degeneracy_(spin_degeneracy),
      de_broglie_(thermal_de_broglie(mass, temperature)),
      phase_space_density_(number_density * de_broglie_ * de_broglie_ * de_broglie_),
      fugacity_(solve_fugacity(number_density, temperature, mass, spin_degeneracy)) {}

double GasState::beta() const noexcept {
  return 1.0 / (constants::boltzmann * temperature_);
}

double GasState::chemical_potential(double reference_potential) const {
  return constants::boltzmann * temperature_ * std::log(fugacity_) +
         mass_ * reference_potential;
}

double density_variation_linear(const GasState& state, const GravityContext& ctx) {
  const double dn = -state.number_density() * state.beta() * state.mass() *
                    ctx.separation * polylog_ratio_F(state.fugacity()) * ctx.g;
  return dn + 0.0;  // no negative zero
}

double density_variation_exact(const GasState& state, const GravityContext& ctx) {
  const double z0 = state.fugacity();
  const double z = local_fugacity(z0, ctx.potential_difference(), state.temperature(),
                                  state.mass());
  if (z == z0) return 0.0;
  // N(z) = N0 g(z) / g(z0) under the state equation at fixed T.
  const double g0 = polylog(PolylogOrders::three_halves, z0);
  const double gz = polylog(PolylogOrders::three_halves, z);
  return state.number_density() * ((gz - g0) / g0);
}

std::vector<double> density_profile(const GasState& state, double g,
                                    std::span<const double> heights) {
  std::vector<double> out;
  out.reserve(heights.size());
  for (std::size_t i = 0; i < heights.size(); ++i) {
    try {
      out.push_back(state.number_density() +
                    density_variation_exact(state, {g, heights[i]}));
    } catch (const CondensedError& e) {
      throw CondensedError(std::string(e.what()) + " at height index " + std::to_string(i),
                           e.phase_space_density(), i);
    }
  }
  return out;
}

std::span<const Species> species_presets() { return kSpecies; }

std::optional<Species> find_species(std::string_view name) {
  for (const auto& s : kSpecies) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

}  // namespace coldgrav
