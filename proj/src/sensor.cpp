#include "coldgrav/sensor.hpp"

#include <cmath>
#include <cstdio>

#include "coldgrav/constants.hpp"
#include "coldgrav/errors.hpp"
#include "coldgrav/polylog.hpp"

namespace coldgrav {

namespace {

using constants::pi;

std::string fmt(const char* spec, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be positive and finite, got " +
                      fmt("%.6g", v));
  }
}

double signed_bracket(const SensorConfig& config) {
  const auto& gas = config.gas;
  const auto& optics = config.optics;
  const double xF = optics.dimensionless_detuning() * polylog_ratio_F(gas.fugacity());
  return responsivity_bracket(config.geometry.area(), optics.wavelength(),
                              optics.decay_rate(), optics.rabi_frequency(), xF,
                              gas.number_density(), gas.mass(), gas.temperature());
}

}  // namespace

NoiseModel::NoiseModel(double probe_power, double integration_time, double photon_energy)
    : probe_power_(probe_power),
      integration_time_(integration_time),
      photon_energy_(photon_energy) {
  require_positive(probe_power, "probe power");
  require_positive(integration_time, "integration time");
  require_positive(photon_energy, "photon energy");
}

NoiseModel NoiseModel::for_wavelength(double probe_power, double integration_time,
                                      double wavelength) {
  require_positive(wavelength, "probe wavelength");
  const double omega = 2.0 * pi * constants::speed_of_light / wavelength;
  return NoiseModel(probe_power, integration_time, constants::hbar * omega);
}

double responsivity_bracket(double area, double wavelength, double decay_rate,
                            double rabi_frequency, double x_times_F,
                            double number_density, double mass, double temperature) {
  return (3.0 / (4.0 * pi)) * area * wavelength * wavelength * decay_rate * decay_rate *
         x_times_F * number_density * mass /
         (constants::boltzmann * temperature * rabi_frequency * rabi_frequency);
}

double phase_from_g(const SensorConfig& config, double g) {
  return signed_bracket(config) * g;
}

double responsivity(const SensorConfig& config) {
  return std::abs(signed_bracket(config));
}

double shot_noise_phase(const NoiseModel& noise) {
  return std::sqrt(noise.photon_energy() /
                   (noise.probe_power() * noise.integration_time()));
}

double limiting_sensitivity(const SensorConfig& config, double phase) {
  const double r = responsivity(config);
  if (!(r > 0.0)) {
    throw DomainError("responsivity is zero (zero detuning); sensitivity undefined");
  }
  return std::abs(phase) / r;
}

double simplified_coefficient(double area, double wavelength, double number_density,
                              double mass) {
  require_positive(area, "side area");
  require_positive(wavelength, "probe wavelength");
  require_positive(number_density, "number density");
  require_positive(mass, "mass");
  return (4.0 * pi / 3.0) * constants::boltzmann /
         (area * wavelength * wavelength * number_density * mass);
}

double simplified_sensitivity(const GasState& gas, const SensorGeometry& geometry,
                              double wavelength, double temperature, double phase) {
  require_positive(temperature, "temperature");
  return simplified_coefficient(geometry.area(), wavelength, gas.number_density(),
                                gas.mass()) *
         temperature * std::abs(phase);
}

SensitivityReport evaluate_sensitivity(const SensorConfig& config, const NoiseModel& noise) {
  SensitivityReport r;
  const auto& optics = config.optics;
  r.fugacity = config.gas.fugacity();
  r.ratio_F = polylog_ratio_F(r.fugacity);
  r.x_times_F = optics.dimensionless_detuning() * r.ratio_F;
  const double bracket = signed_bracket(config);
  r.responsivity = std::abs(bracket);
  r.phase_sign = bracket > 0.0 ? 1 : (bracket < 0.0 ? -1 : 0);
  r.shot_noise_phase = shot_noise_phase(noise);
  r.delta_g_full = limiting_sensitivity(config, r.shot_noise_phase);
  r.simplified_coefficient = simplified_coefficient(
      config.geometry.area(), optics.wavelength(), config.gas.number_density(),
      config.gas.mass());
  r.delta_g_simplified =
      simplified_sensitivity(config.gas, config.geometry, optics.wavelength(),
                             config.gas.temperature(), r.shot_noise_phase);
  r.coefficient_ratio = r.simplified_coefficient / kCoefficientClaim;
  r.headline_ratio =
      r.delta_g_simplified / (kHeadlineSensitivityG0 * constants::standard_gravity);

  r.notes.push_back(
      "coefficient audit: computed (4 pi/3) k_B / (A lambda^2 N0 m) = " +
      fmt("%.6g", r.simplified_coefficient) +
      " (m/s^2)/(K rad) vs claimed order of ten; computed/claimed = " +
      fmt("%.4g", r.coefficient_ratio) +
      (std::abs(std::log10(r.coefficient_ratio)) <= 0.5 ? " (consistent)"
                                                        : " (disagrees)"));
  const bool within_two_orders = std::abs(std::log10(r.headline_ratio)) <= 2.0;
  r.notes.push_back("headline audit: simplified delta g = " +
                    fmt("%.4g", r.delta_g_simplified / constants::standard_gravity) +
                    " g0 vs claimed 1e-11 g0; computed/claimed = " +
                    fmt("%.4g", r.headline_ratio) +
                    (within_two_orders ? " (within two orders of magnitude)"
                                       : " (outside two orders of magnitude)"));
  r.notes.push_back("full route uses x F(z0) = " + fmt("%.10g", r.x_times_F) +
                    " and Omega/gamma = " +
                    fmt("%.6g", optics.rabi_frequency() / optics.decay_rate()) +
                    "; simplified route assumes both equal 1");
  r.notes.push_back(
      std::string("phase sign for g > 0: ") +
      (r.phase_sign > 0 ? "positive" : (r.phase_sign < 0 ? "negative" : "zero")) +
      " (density falls with height; responsivity and delta g are magnitudes)");
  const auto n = refractive_index(optics, config.gas.number_density());
  if (n.warning) r.notes.push_back("warning: " + *n.warning);
  return r;
}

SensorConfig demo_config() {
  GasState gas(1e18, 1e-3, 1e-26);
  EITInputs in;
  in.wavelength = 500e-9;
  in.dipole = 2.5e-29;
  in.dimensionless_detuning = 1.0;
  // Omega = gamma needs gamma first.
  in.rabi_frequency = 1.0;
  const double gamma = EITParams(in).decay_rate();
  in.rabi_frequency = gamma;
  return {gas, EITParams(in), SensorGeometry(1e-2, 1e-2, 1e-6)};
}

NoiseModel demo_noise() { return NoiseModel::for_wavelength(1e-3, 1.0, 500e-9); }

SensitivityReport demo_report() { return evaluate_sensitivity(demo_config(), demo_noise()); }

}  // namespace coldgrav
