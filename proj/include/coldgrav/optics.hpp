#pragma once

// Dispersive response of an ideal EIT medium (no probe absorption) and the
// interferometric phase it imprints on the probe.
//
// Sign convention: detuning Delta = omega_ab - omega. The refractive index is
// n = 1 - p^2 Delta N / (2 hbar eps0 Omega^2), so every downstream quantity
// (delta n, phase) carries the same minus sign with respect to delta N.

#include <optional>
#include <string>

namespace coldgrav {

/// gamma = p^2 omega^3 / (6 pi hbar eps0 c^3), rad/s.
double radiative_decay_from_dipole(double dipole_moment, double angular_frequency);

/// Inverse of radiative_decay_from_dipole, C m.
double dipole_from_radiative_decay(double decay_rate, double angular_frequency);

// Raw inputs before cross-validation. Exactly one of {decay_rate, dipole} and
// one of {detuning, dimensionless_detuning} must be present.
struct EITInputs {
  double wavelength = 0.0;                        // m
  std::optional<double> decay_rate;               // rad/s
  std::optional<double> dipole;                   // C m
  double rabi_frequency = 0.0;                    // rad/s
  std::optional<double> detuning;                 // rad/s
  std::optional<double> dimensionless_detuning;   // Delta / gamma
};

class EITParams {
 public:
  /// Validates the inputs and derives the redundant members
  /// (omega = 2 pi c / lambda, the missing one of gamma/p, the missing one of Delta/x).
  explicit EITParams(const EITInputs& in);

  static EITParams from_decay_rate(double wavelength, double decay_rate,
                                   double rabi_frequency, double detuning);
  static EITParams from_dipole(double wavelength, double dipole, double rabi_frequency,
                               double detuning);

  double wavelength() const noexcept { return wavelength_; }
  double angular_frequency() const noexcept { return angular_frequency_; }
  double dipole() const noexcept { return dipole_; }
  double decay_rate() const noexcept { return decay_rate_; }
  double rabi_frequency() const noexcept { return rabi_frequency_; }
  double detuning() const noexcept { return detuning_; }
  double dimensionless_detuning() const noexcept { return dimensionless_detuning_; }

 private:
  double wavelength_;
  double angular_frequency_;
  double dipole_;
  double decay_rate_;
  double rabi_frequency_;
  double detuning_;
  double dimensionless_detuning_;
};

// Probe-beam geometry: cell length L along the probe and separation Y of the
// two interferometer arms along the field axis. A = L Y.
class SensorGeometry {
 public:
  SensorGeometry(double length, double separation,
                 std::optional<double> volume = std::nullopt);

  double length() const noexcept { return length_; }
  double separation() const noexcept { return separation_; }
  double area() const noexcept { return length_ * separation_; }
  std::optional<double> volume() const noexcept { return volume_; }

 private:
  double length_;
  double separation_;
  std::optional<double> volume_;
};

/// chi' = -(p^2 / (hbar eps0)) (Delta / Omega^2) N.
double susceptibility_real(const EITParams& p, double number_density);

struct RefractiveIndex {
  double value;
  /// Set when |n - 1| > kLinearDispersionLimit.
  std::optional<std::string> warning;
};

inline constexpr double kLinearDispersionLimit = 0.05;

/// n = 1 + chi'/2.
RefractiveIndex refractive_index(const EITParams& p, double number_density);

/// delta n = -(3 / (8 pi^2)) (lambda^3 gamma Delta / Omega^2) delta N, the
/// gamma-form of the index difference n(N + dN) - n(N).
double delta_n_from_delta_N(const EITParams& p, double delta_density);

/// phi = 2 pi L delta n / lambda.
double phase_shift(const SensorGeometry& geometry, double wavelength, double delta_n);

/// Closed form of phase_shift after delta_n_from_delta_N:
/// -(3 / (4 pi)) (L lambda^2 gamma Delta / Omega^2) delta N.
double phase_shift_from_delta_N(const SensorGeometry& geometry, const EITParams& p,
                                double delta_density);

}  // namespace coldgrav
