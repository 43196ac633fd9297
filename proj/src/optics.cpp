#include "coldgrav/optics.hpp"

#include <cmath>
#include <cstdio>

#include "coldgrav/constants.hpp"
#include "coldgrav/errors.hpp"

namespace coldgrav {

namespace {

using constants::pi;

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

// 6 pi hbar eps0 c^3
double decay_denominator() {
  const double c = constants::speed_of_light;
  return 6.0 * pi * constants::hbar * constants::epsilon_0 * c * c * c;
}

}  // namespace

double radiative_decay_from_dipole(double dipole_moment, double angular_frequency) {
  require_positive(dipole_moment, "dipole matrix element");
  require_positive(angular_frequency, "probe angular frequency");
  const double w = angular_frequency;
  return dipole_moment * dipole_moment * w * w * w / decay_denominator();
}

double dipole_from_radiative_decay(double decay_rate, double angular_frequency) {
  require_positive(decay_rate, "radiative decay rate");
  require_positive(angular_frequency, "probe angular frequency");
  const double w = angular_frequency;
  return std::sqrt(decay_rate * decay_denominator() / (w * w * w));
}

EITParams::EITParams(const EITInputs& in) {
  require_positive(in.wavelength, "probe wavelength");
  require_positive(in.rabi_frequency, "Rabi frequency");
  if (in.decay_rate.has_value() == in.dipole.has_value()) {
    throw DomainError("exactly one of radiative decay rate and dipole matrix element "
                      "must be given");
  }
  if (in.detuning.has_value() == in.dimensionless_detuning.has_value()) {
    throw DomainError("exactly one of detuning and dimensionless detuning must be given");
  }

  wavelength_ = in.wavelength;
  angular_frequency_ = 2.0 * pi * constants::speed_of_light / wavelength_;
  rabi_frequency_ = in.rabi_frequency;
  if (in.dipole) {
    dipole_ = *in.dipole;
    decay_rate_ = radiative_decay_from_dipole(dipole_, angular_frequency_);
  } else {
    decay_rate_ = *in.decay_rate;
    dipole_ = dipole_from_radiative_decay(decay_rate_, angular_frequency_);
  }
  if (in.detuning) {
    if (!std::isfinite(*in.detuning)) throw DomainError("detuning must be finite");
    detuning_ = *in.detuning;
    dimensionless_detuning_ = detuning_ / decay_rate_;
  } else {
    if (!std::isfinite(*in.dimensionless_detuning)) {
      throw DomainError("dimensionless detuning must be finite");
    }
    dimensionless_detuning_ = *in.dimensionless_detuning;
    detuning_ = dimensionless_detuning_ * decay_rate_;
  }
}

EITParams EITParams::from_decay_rate(double wavelength, double decay_rate,
                                     double rabi_frequency, double detuning) {
  EITInputs in;
  in.wavelength = wavelength;
  in.decay_rate = decay_rate;
  in.rabi_frequency = rabi_frequency;
  in.detuning = detuning;
  return EITParams(in);
}

EITParams EITParams::from_dipole(double wavelength, double dipole, double rabi_frequency,
                                 double detuning) {
  EITInputs in;
  in.wavelength = wavelength;
  in.dipole = dipole;
  in.rabi_frequency = rabi_frequency;
  in.detuning = detuning;
  return EITParams(in);
}

SensorGeometry::SensorGeometry(double length, double separation,
                               std::optional<double> volume)
    : length_(length), separation_(separation), volume_(volume) {
  require_positive(length, "cell length L");
  require_positive(separation, "beam separation Y");
  if (volume) require_positive(*volume, "cell volume V");
}

double susceptibility_real(const EITParams& p, double number_density) {
  if (!(number_density >= 0.0)) {
    throw DomainError("number density must be non-negative, got " + fmt(number_density));
  }
  const double omega = p.rabi_frequency();
  return -(p.dipole() * p.dipole() / (constants::hbar * constants::epsilon_0)) *
         (p.detuning() / (omega * omega)) * number_density;
}

RefractiveIndex refractive_index(const EITParams& p, double number_density) {
  const double chi = susceptibility_real(p, number_density);
  RefractiveIndex n{1.0 + 0.5 * chi, std::nullopt};
  if (std::abs(n.value - 1.0) > kLinearDispersionLimit) {
    n.warning = "|n - 1| = " + fmt(std::abs(n.value - 1.0)) +
                " exceeds the linear dispersion regime (" + fmt(kLinearDispersionLimit) + ")";
  }
  return n;
}

double delta_n_from_delta_N(const EITParams& p, double delta_density) {
  const double lambda = p.wavelength();
  const double omega = p.rabi_frequency();
  return -(3.0 / (8.0 * pi * pi)) *
         (lambda * lambda * lambda * p.decay_rate() * p.detuning() / (omega * omega)) *
         delta_density;
}

double phase_shift(const SensorGeometry& geometry, double wavelength, double delta_n) {
  require_positive(wavelength, "probe wavelength");
  return 2.0 * pi * geometry.length() * delta_n / wavelength;
}

double phase_shift_from_delta_N(const SensorGeometry& geometry, const EITParams& p,
                                double delta_density) {
  const double lambda = p.wavelength();
  const double omega = p.rabi_frequency();
  return -(3.0 / (4.0 * pi)) *
         (geometry.length() * lambda * lambda * p.decay_rate() * p.detuning() /
          (omega * omega)) *
         delta_density;
}

}  // namespace coldgrav
