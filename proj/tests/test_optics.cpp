#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "coldgrav/constants.hpp"
#include "coldgrav/errors.hpp"
#include "coldgrav/optics.hpp"
#include "oracles.hpp"

using namespace coldgrav;
using coldgrav::test::rel_err;

namespace {

constexpr double pi = constants::pi;

// Dipole-form index difference: n(N + dN) - n(N) with n = 1 + chi'/2 and
// chi' = -(p^2 / (hbar eps0)) (Delta / Omega^2) N, taken analytically.
double delta_n_dipole_form(const EITParams& p, double dN) {
  return -p.dipole() * p.dipole() * p.detuning() * dN /
         (2.0 * constants::hbar * constants::epsilon_0 * p.rabi_frequency() *
          p.rabi_frequency());
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

struct Draw {
  EITParams params;
  SensorGeometry geometry;
  double dN;
};

Draw random_draw(std::mt19937_64& rng) {
  const double lambda = log_uniform(rng, 300e-9, 1500e-9);
  const double dipole = log_uniform(rng, 1e-30, 1e-28);
  const double omega_rabi = log_uniform(rng, 1e5, 1e10);
  std::uniform_real_distribution<double> x(-5.0, 5.0);
  EITInputs in;
  in.wavelength = lambda;
  in.dipole = dipole;
  in.rabi_frequency = omega_rabi;
  in.dimensionless_detuning = x(rng);
  std::uniform_real_distribution<double> sign(-1.0, 1.0);
  const double dN = (sign(rng) < 0 ? -1.0 : 1.0) * log_uniform(rng, 1e8, 1e18);
  return {EITParams(in), SensorGeometry(log_uniform(rng, 1e-4, 1e-1), 1e-2), dN};
}

EITParams reference_params() {
  return EITParams::from_dipole(500e-9, 2.5e-29, 7.0e7, 7.0e7);
}

}  // namespace

TEST_CASE("radiative decay from the dipole element") {
  const double omega = 2.0 * pi * constants::speed_of_light / 500e-9;
  CHECK(rel_err(omega, 3.7673031346177065e15) < 1e-15);
  // p^2 w^3 / (6 pi hbar eps0 c^3) for p = 2.5e-29 C m at 500 nm.
  CHECK(rel_err(radiative_decay_from_dipole(2.5e-29, omega), 7.046664514946592e7) < 1e-13);
  CHECK(rel_err(radiative_decay_from_dipole(5e-29, omega),
                4.0 * radiative_decay_from_dipole(2.5e-29, omega)) < 1e-15);
  CHECK_THROWS_AS(radiative_decay_from_dipole(0.0, omega), DomainError);
  CHECK_THROWS_AS(dipole_from_radiative_decay(-1.0, omega), DomainError);
}

TEST_CASE("EIT parameter validation") {
  EITInputs in;
  in.wavelength = 500e-9;
  in.rabi_frequency = 1e7;
  in.detuning = 1e6;
  CHECK_THROWS_AS(EITParams{in}, DomainError);  // neither gamma nor p
  in.decay_rate = 1e7;
  in.dipole = 1e-29;
  CHECK_THROWS_AS(EITParams{in}, DomainError);  // both
  in.dipole.reset();
  CHECK_NOTHROW(EITParams{in});
  in.dimensionless_detuning = 0.1;
  CHECK_THROWS_AS(EITParams{in}, DomainError);  // both Delta and x
  in.detuning.reset();
  const EITParams p(in);
  CHECK(rel_err(p.detuning(), 1e6) < 1e-15);
  in.rabi_frequency = 0.0;
  CHECK_THROWS_AS(EITParams{in}, DomainError);
  in.rabi_frequency = 1e7;
  in.wavelength = -1.0;
  CHECK_THROWS_AS(EITParams{in}, DomainError);

  CHECK_THROWS_AS(SensorGeometry(0.0, 1e-2), DomainError);
  CHECK_THROWS_AS(SensorGeometry(1e-2, 1e-2, -1.0), DomainError);
  CHECK(rel_err(SensorGeometry(2e-2, 3e-2).area(), 6e-4) < 1e-15);
}

TEST_CASE("susceptibility and refractive index") {
  const auto p = reference_params();
  CHECK(susceptibility_real(p, 0.0) == 0.0);
  CHECK(susceptibility_real(p, 1e18) < 0.0);  // Delta > 0
  const auto neg = EITParams::from_dipole(500e-9, 2.5e-29, 7.0e7, -7.0e7);
  CHECK(susceptibility_real(neg, 1e18) == -susceptibility_real(p, 1e18));
  CHECK(susceptibility_real(p, 2e18) == doctest::Approx(2.0 * susceptibility_real(p, 1e18)));

  const auto n = refractive_index(p, 1e12);
  CHECK(n.value < 1.0);
  CHECK_FALSE(n.warning.has_value());
  // Dense enough to leave the linear regime.
  const auto big = refractive_index(p, 1e24);
  CHECK(big.warning.has_value());
  CHECK_THROWS_AS(susceptibility_real(p, -1.0), DomainError);
}

TEST_CASE("index difference and phase") {
  const auto p = reference_params();
  CHECK(delta_n_from_delta_N(p, 0.0) == 0.0);
  CHECK(rel_err(delta_n_from_delta_N(p, 1e10), delta_n_dipole_form(p, 1e10)) < 1e-12);
  CHECK(delta_n_from_delta_N(p, -1e10) > 0.0);  // fewer atoms, higher index for Delta > 0
  const SensorGeometry geom(1e-2, 1e-2);
  CHECK(phase_shift(geom, 500e-9, 0.0) == 0.0);
  CHECK(rel_err(phase_shift(geom, 500e-9, 1e-9), 2.0 * pi * 1e-2 * 1e-9 / 500e-9) < 1e-15);
  CHECK_THROWS_AS(phase_shift(geom, 0.0, 1e-9), DomainError);

  const auto resonant = EITParams::from_dipole(500e-9, 2.5e-29, 7.0e7, 0.0);
  CHECK(phase_shift_from_delta_N(geom, resonant, 1e10) == 0.0);
}

TEST_CASE("property: gamma form equals the differenced dipole form") {
  std::mt19937_64 rng(20260915);
  int worst_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto d = random_draw(rng);
    const double a = delta_n_from_delta_N(d.params, d.dN);
    const double b = delta_n_dipole_form(d.params, d.dN);
    if (rel_err(a, b) < 1e-10) ++worst_ok;
  }
  CHECK(worst_ok == 1000);
}

TEST_CASE("property: phase of the index difference equals the closed form") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto d = random_draw(rng);
    const double composed =
        phase_shift(d.geometry, d.params.wavelength(), delta_n_from_delta_N(d.params, d.dN));
    const double closed = phase_shift_from_delta_N(d.geometry, d.params, d.dN);
    CHECK(rel_err(composed, closed) < 8 * std::numeric_limits<double>::epsilon());
  }
}

TEST_CASE("property: linear in dN and odd in detuning") {
  std::mt19937_64 rng(11);
  const SensorGeometry geom(1e-2, 1e-2);
  for (int i = 0; i < 100; ++i) {
    const auto d = random_draw(rng);
    const double phi = phase_shift_from_delta_N(geom, d.params, d.dN);
    CHECK(rel_err(phase_shift_from_delta_N(geom, d.params, 2.0 * d.dN), 2.0 * phi) < 1e-15);
    const auto flipped =
        EITParams::from_decay_rate(d.params.wavelength(), d.params.decay_rate(),
                                   d.params.rabi_frequency(), -d.params.detuning());
    CHECK(phase_shift_from_delta_N(geom, flipped, d.dN) == -phi);
  }
}

TEST_CASE("property: gamma and dipole round trip") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const double omega = 2.0 * pi * constants::speed_of_light / log_uniform(rng, 300e-9, 1500e-9);
    const double p = log_uniform(rng, 1e-31, 1e-27);
    CHECK(rel_err(dipole_from_radiative_decay(radiative_decay_from_dipole(p, omega), omega), p) <
          1e-14);
  }
}
