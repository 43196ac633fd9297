#pragma once

// Scenario files: line-oriented `key = value unit` pairs grouped under
// [gas], [optics], [geometry] and [noise] headers. `#` starts a comment.
//
//   [gas]       N0, T, and either m or species; optional s (spin states)
//   [optics]    lambda; gamma or dipole; Omega; Delta or x
//   [geometry]  L, Y; optional V
//   [noise]     P, tau
//
// Every quantity carries a unit token; Omega and Delta may be given in units of
// the radiative decay rate with the token `gamma`, and x always uses `gamma`.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coldgrav/sensor.hpp"
#include "coldgrav/units.hpp"

namespace coldgrav {

// A rate given either in rad/s or as a multiple of gamma.
struct RateInput {
  double value = 0.0;
  bool in_gamma = false;
};

struct Scenario {
  // gas
  double number_density = 0.0;
  double temperature = 0.0;
  double mass = 0.0;
  std::optional<std::string> species;
  int spin_degeneracy = 1;
  // optics
  double wavelength = 0.0;
  std::optional<double> decay_rate;
  std::optional<double> dipole;
  RateInput rabi_frequency;
  std::optional<RateInput> detuning;
  std::optional<double> dimensionless_detuning;
  // geometry
  double length = 0.0;
  double separation = 0.0;
  std::optional<double> volume;
  // noise
  double probe_power = 0.0;
  double integration_time = 0.0;
};

/// Throws InputError with the offending line number on any syntax, unit or
/// completeness problem. Physical validity is checked by build_config.
Scenario parse_scenario(std::istream& in, std::string_view source_name = "<scenario>");
Scenario load_scenario(const std::filesystem::path& path);

EITParams build_optics(const Scenario& s);
/// Throws DomainError / CondensedError from the component constructors.
SensorConfig build_config(const Scenario& s);
NoiseModel build_noise(const Scenario& s);

// Sweeps --------------------------------------------------------------------

enum class SweepScale { linear, log };

struct SweepSpec {
  std::string parameter;  // e.g. "gas.T"
  double start = 0.0;     // SI
  double stop = 0.0;      // SI
  int count = 0;
  SweepScale scale = SweepScale::linear;
};

/// Dimension of a sweepable parameter path; InputError for unknown paths.
Dimension sweep_dimension(std::string_view parameter);
std::vector<std::string_view> sweep_parameters();

/// count >= 2, start != stop, positive endpoints for log scale.
void validate(const SweepSpec& spec);
std::vector<double> sweep_grid(const SweepSpec& spec);

/// Overwrites one parameter (SI value), switching its either/or partner off.
void apply_parameter(Scenario& s, std::string_view parameter, double value_si);

enum class FailureKind { input, condensed, numerical };

struct SweepPoint {
  double fugacity;
  double ratio_F;
  double responsivity;
  double shot_noise_phase;
  double delta_g_full;
  double delta_g_simplified;
};

struct SweepRow {
  double value;
  std::optional<SweepPoint> point;
  std::string error;
  FailureKind failure = FailureKind::input;
};

/// One row per grid value in grid order; failures are recorded per row.
std::vector<SweepRow> run_sweep(const Scenario& base, const SweepSpec& spec);

struct ProfilePoint {
  double fugacity;
  double density;
  double delta_exact;
  double delta_linear;
};

struct ProfileRow {
  double height;
  std::optional<ProfilePoint> point;
  std::string error;
  FailureKind failure = FailureKind::input;
};

/// Density along the field axis at the given heights relative to the reference
/// point. Throws if the reference state itself is invalid.
std::vector<ProfileRow> run_profile(const Scenario& s, double g,
                                    const std::vector<double>& heights);

/// Maps the exception currently being handled onto a failure kind and message.
FailureKind classify_current_exception(std::string& message);

}  // namespace coldgrav
