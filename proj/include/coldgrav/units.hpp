#pragma once

// Unit tokens accepted at the input boundary. Everything past this header is SI;
// frequencies are angular (rad/s), so Hz-type tokens carry a factor 2 pi.

#include <span>
#include <string>
#include <string_view>

namespace coldgrav {

enum class Dimension {
  temperature,
  number_density,
  length,
  volume,
  mass,
  power,
  time,
  angular_frequency,
  acceleration,
  dipole_moment,
  detuning_ratio,  // Delta / gamma, token "gamma"
};

// value_si = value * factor, or value / factor when divide is set.
struct UnitDef {
  std::string_view token;
  double factor;
  bool divide = false;
};

std::span<const UnitDef> units_for(Dimension d);
std::string_view dimension_name(Dimension d);

double to_si(double value, std::string_view unit, Dimension d);
double from_si(double value_si, std::string_view unit, Dimension d);

struct Quantity {
  double value = 0.0;
  std::string unit;
};

/// Splits "1.5 mK" into {1.5, "mK"}. Throws InputError when the number does not
/// parse or the unit token is missing.
Quantity split_quantity(std::string_view text);

/// split_quantity followed by to_si.
double parse_quantity(std::string_view text, Dimension d);

}  // namespace coldgrav
