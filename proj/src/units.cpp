#include "coldgrav/units.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "coldgrav/constants.hpp"
#include "coldgrav/errors.hpp"

namespace coldgrav {

namespace {

using constants::pi;

// Sub-unit prefixes divide by an exact power of ten so that e.g. "500 nm"
// converts to the double nearest 5e-7.
constexpr std::array kTemperature = {UnitDef{"K", 1.0}, UnitDef{"mK", 1e3, true},
                                     UnitDef{"uK", 1e6, true}};
constexpr std::array kDensity = {UnitDef{"m^-3", 1.0}, UnitDef{"cm^-3", 1e6}};
constexpr std::array kLength = {UnitDef{"nm", 1e9, true}, UnitDef{"um", 1e6, true},
                                UnitDef{"mm", 1e3, true}, UnitDef{"cm", 1e2, true},
                                UnitDef{"m", 1.0}};
constexpr std::array kVolume = {UnitDef{"m^3", 1.0}, UnitDef{"cm^3", 1e6, true}};
constexpr std::array kMass = {UnitDef{"kg", 1.0}, UnitDef{"u", constants::atomic_mass_unit}};
constexpr std::array kPower = {UnitDef{"W", 1.0}, UnitDef{"mW", 1e3, true}};
constexpr std::array kTime = {UnitDef{"s", 1.0}, UnitDef{"ms", 1e3, true}};
constexpr std::array kAngular = {UnitDef{"rad/s", 1.0}, UnitDef{"Hz", 2.0 * pi},
                                 UnitDef{"kHz", 2.0 * pi * 1e3},
                                 UnitDef{"MHz", 2.0 * pi * 1e6}};
constexpr std::array kAcceleration = {UnitDef{"m/s^2", 1.0},
                                      UnitDef{"g0", constants::standard_gravity}};
constexpr std::array kDipole = {UnitDef{"C*m", 1.0}, UnitDef{"ea0", constants::bohr_dipole}};
constexpr std::array kRatio = {UnitDef{"gamma", 1.0}};

const UnitDef& lookup(std::string_view unit, Dimension d) {
  for (const auto& u : units_for(d)) {
    if (u.token == unit) return u;
  }
  std::string accepted;
  for (const auto& u : units_for(d)) {
    if (!accepted.empty()) accepted += ", ";
    accepted += u.token;
  }
  throw InputError("unknown " + std::string(dimension_name(d)) + " unit '" +
                   std::string(unit) + "' (accepted: " + accepted + ")");
}

}  // namespace

std::span<const UnitDef> units_for(Dimension d) {
  switch (d) {
    case Dimension::temperature: return kTemperature;
    case Dimension::number_density: return kDensity;
    case Dimension::length: return kLength;
    case Dimension::volume: return kVolume;
    case Dimension::mass: return kMass;
    case Dimension::power: return kPower;
    case Dimension::time: return kTime;
    case Dimension::angular_frequency: return kAngular;
    case Dimension::acceleration: return kAcceleration;
    case Dimension::dipole_moment: return kDipole;
    case Dimension::detuning_ratio: return kRatio;
  }
  return {};
}

std::string_view dimension_name(Dimension d) {
  switch (d) {
    case Dimension::temperature: return "temperature";
    case Dimension::number_density: return "number density";
    case Dimension::length: return "length";
    case Dimension::volume: return "volume";
    case Dimension::mass: return "mass";
    case Dimension::power: return "power";
    case Dimension::time: return "time";
    case Dimension::angular_frequency: return "angular frequency";
    case Dimension::acceleration: return "acceleration";
    case Dimension::dipole_moment: return "dipole moment";
    case Dimension::detuning_ratio: return "detuning ratio";
  }
  return "?";
}

double to_si(double value, std::string_view unit, Dimension d) {
  const auto& u = lookup(unit, d);
  return u.divide ? value / u.factor : value * u.factor;
}

double from_si(double value_si, std::string_view unit, Dimension d) {
  const auto& u = lookup(unit, d);
  return u.divide ? value_si * u.factor : value_si / u.factor;
}

Quantity split_quantity(std::string_view text) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);

  Quantity q;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, q.value);
  if (ec != std::errc() || !std::isfinite(q.value)) {
    throw InputError("cannot parse a number from '" + std::string(text) + "'");
  }
  std::string_view rest(ptr, static_cast<std::size_t>(end - ptr));
  while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
  if (rest.empty()) {
    throw InputError("quantity '" + std::string(text) + "' has no unit");
  }
  if (std::any_of(rest.begin(), rest.end(), is_space)) {
    throw InputError("malformed unit in '" + std::string(text) + "'");
  }
  q.unit = std::string(rest);
  return q;
}

double parse_quantity(std::string_view text, Dimension d) {
  const auto q = split_quantity(text);
  return to_si(q.value, q.unit, d);
}

}  // namespace coldgrav
