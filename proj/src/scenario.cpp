#include "coldgrav/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>

#include "coldgrav/errors.hpp"

namespace coldgrav {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

enum class Field {
  number_density, temperature, mass, species, spin,
  wavelength, decay_rate, dipole, rabi, detuning, x,
  length, separation, volume,
  power, tau,
};

struct KeyDef {
  std::string_view section;
  std::string_view key;
  Field field;
};

constexpr KeyDef kKeys[] = {
    {"gas", "N0", Field::number_density},
    {"gas", "T", Field::temperature},
    {"gas", "m", Field::mass},
    {"gas", "species", Field::species},
    {"gas", "s", Field::spin},
    {"optics", "lambda", Field::wavelength},
    {"optics", "gamma", Field::decay_rate},
    {"optics", "dipole", Field::dipole},
    {"optics", "Omega", Field::rabi},
    {"optics", "Delta", Field::detuning},
    {"optics", "x", Field::x},
    {"geometry", "L", Field::length},
    {"geometry", "Y", Field::separation},
    {"geometry", "V", Field::volume},
    {"noise", "P", Field::power},
    {"noise", "tau", Field::tau},
};

RateInput parse_rate(std::string_view text) {
  const auto q = split_quantity(text);
  if (q.unit == "gamma") return {q.value, true};
  return {to_si(q.value, q.unit, Dimension::angular_frequency), false};
}

struct SweepParam {
  std::string_view path;
  Dimension dimension;
};

constexpr SweepParam kSweepParams[] = {
    {"gas.N0", Dimension::number_density},
    {"gas.T", Dimension::temperature},
    {"gas.m", Dimension::mass},
    {"optics.lambda", Dimension::length},
    {"optics.gamma", Dimension::angular_frequency},
    {"optics.dipole", Dimension::dipole_moment},
    {"optics.Omega", Dimension::angular_frequency},
    {"optics.Delta", Dimension::angular_frequency},
    {"optics.x", Dimension::detuning_ratio},
    {"geometry.L", Dimension::length},
    {"geometry.Y", Dimension::length},
    {"noise.P", Dimension::power},
    {"noise.tau", Dimension::time},
};

}  // namespace

Scenario parse_scenario(std::istream& in, std::string_view source_name) {
  Scenario s;
  std::string section;
  std::map<Field, int> seen;  // field -> line number
  std::string raw;
  int line_no = 0;

  const auto fail = [&](const std::string& msg) {
    return InputError(std::string(source_name) + ":" + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw fail("unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "gas" && section != "optics" && section != "geometry" &&
          section != "noise") {
        throw fail("unknown section [" + section + "]");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw fail("expected 'key = value unit'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (section.empty()) throw fail("key '" + std::string(key) + "' outside any section");
    if (value.empty()) throw fail("key '" + std::string(key) + "' has no value");

    const auto def = std::find_if(std::begin(kKeys), std::end(kKeys), [&](const KeyDef& k) {
      return k.section == section && k.key == key;
    });
    if (def == std::end(kKeys)) {
      throw fail("unknown key '" + std::string(key) + "' in [" + section + "]");
    }
    if (const auto it = seen.find(def->field); it != seen.end()) {
      throw fail("duplicate key '" + std::string(key) + "' (first set on line " +
                 std::to_string(it->second) + ")");
    }
    seen[def->field] = line_no;

    try {
      switch (def->field) {
        case Field::number_density:
          s.number_density = parse_quantity(value, Dimension::number_density);
          break;
        case Field::temperature:
          s.temperature = parse_quantity(value, Dimension::temperature);
          break;
        case Field::mass: s.mass = parse_quantity(value, Dimension::mass); break;
        case Field::species: {
          const auto sp = find_species(value);
          if (!sp) {
            std::string names;
            for (const auto& p : species_presets()) {
              if (!names.empty()) names += ", ";
              names += p.name;
            }
            throw InputError("unknown species '" + std::string(value) + "' (known: " +
                             names + ")");
          }
          s.species = std::string(value);
          s.mass = sp->mass;
          break;
        }
        case Field::spin: {
          int v = 0;
          const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
          if (ec != std::errc() || ptr != value.data() + value.size()) {
            throw InputError("spin degeneracy must be a positive integer count");
          }
          s.spin_degeneracy = v;
          break;
        }
        case Field::wavelength: s.wavelength = parse_quantity(value, Dimension::length); break;
        case Field::decay_rate:
          s.decay_rate = parse_quantity(value, Dimension::angular_frequency);
          break;
        case Field::dipole: s.dipole = parse_quantity(value, Dimension::dipole_moment); break;
        case Field::rabi: s.rabi_frequency = parse_rate(value); break;
        case Field::detuning: s.detuning = parse_rate(value); break;
        case Field::x:
          s.dimensionless_detuning = parse_quantity(value, Dimension::detuning_ratio);
          break;
        case Field::length: s.length = parse_quantity(value, Dimension::length); break;
        case Field::separation: s.separation = parse_quantity(value, Dimension::length); break;
        case Field::volume: s.volume = parse_quantity(value, Dimension::volume); break;
        case Field::power: s.probe_power = parse_quantity(value, Dimension::power); break;
        case Field::tau: s.integration_time = parse_quantity(value, Dimension::time); break;
      }
    } catch (const InputError& e) {
      throw fail(e.what());
    }
  }

  line_no = 0;
  const auto has = [&](Field f) { return seen.count(f) > 0; };
  const auto require = [&](Field f, const char* what) {
    if (!has(f)) throw fail(std::string("missing required key ") + what);
  };
  const auto exactly_one = [&](Field a, Field b, const char* what) {
    if (has(a) == has(b)) throw fail(std::string("exactly one of ") + what + " is required");
  };
  require(Field::number_density, "gas.N0");
  require(Field::temperature, "gas.T");
  exactly_one(Field::mass, Field::species, "gas.m / gas.species");
  require(Field::wavelength, "optics.lambda");
  exactly_one(Field::decay_rate, Field::dipole, "optics.gamma / optics.dipole");
  require(Field::rabi, "optics.Omega");
  exactly_one(Field::detuning, Field::x, "optics.Delta / optics.x");
  require(Field::length, "geometry.L");
  require(Field::separation, "geometry.Y");
  require(Field::power, "noise.P");
  require(Field::tau, "noise.tau");
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file '" + path.string() + "'");
  return parse_scenario(in, path.string());
}

EITParams build_optics(const Scenario& s) {
  EITInputs in;
  in.wavelength = s.wavelength;
  in.decay_rate = s.decay_rate;
  in.dipole = s.dipole;
  if (s.rabi_frequency.in_gamma || (s.detuning && s.detuning->in_gamma)) {
    // Resolve gamma first; the constructor then validates the full set.
    EITInputs probe = in;
    probe.rabi_frequency = 1.0;
    probe.dimensionless_detuning = 0.0;
    const double gamma = EITParams(probe).decay_rate();
    in.rabi_frequency = s.rabi_frequency.in_gamma ? s.rabi_frequency.value * gamma
                                                  : s.rabi_frequency.value;
  } else {
    in.rabi_frequency = s.rabi_frequency.value;
  }
  if (s.detuning) {
    if (s.detuning->in_gamma) {
      in.dimensionless_detuning = s.detuning->value;
    } else {
      in.detuning = s.detuning->value;
    }
  } else {
    in.dimensionless_detuning = s.dimensionless_detuning;
  }
  return EITParams(in);
}

SensorConfig build_config(const Scenario& s) {
  // Geometry and optics first so that input errors win over condensation.
  SensorGeometry geometry(s.length, s.separation, s.volume);
  EITParams optics = build_optics(s);
  GasState gas(s.number_density, s.temperature, s.mass, s.spin_degeneracy);
  return {gas, optics, geometry};
}

NoiseModel build_noise(const Scenario& s) {
  return NoiseModel::for_wavelength(s.probe_power, s.integration_time, s.wavelength);
}

Dimension sweep_dimension(std::string_view parameter) {
  for (const auto& p : kSweepParams) {
    if (p.path == parameter) return p.dimension;
  }
  std::string known;
  for (const auto& p : kSweepParams) {
    if (!known.empty()) known += ", ";
    known += p.path;
  }
  throw InputError("unknown sweep parameter '" + std::string(parameter) + "' (known: " +
                   known + ")");
}

std::vector<std::string_view> sweep_parameters() {
  std::vector<std::string_view> out;
  for (const auto& p : kSweepParams) out.push_back(p.path);
  return out;
}

void validate(const SweepSpec& spec) {
  sweep_dimension(spec.parameter);
  if (spec.count < 2) throw InputError("sweep count must be >= 2");
  if (!std::isfinite(spec.start) || !std::isfinite(spec.stop)) {
    throw InputError("sweep endpoints must be finite");
  }
  if (spec.start == spec.stop) throw InputError("sweep start and stop must differ");
  if (spec.scale == SweepScale::log && !(spec.start > 0.0 && spec.stop > 0.0)) {
    throw InputError("log-scale sweep requires positive endpoints");
  }
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  validate(spec);
  std::vector<double> grid(static_cast<std::size_t>(spec.count));
  const double last = spec.count - 1;
  for (int i = 0; i < spec.count; ++i) {
    const double t = i / last;
    if (spec.scale == SweepScale::linear) {
      grid[i] = spec.start + (spec.stop - spec.start) * t;
    } else {
      grid[i] = spec.start * std::pow(spec.stop / spec.start, t);
    }
  }
  grid.front() = spec.start;
  grid.back() = spec.stop;
  return grid;
}

void apply_parameter(Scenario& s, std::string_view parameter, double v) {
  if (parameter == "gas.N0") {
    s.number_density = v;
  } else if (parameter == "gas.T") {
    s.temperature = v;
  } else if (parameter == "gas.m") {
    s.mass = v;
    s.species.reset();
  } else if (parameter == "optics.lambda") {
    s.wavelength = v;
  } else if (parameter == "optics.gamma") {
    s.decay_rate = v;
    s.dipole.reset();
  } else if (parameter == "optics.dipole") {
    s.dipole = v;
    s.decay_rate.reset();
  } else if (parameter == "optics.Omega") {
    s.rabi_frequency = {v, false};
  } else if (parameter == "optics.Delta") {
    s.detuning = RateInput{v, false};
    s.dimensionless_detuning.reset();
  } else if (parameter == "optics.x") {
    s.dimensionless_detuning = v;
    s.detuning.reset();
  } else if (parameter == "geometry.L") {
    s.length = v;
  } else if (parameter == "geometry.Y") {
    s.separation = v;
  } else if (parameter == "noise.P") {
    s.probe_power = v;
  } else if (parameter == "noise.tau") {
    s.integration_time = v;
  } else {
    sweep_dimension(parameter);  // throws with the list of known paths
  }
}

FailureKind classify_current_exception(std::string& message) {
  try {
    throw;
  } catch (const CondensedError& e) {
    message = e.what();
    return FailureKind::condensed;
  } catch (const NumericalError& e) {
    message = e.what();
    return FailureKind::numerical;
  } catch (const Error& e) {
    message = e.what();
    return FailureKind::input;
  } catch (const std::exception& e) {
    message = e.what();
    return FailureKind::numerical;
  }
}

std::vector<SweepRow> run_sweep(const Scenario& base, const SweepSpec& spec) {
  const auto grid = sweep_grid(spec);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const double v : grid) {
    SweepRow row{v, std::nullopt, {}, FailureKind::input};
    try {
      Scenario s = base;
      apply_parameter(s, spec.parameter, v);
      const auto config = build_config(s);
      const auto report = evaluate_sensitivity(config, build_noise(s));
      row.point = SweepPoint{report.fugacity,      report.ratio_F,
                             report.responsivity,  report.shot_noise_phase,
                             report.delta_g_full,  report.delta_g_simplified};
    } catch (...) {
      row.failure = classify_current_exception(row.error);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ProfileRow> run_profile(const Scenario& s, double g,
                                    const std::vector<double>& heights) {
  if (!std::isfinite(g)) throw DomainError("field strength g must be finite");
  const auto config = build_config(s);
  const auto& gas = config.gas;
  std::vector<ProfileRow> rows;
  rows.reserve(heights.size());
  for (const double h : heights) {
    ProfileRow row{h, std::nullopt, {}, FailureKind::input};
    try {
      const GravityContext ctx{g, h};
      const double z = local_fugacity(gas.fugacity(), ctx.potential_difference(),
                                      gas.temperature(), gas.mass());
      const double exact = density_variation_exact(gas, ctx);
      row.point = ProfilePoint{z, gas.number_density() + exact, exact,
                               density_variation_linear(gas, ctx)};
    } catch (...) {
      row.failure = classify_current_exception(row.error);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace coldgrav
