#include "coldgrav/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "coldgrav/constants.hpp"

namespace coldgrav {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// CSV fields must not contain the separator or line breaks.
std::string csv_text(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

}  // namespace

std::string csv_number(double v) { return fmt("%.16e", v); }

nlohmann::ordered_json report_to_json(const SensorConfig& config, const NoiseModel& noise,
                                      const SensitivityReport& r) {
  const auto& gas = config.gas;
  const auto& optics = config.optics;
  const auto& geometry = config.geometry;
  const double g0 = constants::standard_gravity;

  nlohmann::ordered_json j;
  j["schema"] = kReportSchemaId;
  j["inputs"] = {
      {"number_density_m3", gas.number_density()},
      {"temperature_K", gas.temperature()},
      {"mass_kg", gas.mass()},
      {"spin_degeneracy", gas.spin_degeneracy()},
      {"wavelength_m", optics.wavelength()},
      {"angular_frequency_rad_s", optics.angular_frequency()},
      {"decay_rate_rad_s", optics.decay_rate()},
      {"dipole_C_m", optics.dipole()},
      {"rabi_frequency_rad_s", optics.rabi_frequency()},
      {"detuning_rad_s", optics.detuning()},
      {"dimensionless_detuning", optics.dimensionless_detuning()},
      {"length_m", geometry.length()},
      {"separation_m", geometry.separation()},
      {"area_m2", geometry.area()},
      {"probe_power_W", noise.probe_power()},
      {"integration_time_s", noise.integration_time()},
      {"photon_energy_J", noise.photon_energy()},
  };
  j["gas"] = {
      {"fugacity", r.fugacity},
      {"ratio_F", r.ratio_F},
      {"de_broglie_wavelength_m", gas.de_broglie_wavelength()},
      {"phase_space_density", gas.phase_space_density()},
  };
  j["x_times_F"] = r.x_times_F;
  j["responsivity_rad_per_m_s2"] = r.responsivity;
  j["phase_sign"] = r.phase_sign;
  j["shot_noise_phase_rad"] = r.shot_noise_phase;
  j["delta_g_full_m_s2"] = r.delta_g_full;
  j["delta_g_full_g0"] = r.delta_g_full / g0;
  j["delta_g_simplified_m_s2"] = r.delta_g_simplified;
  j["delta_g_simplified_g0"] = r.delta_g_simplified / g0;
  j["audit"] = {
      {"simplified_coefficient", r.simplified_coefficient},
      {"coefficient_claim", kCoefficientClaim},
      {"coefficient_ratio", r.coefficient_ratio},
      {"headline_claim_g0", kHeadlineSensitivityG0},
      {"headline_ratio", r.headline_ratio},
      {"headline_within_two_orders", std::abs(std::log10(r.headline_ratio)) <= 2.0},
  };
  j["notes"] = r.notes;
  return j;
}

std::string report_to_text(const SensorConfig& config, const NoiseModel& noise,
                           const SensitivityReport& r, bool g0_units) {
  const double g0 = constants::standard_gravity;
  const auto dg = [&](double v) {
    return g0_units ? fmt("%.6e g0", v / g0) : fmt("%.6e m/s^2", v);
  };
  std::string out;
  const auto line = [&](const char* label, const std::string& value) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-30s %s\n", label, value.c_str());
    out += buf;
  };
  out += "sensitivity report\n";
  line("number density", fmt("%.6e m^-3", config.gas.number_density()));
  line("temperature", fmt("%.6e K", config.gas.temperature()));
  line("atomic mass", fmt("%.6e kg", config.gas.mass()));
  line("phase-space density", fmt("%.6e", config.gas.phase_space_density()));
  line("fugacity z0", fmt("%.10e", r.fugacity));
  line("F(z0)", fmt("%.10f", r.ratio_F));
  line("x F(z0)", fmt("%.10f", r.x_times_F));
  line("decay rate gamma", fmt("%.6e rad/s", config.optics.decay_rate()));
  line("side area A", fmt("%.6e m^2", config.geometry.area()));
  line("photon energy", fmt("%.6e J", noise.photon_energy()));
  line("responsivity", fmt("%.6e rad/(m/s^2)", r.responsivity));
  line("shot-noise phase", fmt("%.6e rad", r.shot_noise_phase));
  line("delta g (full)", dg(r.delta_g_full));
  line("delta g (simplified)", dg(r.delta_g_simplified));
  line("simplified coefficient", fmt("%.6e (m/s^2)/(K rad)", r.simplified_coefficient));
  out += "notes:\n";
  for (const auto& n : r.notes) out += "  - " + n + "\n";
  return out;
}

void write_sweep_csv(std::ostream& out, const std::string& parameter,
                     const std::vector<SweepRow>& rows, bool g0_units) {
  const double scale = g0_units ? 1.0 / constants::standard_gravity : 1.0;
  const std::string unit = g0_units ? "g0" : "m_s2";
  out << csv_text(parameter) << ",z0,F,responsivity,shot_noise_phase,delta_g_full_" << unit
      << ",delta_g_simplified_" << unit << ",error\n";
  for (const auto& row : rows) {
    out << csv_number(row.value);
    if (row.point) {
      const auto& p = *row.point;
      out << ',' << csv_number(p.fugacity) << ',' << csv_number(p.ratio_F) << ','
          << csv_number(p.responsivity) << ',' << csv_number(p.shot_noise_phase) << ','
          << csv_number(p.delta_g_full * scale) << ','
          << csv_number(p.delta_g_simplified * scale) << ",\n";
    } else {
      out << ",,,,,,," << csv_text(row.error) << '\n';
    }
  }
}

void write_profile_csv(std::ostream& out, const std::vector<ProfileRow>& rows) {
  out << "height_m,z,N_m3,dN_exact_m3,dN_linear_m3,error\n";
  for (const auto& row : rows) {
    out << csv_number(row.height);
    if (row.point) {
      const auto& p = *row.point;
      out << ',' << csv_number(p.fugacity) << ',' << csv_number(p.density) << ','
          << csv_number(p.delta_exact) << ',' << csv_number(p.delta_linear) << ",\n";
    } else {
      out << ",,,,," << csv_text(row.error) << '\n';
    }
  }
}

}  // namespace coldgrav
