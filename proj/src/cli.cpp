#include "coldgrav/cli.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <CLI11.hpp>

#include "coldgrav/constants.hpp"
#include "coldgrav/errors.hpp"
#include "coldgrav/polylog.hpp"
#include "coldgrav/report.hpp"
#include "coldgrav/scenario.hpp"

namespace coldgrav {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

int exit_code_for(FailureKind kind) {
  switch (kind) {
    case FailureKind::input: return kExitInput;
    case FailureKind::condensed: return kExitCondensed;
    case FailureKind::numerical: return kExitNumerical;
  }
  return kExitNumerical;
}

struct PolylogOptions {
  std::string k;
  double z = 0.0;
  bool verbose = false;
  std::string format = "text";
  std::size_t max_intervals = QuadratureOptions{}.max_intervals;
};

struct SensitivityOptions {
  std::string scenario;
  std::string format = "text";
  bool g0 = false;
};

struct SweepOptions {
  std::string scenario;
  std::string param;
  std::string start;
  std::string stop;
  int count = 0;
  std::string scale = "linear";
  std::string format = "csv";
  bool g0 = false;
};

struct ProfileOptions {
  std::string scenario;
  std::string g = "1 g0";
  std::string from;
  std::string to;
  int count = 0;
  std::string format = "csv";
};

int cmd_polylog(const PolylogOptions& o, std::ostream& out) {
  const auto k = PolylogOrder::parse(o.k);
  const double value = polylog(k, o.z);

  std::optional<double> oracle;
  std::string oracle_note;
  if (o.verbose) {
    if (k.halves() <= 1) {
      oracle_note = "integral oracle undefined for k = 1/2";
    } else if (o.z >= 1.0) {
      oracle_note = "integral oracle requires z < 1";
    } else {
      QuadratureOptions q;
      q.max_intervals = o.max_intervals;
      oracle = polylog_integral_oracle(k, o.z, q);
    }
  }

  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["k"] = k.str();
    j["z"] = o.z;
    j["value"] = value;
    if (oracle) {
      j["oracle"] = *oracle;
      j["relative_difference"] = value == 0.0 ? 0.0 : std::abs(*oracle - value) / value;
    } else if (!oracle_note.empty()) {
      j["oracle_note"] = oracle_note;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << fmt("%.17g", value) << '\n';
  if (o.verbose) {
    if (oracle) {
      out << "integral oracle: " << fmt("%.17g", *oracle) << '\n'
          << "relative difference: "
          << fmt("%.3e", value == 0.0 ? 0.0 : std::abs(*oracle - value) / value) << '\n';
    } else {
      out << oracle_note << '\n';
    }
  }
  return kExitOk;
}

int cmd_sensitivity(const SensitivityOptions& o, std::ostream& out) {
  const auto scenario = load_scenario(o.scenario);
  const auto config = build_config(scenario);
  const auto noise = build_noise(scenario);
  const auto report = evaluate_sensitivity(config, noise);
  if (o.format == "json") {
    out << report_to_json(config, noise, report).dump(2) << '\n';
  } else {
    out << report_to_text(config, noise, report, o.g0);
  }
  return kExitOk;
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  const auto scenario = load_scenario(o.scenario);
  SweepSpec spec;
  spec.parameter = o.param;
  const auto dim = sweep_dimension(o.param);
  spec.start = parse_quantity(o.start, dim);
  spec.stop = parse_quantity(o.stop, dim);
  spec.count = o.count;
  spec.scale = o.scale == "log" ? SweepScale::log : SweepScale::linear;
  const auto rows = run_sweep(scenario, spec);
  write_sweep_csv(out, o.param, rows, o.g0);
  for (const auto& row : rows) {
    if (row.point) return kExitOk;
  }
  err << "error: every sweep point failed\n";
  return exit_code_for(rows.front().failure);
}

int cmd_profile(const ProfileOptions& o, std::ostream& out, std::ostream& err) {
  const auto scenario = load_scenario(o.scenario);
  const double g = parse_quantity(o.g, Dimension::acceleration);
  SweepSpec grid_spec;
  grid_spec.parameter = "geometry.Y";
  grid_spec.start = parse_quantity(o.from, Dimension::length);
  grid_spec.stop = parse_quantity(o.to, Dimension::length);
  grid_spec.count = o.count;
  const auto heights = sweep_grid(grid_spec);
  const auto rows = run_profile(scenario, g, heights);
  write_profile_csv(out, rows);
  for (const auto& row : rows) {
    if (row.point) return kExitOk;
  }
  err << "error: every profile point failed\n";
  return exit_code_for(rows.front().failure);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cold-atom EIT gravimeter model"};
  app.require_subcommand(1);

  PolylogOptions pl;
  auto* polylog_cmd = app.add_subcommand("polylog", "Evaluate the Bose-Einstein function g_k(z)");
  polylog_cmd->add_option("--k", pl.k, "Order k (half-integer, e.g. 3/2)")->required();
  polylog_cmd->add_option("--z", pl.z, "Fugacity, 0 <= z <= 1")->required();
  polylog_cmd->add_flag("--verbose", pl.verbose, "Add the integral-representation cross-check");
  polylog_cmd->add_option("--format", pl.format)->check(CLI::IsMember({"text", "json"}));
  polylog_cmd->add_option("--max-intervals", pl.max_intervals,
                          "Subinterval budget of the adaptive quadrature")
      ->check(CLI::PositiveNumber);

  SensitivityOptions so;
  auto* sens_cmd = app.add_subcommand("sensitivity", "Limiting sensitivity for a scenario");
  sens_cmd->add_option("scenario", so.scenario, "Scenario file")->required();
  sens_cmd->add_option("--format", so.format)->check(CLI::IsMember({"text", "json"}));
  sens_cmd->add_flag("--g0", so.g0, "Report delta g in multiples of 9.80665 m/s^2");

  SweepOptions sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one scenario parameter (CSV)");
  sweep_cmd->add_option("scenario", sw.scenario, "Scenario file")->required();
  sweep_cmd->add_option("--param", sw.param, "Parameter path, e.g. gas.T")->required();
  sweep_cmd->add_option("--start", sw.start, "Start value with unit, e.g. '1 uK'")->required();
  sweep_cmd->add_option("--stop", sw.stop, "Stop value with unit")->required();
  sweep_cmd->add_option("--count", sw.count, "Number of grid points (>= 2)")->required();
  sweep_cmd->add_option("--scale", sw.scale)->check(CLI::IsMember({"linear", "log"}));
  sweep_cmd->add_option("--format", sw.format)->check(CLI::IsMember({"csv"}));
  sweep_cmd->add_flag("--g0", sw.g0, "Report delta g in multiples of 9.80665 m/s^2");

  ProfileOptions pr;
  auto* profile_cmd =
      app.add_subcommand("profile", "Density profile along the field axis (CSV)");
  profile_cmd->add_option("scenario", pr.scenario, "Scenario file")->required();
  profile_cmd->add_option("--g", pr.g, "Field strength with unit (default '1 g0')");
  profile_cmd->add_option("--from", pr.from, "Lowest height with unit, e.g. '-5 mm'")
      ->required();
  profile_cmd->add_option("--to", pr.to, "Highest height with unit")->required();
  profile_cmd->add_option("--count", pr.count, "Number of heights (>= 2)")->required();
  profile_cmd->add_option("--format", pr.format)->check(CLI::IsMember({"csv"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*polylog_cmd) return cmd_polylog(pl, out);
    if (*sens_cmd) return cmd_sensitivity(so, out);
    if (*sweep_cmd) return cmd_sweep(sw, out, err);
    if (*profile_cmd) return cmd_profile(pr, out, err);
  } catch (const CondensedError& e) {
    err << "error: " << e.what() << '\n';
    if (!std::isnan(e.phase_space_density())) {
      err << "phase-space density N lambda^3 = " << fmt("%.10g", e.phase_space_density())
          << " (threshold zeta(3/2) = " << fmt("%.10g", zeta_3_2()) << ")\n";
    }
    return kExitCondensed;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace coldgrav
