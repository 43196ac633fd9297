#pragma once

// Text, JSON and CSV renderings of sensor results. Output is a pure function of
// the inputs so identical runs are byte-identical.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "coldgrav/scenario.hpp"
#include "coldgrav/sensor.hpp"

namespace coldgrav {

inline constexpr const char* kReportSchemaId = "coldgrav.sensitivity-report/1";

/// Full precision scientific notation ("%.16e").
std::string csv_number(double v);

nlohmann::ordered_json report_to_json(const SensorConfig& config, const NoiseModel& noise,
                                      const SensitivityReport& report);

/// Human-readable report; delta g in multiples of g0 when g0_units is set.
std::string report_to_text(const SensorConfig& config, const NoiseModel& noise,
                           const SensitivityReport& report, bool g0_units);

void write_sweep_csv(std::ostream& out, const std::string& parameter,
                     const std::vector<SweepRow>& rows, bool g0_units);

void write_profile_csv(std::ostream& out, const std::vector<ProfileRow>& rows);

}  // namespace coldgrav
