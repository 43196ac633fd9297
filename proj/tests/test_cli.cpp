#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "coldgrav/cli.hpp"

using namespace coldgrav;

namespace {

const std::string kDemoPath = std::string(COLDGRAV_SCENARIO_DIR) + "/paper-demo.scenario";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "coldgrav");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Demo scenario with one line substituted, written to a temporary file.
std::string demo_variant(const std::string& from, const std::string& to, const std::string& name) {
  std::ifstream in(kDemoPath);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, from.size(), to);
  const auto path = std::filesystem::temp_directory_path() / ("coldgrav-test-" + name + ".scenario");
  std::ofstream(path) << text;
  return path.string();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST_CASE("polylog command") {
  auto r = run({"polylog", "--k", "3/2", "--z", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("2.612375348685488", 0) == 0);

  r = run({"polylog", "--k", "1", "--z", "0.5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("0.693147180559945", 0) == 0);

  r = run({"polylog", "--k", "1/2", "--z", "1"});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("diverge") != std::string::npos);

  r = run({"polylog", "--k", "3/2", "--z", "0.5", "--verbose"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("integral oracle: 0.62483702081991") != std::string::npos);

  r = run({"polylog", "--k", "5/2", "--z", "0.3", "--format", "json", "--verbose"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["k"] == "5/2");
  CHECK(j["relative_difference"].get<double>() < 1e-10);

  r = run({"polylog", "--k", "3/2", "--z", "0.9", "--verbose", "--max-intervals", "1"});
  CHECK(r.code == kExitNumerical);
  CHECK(r.err.find("numerical failure") != std::string::npos);

  CHECK(run({"polylog", "--k", "1/3", "--z", "0.5"}).code == kExitInput);
  CHECK(run({"polylog", "--k", "3/2", "--z", "1.5"}).code == kExitInput);
  CHECK(run({"polylog", "--k", "3/2"}).code == kExitInput);
  CHECK(run({"polylog", "--k", "3/2", "--z", "abc"}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("sensitivity command") {
  auto r = run({"sensitivity", kDemoPath});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("order of ten") != std::string::npos);
  CHECK(r.out.find("computed/claimed = 23.13") != std::string::npos);

  r = run({"sensitivity", kDemoPath, "--format", "json", "--g0"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "coldgrav.sensitivity-report/1");
  const double ratio = j["audit"]["headline_ratio"].get<double>();
  CHECK(ratio > 1e-2);
  CHECK(ratio < 1e2);
  CHECK(j["audit"]["headline_within_two_orders"] == true);
  CHECK(j["phase_sign"] == 1);

  CHECK(run({"sensitivity", demo_variant("T = 1 mK", "T = 0 K", "t0")}).code == kExitInput);
  CHECK(run({"sensitivity", demo_variant("T = 1 mK", "T = 1", "nounit")}).code == kExitInput);
  CHECK(run({"sensitivity", "/nonexistent.scenario"}).code == kExitInput);

  r = run({"sensitivity", demo_variant("N0 = 1e12 cm^-3", "N0 = 1e24 m^-3", "bec")});
  CHECK(r.code == kExitCondensed);
  CHECK(r.err.find("phase-space density N lambda^3 = 11.386") != std::string::npos);
}

TEST_CASE("JSON output is byte-identical across runs") {
  const auto a = run({"sensitivity", kDemoPath, "--format", "json"});
  const auto b = run({"sensitivity", kDemoPath, "--format", "json"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto c = run({"sweep", kDemoPath, "--param", "gas.T", "--start", "10 uK", "--stop",
                      "1 mK", "--count", "5", "--scale", "log"});
  const auto d = run({"sweep", kDemoPath, "--param", "gas.T", "--start", "10 uK", "--stop",
                      "1 mK", "--count", "5", "--scale", "log"});
  CHECK(c.out == d.out);
}

TEST_CASE("sweep command") {
  auto r = run({"sweep", kDemoPath, "--param", "gas.T", "--start", "1 uK", "--stop", "1 mK",
                "--count", "4", "--scale", "log"});
  CHECK(r.code == kExitOk);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] ==
        "gas.T,z0,F,responsivity,shot_noise_phase,delta_g_full_m_s2,delta_g_simplified_m_s2,error");
  double prev = 0.0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = fields(ls[i]);
    REQUIRE(f.size() == 8);
    CHECK(f[7].empty());
    const double dg = std::stod(f[6]);
    CHECK(dg > prev);
    prev = dg;
  }
  CHECK(ls[4].rfind("1.0000000000000000e-03,", 0) == 0);

  r = run({"sweep", kDemoPath, "--param", "gas.N0", "--start", "1e22 m^-3", "--stop",
           "1e24 m^-3", "--count", "5", "--scale", "log", "--g0"});
  CHECK(r.code == kExitOk);
  ls = lines(r.out);
  CHECK(ls[0].find("delta_g_full_g0") != std::string::npos);
  CHECK(fields(ls[3]).back().empty());
  CHECK_FALSE(fields(ls[4]).back().empty());
  CHECK_FALSE(fields(ls[5]).back().empty());

  r = run({"sweep", kDemoPath, "--param", "gas.N0", "--start", "1e24 m^-3", "--stop",
           "1e25 m^-3", "--count", "3"});
  CHECK(r.code == kExitCondensed);
  CHECK(lines(r.out).size() == 4);

  CHECK(run({"sweep", kDemoPath, "--param", "gas.T", "--start", "1 mK", "--stop", "2 mK",
             "--count", "1"})
            .code == kExitInput);
  CHECK(run({"sweep", kDemoPath, "--param", "gas.T", "--start", "1 m", "--stop", "2 mK",
             "--count", "3"})
            .code == kExitInput);
  CHECK(run({"sweep", kDemoPath, "--param", "gas.Q", "--start", "1 mK", "--stop", "2 mK",
             "--count", "3"})
            .code == kExitInput);
}

TEST_CASE("profile command") {
  auto r = run({"profile", kDemoPath, "--g", "0 m/s^2", "--from", "-5 mm", "--to", "5 mm",
                "--count", "3"});
  CHECK(r.code == kExitOk);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 4);
  CHECK(ls[0] == "height_m,z,N_m3,dN_exact_m3,dN_linear_m3,error");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    CHECK(fields(ls[i])[2] == "1.0000000000000000e+18");
  }

  r = run({"profile", kDemoPath, "--from", "-5 mm", "--to", "5 mm", "--count", "3"});
  CHECK(r.code == kExitOk);
  ls = lines(r.out);
  CHECK(std::stod(fields(ls[1])[3]) > 0.0);
  CHECK(std::stod(fields(ls[3])[3]) < 0.0);

  r = run({"profile", demo_variant("N0 = 1e12 cm^-3", "N0 = 2e23 m^-3", "dense"), "--from",
           "-2 m", "--to", "-1 m", "--count", "2"});
  CHECK(r.code == kExitCondensed);
  CHECK(run({"profile", kDemoPath, "--from", "0 m", "--to", "0 m", "--count", "3"}).code ==
        kExitInput);
}
