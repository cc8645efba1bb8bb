#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>

#include <json.hpp>

#include "angle_parse.hpp"
#include "support/cli_runner.hpp"

namespace {

using nlohmann::json;
using octa::testing::run_cli;

constexpr double kPi = 3.14159265358979323846;

TEST(AngleParse, Forms) {
  using octa::cli::parse_angle;
  EXPECT_EQ(parse_angle("1.25"), 1.25);
  EXPECT_EQ(parse_angle("pi"), kPi);
  EXPECT_EQ(parse_angle(" 2pi/3 "), 2 * kPi / 3);
  EXPECT_EQ(parse_angle("pi/2"), kPi / 2);
  EXPECT_EQ(parse_angle("-0.5*pi"), -0.5 * kPi);
  EXPECT_EQ(parse_angle("3/4"), 0.75);
  EXPECT_EQ(parse_angle("90", true), kPi / 2);
  EXPECT_EQ(parse_angle("pi/2", true), kPi / 2);
}

TEST(AngleParse, Rejects) {
  using octa::cli::parse_angle;
  using octa::cli::ParseError;
  EXPECT_THROW(parse_angle(""), ParseError);
  EXPECT_THROW(parse_angle("pie"), ParseError);
  EXPECT_THROW(parse_angle("1/0"), ParseError);
  EXPECT_THROW(parse_angle("2pi/"), ParseError);
  EXPECT_THROW(parse_angle("nan"), ParseError);
}

TEST(AngleParse, Lists) {
  const auto a = octa::cli::parse_angle_list("2pi/3, 2pi/3,2pi/3");
  ASSERT_EQ(a.size(), 3u);
  EXPECT_EQ(a[2], 2 * kPi / 3);
  const auto n = octa::cli::parse_number_list("1,0,0; 0 1 0;0,0,1");
  ASSERT_EQ(n.size(), 9u);
  EXPECT_EQ(n[4], 1.0);
  EXPECT_THROW(octa::cli::parse_number_list("1,x"), octa::cli::ParseError);
}

class Cli : public ::testing::Test {
protected:
  static std::string bin() { return OCTA_CLI_PATH; }
  static json run_json(const std::string& args, int expected_exit = 0) {
    const auto r = run_cli(bin(), args);
    EXPECT_EQ(r.exit_code, expected_exit) << args << "\n" << r.out;
    return json::parse(r.out);
  }
};

TEST_F(Cli, GoldenOutputsAreByteIdentical) {
  const std::string dir = OCTA_GOLDEN_DIR;
  for (const auto& c : octa::testing::golden_cases(dir)) {
    const auto r = run_cli(bin(), c.args);
    EXPECT_EQ(r.out, octa::testing::read_file(dir + "/" + c.name + ".out")) << c.name;
  }
}

TEST_F(Cli, GramEquilateral) {
  const auto j = run_json("gram --deficits '2pi/3,2pi/3,2pi/3'");
  EXPECT_EQ(j["status"], "ok");
  EXPECT_TRUE(j["diagnostics"].is_array());
  const auto& m = j["payload"]["matrix"];
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      EXPECT_NEAR(m[r][c].get<double>(), r == c ? 0.0 : std::sqrt(3.0) / 2, 1e-15);
    }
  }
}

TEST_F(Cli, DihedralRightAngled) {
  const auto a = run_json("dihedral --deficits 'pi,pi/2,pi/2'")["payload"]["angles"];
  EXPECT_NEAR(a["ab"].get<double>(), kPi / 2, 1e-12);
  EXPECT_NEAR(a["cd"].get<double>(), kPi / 2, 1e-12);
  for (const char* k : {"ac", "bd", "ad", "bc"}) EXPECT_NEAR(a[k].get<double>(), kPi / 4, 1e-12) << k;
}

TEST_F(Cli, VolumeAndMonteCarlo) {
  EXPECT_NEAR(run_json("volume --deficits '2pi/3,2pi/3,2pi/3'")["payload"]["volume"].get<double>(),
              1.0149416064, 1e-9);
  const auto one = run_cli(bin(), "volume --deficits 'pi,pi/2,pi/2' --mc 300000 --seed 4 --workers 1");
  const auto four = run_cli(bin(), "volume --deficits 'pi,pi/2,pi/2' --mc 300000 --seed 4 --workers 4");
  EXPECT_EQ(one.out, four.out);
  const auto mc = json::parse(one.out)["payload"]["monte_carlo"];
  EXPECT_EQ(mc["samples"], 300000);
  EXPECT_EQ(mc["seed"], 4);
  EXPECT_NEAR(mc["value"].get<double>(), 0.9159655942, 0.02);
}

TEST_F(Cli, SeedFromEnvironment) {
  const std::string args = "volume --deficits 'pi,pi/2,pi/2' --mc 100000";
  const auto env = run_cli("/usr/bin/env", "OCTA_SEED=11 '" + bin() + "' " + args);
  const auto explicit_seed = run_cli(bin(), args + " --seed 11");
  EXPECT_EQ(env.out, explicit_seed.out);
  const auto fallback = json::parse(run_cli("/usr/bin/env", "-u OCTA_SEED '" + bin() + "' " + args).out);
  EXPECT_EQ(fallback["payload"]["monte_carlo"]["seed"], 20240611);
}

TEST_F(Cli, EmbedExamples) {
  const auto regular = run_json("embed --vertices '1,0,0;0,1,0;0,0,1'")["payload"];
  for (const auto& c : regular["chart"]) EXPECT_NEAR(c.get<double>(), std::sqrt(2.0 / 3.0), 1e-12);
  EXPECT_LE(regular["residual"].get<double>(), 1e-12);
  EXPECT_LE(run_json("embed --vertices '2,0,0;0,1,0;0,0,1'")["payload"]["residual"].get<double>(), 1e-10);
  const auto flat = run_json("embed --vertices '1,0,0;0,1,0;1,1,0'", 1);
  EXPECT_EQ(flat["status"], "error");
  EXPECT_EQ(flat["error"]["code"], "DegenerateVertices");
}

TEST_F(Cli, ChartWritesSvg) {
  const auto path = std::filesystem::temp_directory_path() / "octa_cli_test_net.svg";
  std::filesystem::remove(path);
  const auto j = run_json("chart --deficits '2pi/3,2pi/3,2pi/3' --chart 1,1,1,1 --svg '" + path.string() + "'");
  const auto& p = j["payload"];
  EXPECT_EQ(p["euler_characteristic"], 2);
  EXPECT_EQ(p["parallelograms"].size(), 12u);
  for (const char* v : {"v1", "v2", "v3", "v1'", "v2'", "v3'"}) {
    EXPECT_NEAR(p["cone_angles"][v].get<double>(), 4 * kPi / 3, 1e-9) << v;
  }
  for (const char* v : {"O1", "O2", "O3", "O4", "O1'", "O2'", "O3'", "O4'"}) {
    EXPECT_NEAR(p["cone_angles"][v].get<double>(), 2 * kPi, 1e-9) << v;
  }
  EXPECT_NEAR(p["area"].get<double>(), 6 * std::sqrt(3.0), 1e-12);
  const std::string svg = octa::testing::read_file(path.string());
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  std::filesystem::remove(path);
}

TEST_F(Cli, DistanceAndCanon) {
  const auto d = run_json("distance --deficits '2pi/3,2pi/3,2pi/3' --chart1 1,1,1,1 --chart2 2,1,1,1");
  EXPECT_NEAR(d["payload"]["distance"].get<double>(), std::acosh(5 * std::sqrt(6.0) / 12), 1e-12);
  const auto zero = run_json("distance --deficits '2pi/3,2pi/3,2pi/3' --chart1 1,0,0,0 --chart2 2,1,1,1", 1);
  EXPECT_EQ(zero["error"]["code"], "ZeroArea");

  const auto s4 = run_json("canon --deficits '2pi/3,2pi/3,2pi/3' --chart 3,1,2,4")["payload"];
  EXPECT_EQ(s4["group_kind"], "full_S4");
  EXPECT_EQ(s4["canonical_chart"], json({1.0, 2.0, 3.0, 4.0}));
  const auto d2 = run_json("canon --deficits 'pi,pi/2,pi/2' --chart 2,1,4,3")["payload"];
  EXPECT_EQ(d2["group_kind"], "dihedral_D2");
  EXPECT_EQ(d2["canonical_chart"], json({1.0, 2.0, 3.0, 4.0}));
}

TEST_F(Cli, SweepEmitsJsonLines) {
  const auto r = run_cli(bin(), "sweep --steps 8");
  ASSERT_EQ(r.exit_code, 0);
  std::istringstream in(r.out);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    const auto j = json::parse(line);
    EXPECT_TRUE(j.contains("volume"));
    EXPECT_EQ(j["dihedral"].size(), 6u);
    ++count;
  }
  EXPECT_EQ(count, 7 * 6 / 2);
  EXPECT_EQ(run_cli(bin(), "sweep --steps 2").exit_code, 1);
}

TEST_F(Cli, RequestEnvelopeMatchesArgv) {
  const auto via_argv = run_cli(bin(), "canon --deficits 'pi,pi/2,pi/2' --chart 2,1,4,3 --tol 1e-9");
  const auto via_stdin =
      run_cli(bin(), "request",
              R"({"command":"canon","deficits":"pi,pi/2,pi/2","chart":[2,1,4,3],"options":{"tol":1e-9}})");
  EXPECT_EQ(via_stdin.exit_code, 0);
  EXPECT_EQ(json::parse(via_argv.out)["payload"], json::parse(via_stdin.out)["payload"]);

  const auto vertices = run_cli(bin(), "request", R"({"command":"embed","vertices":[[1,0,0],[0,1,0],[0,0,1]]})");
  EXPECT_EQ(json::parse(vertices.out)["status"], "ok");

  const auto unknown = run_cli(bin(), "request", R"({"command":"bogus"})");
  EXPECT_EQ(unknown.exit_code, 1);
  EXPECT_EQ(json::parse(unknown.out)["error"]["code"], "InvalidInput");

  const auto garbage = run_cli(bin(), "request", "{not json");
  EXPECT_EQ(garbage.exit_code, 1);
  EXPECT_EQ(json::parse(garbage.out)["status"], "error");

  const auto missing = run_cli(bin(), "request", R"({"command":"gram"})");
  EXPECT_EQ(missing.exit_code, 1);
}

TEST_F(Cli, ValidationErrorsExitOne) {
  const auto bad = run_json("gram --deficits 'pi,pi,pi'", 1);
  EXPECT_EQ(bad["status"], "error");
  EXPECT_EQ(bad["error"]["code"], "SumNotTwoPi");
  EXPECT_EQ(run_json("gram", 1)["status"], "error");
  EXPECT_EQ(run_json("spectrum --deficits '1,2'", 1)["error"]["code"], "InvalidInput");
  EXPECT_EQ(run_json("volume --deficits 'pi,pi/2,pi/2' --mc 10", 1)["error"]["code"], "BadSampleCount");
}

TEST_F(Cli, DegenerateFormIsInternalFailure) {
  const auto j = run_json("spectrum --deficits '6.2831853071793862,1e-13,1e-13'", 2);
  EXPECT_EQ(j["error"]["code"], "DegenerateForm");
}

} // namespace
