#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lipsel/json_io.hpp"

using namespace lipsel;
using namespace lipsel::testing;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(LIPSEL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  CliResult r;
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string write_file(const std::string& name, const std::string& text) {
  // Test-specific names: ctest may run the cases concurrently.
  const std::string test = ::testing::UnitTest::GetInstance()->current_test_info()->name();
  const std::string path = ::testing::TempDir() + "lipsel_cli_" + test + "_" + name;
  std::ofstream(path) << text;
  return path;
}

std::string write_instance(const std::string& name, const Instance& inst) {
  return write_file(name, instance_to_json(inst).dump());
}

}  // namespace

TEST(Cli, ValidateOk) {
  const CliResult r = run("validate " + write_instance("a.json", inst_a()));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(Json::parse(r.out)["valid"].get<bool>());
}

TEST(Cli, ValidateBrokenTriangle) {
  const std::string path = write_file("tri.json", R"({"elements":["1","2","3"],
    "rho":{"matrix":[[0,1,5],[1,0,1],[5,1,0]]},
    "targets":[{"type":"halfplane","n":[1,0],"alpha":0},{"type":"halfplane","n":[1,0],"alpha":0},
               {"type":"halfplane","n":[1,0],"alpha":0}]})");
  const CliResult r = run("validate " + path);
  EXPECT_EQ(r.code, 1);
  const Json j = Json::parse(r.out);
  EXPECT_FALSE(j["valid"].get<bool>());
  EXPECT_FALSE(j["violations"].empty());
}

TEST(Cli, ValidateMissingTarget) {
  const std::string path = write_file("missing.json", R"({"elements":["a","b"],"rho":{"matrix":[[0,1],[1,0]]},
    "targets":[{"type":"halfplane","n":[1,0],"alpha":0}]})");
  EXPECT_EQ(run("validate " + path).code, 1);
}

TEST(Cli, Lambda) {
  const std::string a = write_instance("a.json", inst_a());
  for (const char* m : {"R", "R3", "FP"}) {
    const CliResult r = run("lambda " + a + " --method " + m);
    ASSERT_EQ(r.code, 0) << m;
    EXPECT_NEAR(Json::parse(r.out)["value"].get<double>(), 1.0, 1e-9) << m;
  }
  const CliResult w = run("lambda " + a + " --method W");
  ASSERT_EQ(w.code, 0);
  EXPECT_NEAR(Json::parse(w.out)["value"].get<double>(), 1.0, 1e-5);
  const CliResult same = run("lambda " + write_instance("same.json", constant_targets(3, HalfPlane{0, 1, 0})) + " --method R");
  EXPECT_NEAR(Json::parse(same.out)["value"].get<double>(), 0.0, 1e-12);
}

TEST(Cli, SelectDriverR) {
  const CliResult r = run("select " + write_instance("a.json", inst_a()) + " --algo driverR");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "success");
  EXPECT_NEAR(j["seminorm"].get<double>(), 1.0, 1e-9);
  EXPECT_EQ(j["algorithm"], "driverR");
}

TEST(Cli, SelectProjectionNoGo) {
  const CliResult r = run("select " + write_instance("a.json", inst_a()) + " --algo projection --lambda1 0.5 --lambda2 0.5");
  EXPECT_EQ(r.code, 1);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "nogo");
  EXPECT_EQ(j["nogo"]["stage"], "refine1");
  EXPECT_EQ(j["nogo"]["element"], "a");
}

TEST(Cli, SelectInfeasibleZeroDistance) {
  Instance inst = inst_a();
  inst.rho.set(0, 1, 0);
  inst.rho.set(1, 0, 0);
  const CliResult r = run("select " + write_instance("zero.json", inst) + " --algo driverFP");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["nogo"]["stage"], "lambda");
}

TEST(Cli, SelectPlotData) {
  const CliResult r = run("select " + write_instance("b.json", inst_b()) + " --algo polygon --M 2 --emit-plot-data");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j.contains("plot"));
}

TEST(Cli, OracleAndVerify) {
  const std::string a = write_instance("a.json", inst_a());
  const CliResult o = run("oracle " + a);
  ASSERT_EQ(o.code, 0);
  const Json j = Json::parse(o.out);
  EXPECT_NEAR(j["lambda"].get<double>(), 1.0, 1e-9);
  const std::string sel = write_file("sel.json", o.out);
  EXPECT_EQ(run("verify " + a + " " + sel).code, 0);

  Json bad = j;
  bad["selection"]["values"]["a"][0] = 0.5;
  const CliResult v = run("verify " + a + " " + write_file("bad.json", bad.dump()));
  EXPECT_EQ(v.code, 1);
  EXPECT_FALSE(Json::parse(v.out)["pass"].get<bool>());
}

TEST(Cli, SelectionOutputReverifies) {
  const std::string b = write_instance("b.json", inst_b());
  const CliResult s = run("select " + b + " --algo iterative");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(run("verify " + b + " " + write_file("it.json", s.out)).code, 0);
}

TEST(Cli, GenDeterministic) {
  const CliResult a = run("gen --kind halfplanes --n 5 --seed 1"), b = run("gen --kind halfplanes --n 5 --seed 1");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run("gen --kind halfplanes --n 5 --seed 2").out);
  EXPECT_EQ(run("validate " + write_file("gen.json", a.out)).code, 0);
  const CliResult one = run("gen --kind polygons --n 1 --seed 3");
  EXPECT_EQ(Json::parse(one.out)["elements"].size(), 1u);
}

TEST(Cli, Errors) {
  EXPECT_EQ(run("validate /nonexistent/file.json").code, 1);
  EXPECT_NE(run("select " + write_instance("a.json", inst_a()) + " --algo bogus").code, 0);
}
