#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace monocert::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "monocert");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("monocert_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST(CliParsing, Region) {
  const Region r = parse_region("-pi:pi:-1:2.5");
  EXPECT_EQ(r.xmin, -std::numbers::pi);
  EXPECT_EQ(r.xmax, std::numbers::pi);
  EXPECT_EQ(r.ymin, -1.0);
  EXPECT_EQ(r.ymax, 2.5);
  EXPECT_ANY_THROW(parse_region("0:1:0"));
  EXPECT_ANY_THROW(parse_region("1:0:0:1"));
  EXPECT_ANY_THROW(parse_region("a:1:0:1"));
}

TEST(CliParsing, GridPointInterval) {
  EXPECT_EQ(parse_grid("129x65"), (GridSpec{129, 65}));
  EXPECT_ANY_THROW(parse_grid("1x5"));
  EXPECT_ANY_THROW(parse_grid("12"));
  EXPECT_EQ(parse_point("pi,-0.5"), (Vec2{std::numbers::pi, -0.5}));
  EXPECT_EQ(parse_interval("-2:2"), (std::pair<double, double>{-2, 2}));
}

TEST_F(CliTest, CertifyMonotoneFPlus) {
  const Result r = run_cli({"certify", "monotone", "--op", "fplus", "--region", "-pi:pi:-pi:pi",
                            "--grid", "129x129", "--json", path("out.json")});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  const auto j = nlohmann::json::parse(slurp(dir_ / "out.json"));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["pass"], true);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST_F(CliTest, CertifyGradientFPlusFails) {
  const Result r = run_cli({"certify", "gradient", "--op", "fplus", "--csv", path("m.csv")});
  EXPECT_EQ(r.code, kCheckFailed);
  EXPECT_NE(r.out.find("max_abs_asymmetry=2 "), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("at (0, 0)"), std::string::npos) << r.out;
  const std::string csv = slurp(dir_ / "m.csv");
  EXPECT_EQ(csv.rfind("x,y,metric\n", 0), 0u);
}

TEST_F(CliTest, Counterexample) {
  const Result r = run_cli({"counterexample", "--u", "sin(x)*sin(y)", "--json", path("cert.json"),
                            "--csv-dir", path("stages")});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  const auto j = nlohmann::json::parse(slurp(dir_ / "cert.json"));
  EXPECT_EQ(j["verdict"], "counterexample certified");
  EXPECT_EQ(j["kind"], "counterexample_certificate");
  EXPECT_TRUE(fs::exists(dir_ / "stages" / "potential_sum.csv"));
  EXPECT_EQ(run_cli({"counterexample", "--u", "0"}).code, kCheckFailed);
}

TEST_F(CliTest, IdenticalRunsAreByteIdentical) {
  const std::vector<std::string> base = {"certify", "monotone", "--u", "0.2*cos(x)*sin(2*y)",
                                         "--seed", "42", "--pairs", "2000"};
  auto with = [&](const std::string& out, const std::string& threads) {
    auto a = base;
    a.insert(a.end(), {"--json", path(out), "--threads", threads});
    return a;
  };
  ASSERT_EQ(run_cli(with("a.json", "1")).code, kSuccess);
  ASSERT_EQ(run_cli(with("b.json", "1")).code, kSuccess);
  ASSERT_EQ(run_cli(with("c.json", "3")).code, kSuccess);
  EXPECT_EQ(slurp(dir_ / "a.json"), slurp(dir_ / "b.json"));
  EXPECT_EQ(slurp(dir_ / "a.json"), slurp(dir_ / "c.json"));
}

TEST_F(CliTest, Eval) {
  const Result r = run_cli({"eval", "--op", "fplus", "--at", "0,0"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "value 0 0\njacobian 1 1 -1 1\n");
  const Result s = run_cli({"eval", "--f", "x^2 + y^2", "--kind", "gradient", "--at", "1,-2"});
  EXPECT_EQ(s.out, "value 2 -4\njacobian 2 0 0 2\n");
}

TEST_F(CliTest, RefuteAndFitAndReconstruct) {
  EXPECT_EQ(run_cli({"refute-skew", "--op", "fplus", "--a-range", "-2:2"}).code, kSuccess);
  EXPECT_EQ(run_cli({"refute-skew", "--f", "x*y", "--kind", "gradient"}).code, kCheckFailed);
  EXPECT_EQ(run_cli({"fit-skew", "--op", "identity", "--grid", "17x17"}).code, kSuccess);
  EXPECT_EQ(run_cli({"reconstruct", "--op", "sum", "--json", path("p.json")}).code, kSuccess);
  EXPECT_EQ(run_cli({"reconstruct", "--op", "fplus"}).code, kCheckFailed);
}

TEST_F(CliTest, Solve) {
  const Result r = run_cli({"solve", "--op", "fplus", "--z0", "1,1", "--csv", path("t.csv")});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(slurp(dir_ / "t.csv").rfind("k,x,y,residual\n1,1,1,", 0), std::string::npos);
  EXPECT_EQ(slurp(dir_ / "t.csv").rfind("k,x,y,residual\n0,1,1,", 0), 0u);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"certify", "monotone"}).code, kUsage);
  EXPECT_EQ(run_cli({"certify", "monotone", "--op", "fplus", "--u", "x"}).code, kUsage);
  EXPECT_EQ(run_cli({"certify", "monotone", "--f", "x +* y", "--kind", "saddle"}).code, kUsage);
  EXPECT_EQ(run_cli({"certify", "monotone", "--op", "fplus", "--grid", "1x1"}).code, kUsage);
  EXPECT_EQ(run_cli({"certify", "convex", "--op", "sum"}).code, kUsage);
  EXPECT_EQ(run_cli({"certify", "monotone", "--f", "1/x", "--kind", "gradient", "--region",
                     "-1:1:-1:1", "--grid", "3x3"})
                .code,
            kIndeterminate);
  EXPECT_EQ(run_cli({"eval", "--f", "1/x", "--kind", "gradient", "--at", "0,0"}).code,
            kIndeterminate);
  EXPECT_EQ(run_cli({"--help"}).code, kSuccess);
}

}  // namespace
}  // namespace monocert::cli
