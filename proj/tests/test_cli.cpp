#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(HUMBERT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST(Cli, ComputeDelta5Text) {
  CliRun r = run("compute --config 5,1 --format text");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("delta: 5"), std::string::npos);
  EXPECT_NE(r.out.find("equation: "), std::string::npos);
}

TEST(Cli, ComputeJsonIsByteIdentical) {
  CliRun a = run("compute --config 9,0b --set a2=2 --set a3=5 --format json");
  CliRun b = run("compute --config 9,0b --set a2=2 --set a3=5 --format json");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["config"], "(9,0)b");
  EXPECT_EQ(j["specialization"]["a3"], "5");
}

TEST(Cli, BipartiteExitsWithDegenerateCode) {
  EXPECT_EQ(run("compute --config 9,0a --set a3=5").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("graphs --degree 7").code, 1);
  EXPECT_EQ(run("compute --config 5,1 --set a3=1").code, 1);
  EXPECT_EQ(run("compute --config 5,1 --set a3=1/0").code, 1);
  EXPECT_EQ(run("compute --config 12,9").code, 1);
  EXPECT_EQ(run("compute --config 9,0b").code, 1);
  EXPECT_EQ(run("verify nosuchsuite").code, 1);
  EXPECT_EQ(run("").code, 1);
}

TEST(Cli, GraphsCensus) {
  CliRun r = run("graphs --degree 3");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["classes"].size(), 9u);
  CliRun c = run("graphs --degree 2");
  EXPECT_NE(c.out.find("\"(4,2)\""), std::string::npos);
}

TEST(Cli, VerifySuitesReport) {
  CliRun r = run("verify pencil12 --trials 20 --seed 7");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["counters"]["twelve"], 20);
  EXPECT_EQ(run("verify census").code, 0);
}

TEST(Cli, BudgetExitCode) {
  // A zero budget refuses every interpolation grid.
  std::string cmd = std::string("HUMBERT_MEM_BUDGET_MB=0 ") + HUMBERT_CLI_PATH +
                    " compute --config 3,3 --set a3=5 >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 3);
}
