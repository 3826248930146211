#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>

#include "shortroots/verify.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" SHORTROOTS_CLI_PATH "' " + args + " 2>&1";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json(const CliResult& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, InfoG2) {
  const CliResult r = cli("info G2 --json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json(r);
  EXPECT_EQ(j["schemaVersion"], 1);
  EXPECT_EQ(j["system"]["family"], "G");
  EXPECT_EQ(j["system"]["rank"], 2);
  EXPECT_EQ(j["h"], 6);
  EXPECT_EQ(j["littleAdjoint"]["dim"], 7);
  EXPECT_EQ(j["simpleReduction"]["type"], "A1");
  EXPECT_EQ(j["simpleReduction"]["transitionFactor"], 3);
  const CliResult text = cli("info G2");
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("theta_s"), std::string::npos);
}

TEST(Cli, InfoC5) {
  const auto j = json(cli("info C5 --json"));
  EXPECT_EQ(j["littleAdjoint"]["dim"], 44);
  EXPECT_EQ(j["simpleReduction"]["type"], "A4");
  EXPECT_EQ(j["simpleReduction"]["hS"], 5);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("info Z9").code, 2);
  EXPECT_EQ(cli("info").code, 2);
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate G2").code, 2);
  EXPECT_EQ(cli("nullcone-char G2").code, 2);
  EXPECT_EQ(cli("nullcone-char G2 --max-degree -1").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, VerifyPasses) {
  for (const char* t : {"G2", "F4"}) {
    const CliResult r = cli(std::string("verify ") + t + " --json");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = json(r);
    EXPECT_EQ(j["summary"]["fail"], 0);
    EXPECT_EQ(j["summary"]["pass"], shortroots::checkRegistry().size());
    for (const auto& c : j["checks"]) {
      EXPECT_EQ(c["status"], "pass");
      EXPECT_TRUE(c.contains("details"));
      EXPECT_FALSE(c.contains("elapsedMs"));
    }
  }
}

TEST(Cli, VerifyFilterAndSkip) {
  const CliResult r = cli("verify B6 --check prop2.1 --json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json(r);
  ASSERT_EQ(j["checks"].size(), 1u);
  EXPECT_EQ(j["checks"][0]["status"], "skipped");
  EXPECT_TRUE(j["checks"][0].contains("reason"));

  const CliResult bad = cli("verify G2 --check nosuch");
  EXPECT_EQ(bad.code, 2);
  for (const auto& c : shortroots::checkRegistry()) EXPECT_NE(bad.out.find(c.id), std::string::npos) << c.id;
}

TEST(Cli, EnvironmentOverridesCaps) {
  const auto j = json(cli("verify G2 --check prop2.1 --json", "SHORTROOTS_MAX_W=4"));
  EXPECT_EQ(j["checks"][0]["status"], "skipped");
  EXPECT_EQ(cli("info G2", "SHORTROOTS_MAX_W=abc").code, 2);
  EXPECT_EQ(cli("nullcone-char G2 --max-degree 9").code, 2);
  EXPECT_EQ(cli("nullcone-char G2 --max-degree 9", "SHORTROOTS_MAX_DEGREE=9").code, 0);
}

TEST(Cli, Table1) {
  const CliResult r = cli("table1 --json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json(r);
  ASSERT_EQ(j["rows"].size(), 12u);
  bool sawG2 = false, sawTwin = false;
  for (const auto& row : j["rows"]) {
    if (row["type"] == "G2") {
      sawG2 = true;
      EXPECT_EQ(row["dimLittleAdjoint"], 7);
      EXPECT_EQ(row["h"], 6);
      EXPECT_EQ(row["subType"], "A1");
      EXPECT_EQ(row["hS"], 2);
      EXPECT_EQ(row["orbitCount"], 2);
      EXPECT_EQ(row["tildeG"], "so_8");
    }
    if (row["type"] == "B2") sawTwin = row.value("isomorphicTo", "") == "C2";
  }
  EXPECT_TRUE(sawG2);
  EXPECT_TRUE(sawTwin);
  EXPECT_EQ(cli("table1").code, 0);
}

TEST(Cli, Antichains) {
  const auto j = json(cli("antichains F4 --json"));
  EXPECT_EQ(j["bruteForceCount"], 21);
  EXPECT_EQ(j["formulaK"]["num"], 21);
  EXPECT_EQ(j["formulaK"]["den"], 1);
  EXPECT_EQ(j["altFormulaK"]["num"], 21);
  const auto g = json(cli("antichains G2 --list --json"));
  EXPECT_TRUE(g["altFormulaK"].is_null());
  EXPECT_EQ(g["antichains"].size(), 4u);
  EXPECT_EQ(cli("antichains E6").code, 0);
}

TEST(Cli, NullconeCharacter) {
  for (const char* args : {"G2 --max-degree 6", "B2 --max-degree 8", "F4 --max-degree 2"}) {
    const CliResult r = cli(std::string("nullcone-char ") + args + " --json");
    ASSERT_EQ(r.code, 0) << args << "\n" << r.out;
    const auto j = json(r);
    EXPECT_TRUE(j["hilbert"]["passed"].get<bool>()) << args;
    EXPECT_TRUE(j["hilbert"]["computed"].contains("truncation"));
    EXPECT_EQ(j["hilbert"]["computed"], j["hilbert"]["expected"]);
  }
  const auto g = json(cli("nullcone-char G2 --max-degree 3 --json"));
  EXPECT_EQ(g["truncation"], 3);
  EXPECT_EQ(g["entries"].size(), 4u);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* args : {"verify F4 --json", "verify C4", "table1 --json", "nullcone-char C3 --max-degree 4 --json",
                           "antichains C4 --list --json", "info B5 --json"}) {
    const CliResult a = cli(args), b = cli(args);
    EXPECT_EQ(a.code, b.code) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}
