#include <gtest/gtest.h>

#include "shortroots/errors.hpp"
#include "shortroots/verify.hpp"

using namespace shortroots;

namespace {

RootSystem make(const char* s) { return RootSystem::build(parseSpec(s)); }

VerificationReport run(const char* type, std::vector<std::string> only = {}) {
  VerifyOptions opts;
  opts.only = std::move(only);
  return runChecks(make(type), opts);
}

}  // namespace

TEST(Verify, RegistryIsSortedAndUnique) {
  const auto& reg = checkRegistry();
  EXPECT_EQ(reg.size(), 14u);
  for (std::size_t i = 1; i < reg.size(); ++i) EXPECT_LT(reg[i - 1].id, reg[i].id);
  for (const auto& c : reg) EXPECT_FALSE(c.title.empty()) << c.id;
}

TEST(Verify, AllPassOnSmallSystems) {
  for (const char* t : {"G2", "B3", "C3", "F4"}) {
    const VerificationReport r = run(t);
    EXPECT_TRUE(r.allPassed()) << t;
    EXPECT_EQ(r.count(CheckStatus::Pass), checkRegistry().size()) << t;
    for (const auto& c : r.checks) {
      EXPECT_EQ(c.status, CheckStatus::Pass) << t << " " << c.id << ": " << c.reason << " " << c.details.dump();
      EXPECT_FALSE(c.elapsedMs.has_value());
    }
  }
}

TEST(Verify, ResultsSortedById) {
  const VerificationReport r = run("G2", {"table1", "prop2.1", "eq2.1"});
  ASSERT_EQ(r.checks.size(), 3u);
  EXPECT_EQ(r.checks[0].id, "eq2.1");
  EXPECT_EQ(r.checks[1].id, "prop2.1");
  EXPECT_EQ(r.checks[2].id, "table1");
}

TEST(Verify, CapPolicySkipsWithReason) {
  const VerificationReport r = run("B6", {"prop2.1"});
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks[0].status, CheckStatus::Skipped);
  EXPECT_NE(r.checks[0].reason.find("1152"), std::string::npos) << r.checks[0].reason;
  EXPECT_TRUE(r.allPassed());
}

TEST(Verify, SimplyLacedSkipsEverything) {
  const VerificationReport r = run("A3");
  EXPECT_EQ(r.count(CheckStatus::Skipped), checkRegistry().size());
  for (const auto& c : r.checks) EXPECT_FALSE(c.reason.empty());
}

TEST(Verify, UnknownIdListsValidIds) {
  try {
    run("G2", {"prop9.9"});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("prop9.9"), std::string::npos);
    for (const auto& c : checkRegistry()) EXPECT_NE(msg.find(c.id), std::string::npos) << c.id;
  }
}

TEST(Verify, TimingIsOptIn) {
  VerifyOptions opts;
  opts.only = {"table1"};
  opts.timing = true;
  const VerificationReport r = runChecks(make("G2"), opts);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_TRUE(r.checks[0].elapsedMs.has_value());
}

TEST(Verify, LimitsComeFromOptions) {
  VerifyOptions opts;
  opts.only = {"prop2.1", "sec5.2"};
  opts.limits.maxWeylOrder = 8;
  const VerificationReport r = runChecks(make("G2"), opts);
  for (const auto& c : r.checks) EXPECT_EQ(c.status, CheckStatus::Skipped) << c.id;
}
