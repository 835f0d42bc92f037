#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  CliRun r;
  std::string cmd = std::string(QSP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, PairInfoAI2) {
  CliRun r = run("pair-info AI --n 2");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["sigma_type"], "A2");
  EXPECT_EQ(j["a"]["1"], "q^4");
  EXPECT_EQ(j["g"]["1"], "q^2");
}

TEST(Cli, PairInfoCsv) {
  CliRun r = run("pair-info BI --n 4 --r 2 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2,5,"), std::string::npos);
  EXPECT_NE(r.out.find("q^5"), std::string::npos);
}

TEST(Cli, PolyRankOne) {
  CliRun r = run("poly AI --n 1 --lambda 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(q^4 + 1)/(q^4 + q^2 + 1)"), std::string::npos);
  EXPECT_NE(r.out.find("q^6 + q^{-4}"), std::string::npos);
}

TEST(Cli, PolyExplicitParameters) {
  CliRun r = run("poly --sigma A1 --a q^4 --g 1 --lambda 4");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["coefficients"].size(), 1u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("pair-info AI --n 0").code, 2);
  EXPECT_EQ(run("pair-info NOPE").code, 2);
  EXPECT_EQ(run("poly AI --n 2 --lambda 1").code, 2);
  EXPECT_EQ(run("verify no-such-suite").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, CapRefusal) {
  CliRun r = run("poly EVIII --lambda 1,0,0,0,0,0,0,0");
  EXPECT_EQ(r.code, 3);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["error"]["kind"], "cap");
}

TEST(Cli, VerifySuites) {
  CliRun r = run("verify identities");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "pass");
  EXPECT_EQ(run("verify involution --format text").code, 0);
}

TEST(Cli, VerifyIsDeterministic) {
  CliRun a = run("verify eigen --workers 1 --seed 0");
  CliRun b = run("verify eigen --workers 3 --seed 4242");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
