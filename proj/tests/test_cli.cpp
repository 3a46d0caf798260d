#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(RSENTROPY_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& file) { return std::string(RSENTROPY_TEST_DATA) + "/" + file; }

}  // namespace

TEST(Cli, AnalyzePeriodDoubling) {
  const auto r = run("analyze " + data("rpd.sub") + " --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["entropy"]["certificate"], "closed-form-disjoint");
  EXPECT_NEAR(j["entropy"]["value"].get<double>(), 2.0 / 3.0 * std::log(2.0), 1e-11);
}

TEST(Cli, AnalyzeIsDeterministic) {
  const auto a = run("analyze " + data("rf.sub"));
  const auto b = run("analyze " + data("rf.sub"));
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CatalogueThueMorse) {
  const auto r = run("catalogue random-thue-morse --max-level 5 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n5,0.251772"), std::string::npos);
  EXPECT_NE(r.out.find(",0.259893753275"), std::string::npos);
}

TEST(Cli, ValidateExitCodes) {
  EXPECT_EQ(run("validate " + data("rf.sub")).code, 0);
  EXPECT_EQ(run("validate " + data("bad.sub")).code, 1);
  EXPECT_EQ(run("validate " + data("syntax.sub")).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("analyze").code, 2);
  EXPECT_EQ(run("catalogue no-such-example").code, 2);
  EXPECT_EQ(run("analyze " + data("missing.sub")).code, 2);
  EXPECT_EQ(run("analyze " + data("rf.sub") + " --format xml").code, 2);
}

TEST(Cli, Language) {
  const auto r = run("language " + data("rf.sub") + " --length 2");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["words"], nlohmann::json::array({"aa", "ab", "ba", "bb"}));
}

TEST(Cli, AnalyzeWithGeometryAndLanguage) {
  const auto r = run("analyze " + data("rpd.sub") + " --psi 1,2 --language 3");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["geometric"]["value"].get<double>(), 0.5 * std::log(2.0), 1e-11);
  EXPECT_EQ(j["language"]["rows"].size(), 3u);
  EXPECT_EQ(run("analyze " + data("rpd.sub") + " --psi 1,-2").code, 2);
  EXPECT_EQ(run("analyze " + data("rpd.sub") + " --format text").code, 0);
}
