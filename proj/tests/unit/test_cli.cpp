#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "manifest.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = superschur::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GoldenOutputs) {
  const auto cases = golden::read_manifest(SUPERSCHUR_GOLDEN_DIR);
  ASSERT_FALSE(cases.empty());
  for (const auto& c : cases) {
    const Result r = invoke(c.args);
    EXPECT_EQ(r.code, c.exit_code) << c.name << ": " << r.err;
    EXPECT_EQ(r.out, golden::read_file(std::string(SUPERSCHUR_GOLDEN_DIR) + "/" + c.name + ".out")) << c.name;
    if (c.exit_code != 0) EXPECT_FALSE(r.err.empty()) << c.name;
  }
}

TEST(Cli, RepeatedRunsAreIdentical) {
  const std::vector<std::string> args{"verify", "jacobi-trudi", "--m", "2", "--n", "1", "--window", "2", "--seed", "9"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, HelpAndUsage) {
  EXPECT_EQ(invoke({"--help"}).code, superschur::cli::ok);
  EXPECT_EQ(invoke({}).code, superschur::cli::usage);
  EXPECT_EQ(invoke({"gen", "--m", "1"}).code, superschur::cli::usage);
  EXPECT_EQ(invoke({"verify", "kac", "--window", "wide"}).code, superschur::cli::usage);
}

TEST(Cli, NegativeValuesParse) {
  const Result r = invoke({"euler", "--m", "2", "--n", "0", "--lambda", "-1,-1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "x1^-1*x2^-1\n");
}
