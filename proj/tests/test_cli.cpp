#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "malle/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "malle");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = malle::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kFixture = std::string(MALLE_SOURCE_DIR) + "/data/census_fixture.txt";

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("malle_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "delta-table"));
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"invariants", "--d", "3"}).code, 2);
  EXPECT_EQ(run({"invariants", "--d", "x", "--A", "C2"}).code, 2);
  EXPECT_EQ(run({"invariants", "--d", "3", "--A", "C2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify-lemmas", "--dmax", "9"}).code, 2);
  EXPECT_EQ(run({"census", "--dataset", "/nonexistent", "--d", "3", "--A", "C2", "--X", "10"}).code, 2);
}

TEST(Cli, DomainErrorsExitOne) {
  const auto r = run({"invariants", "--d", "3", "--A", "D4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "error"));
  EXPECT_EQ(run({"delta-table", "--d", "3", "--A", "C4"}).code, 1);
  EXPECT_EQ(run({"tail-bound", "--d", "6", "--A", "C2"}).code, 1);
  EXPECT_EQ(run({"tail-bound", "--d", "3", "--A", "C2", "--epsilon", "-1/2"}).code, 1);
  EXPECT_EQ(run({"compose", "--dataset", kFixture, "--F", "nope", "--K", "2.0.4.1"}).code, 1);
}

TEST(Cli, Invariants) {
  const auto r = run({"invariants", "--d", "3", "--A", "C2", "--format", "tsv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "exponent\t1/2\n"));
  EXPECT_TRUE(contains(r.out, "b\t1\n"));
  EXPECT_TRUE(contains(r.out, "minimal_classes\t((12), 0)\n"));
}

TEST(Cli, DeltaTableMatchesGolden) {
  const auto r = run({"delta-table", "--d", "3", "--A", "C3", "--format", "tsv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "splitting_F\tsplitting_FK\tgenerator\tv_disc_F\tv_disc_FK\tdelta\n"));
  EXPECT_TRUE(contains(r.out, "(1^3)\t(1^3 1^3 1^3), (3^3)\t(123)\t2\t6\t6\n")) << r.out;
  const auto text = run({"delta-table", "--d", "3", "--A", "C3"});
  EXPECT_EQ(text.code, 0);
  EXPECT_TRUE(contains(text.out, "Discriminant valuations"));
}

TEST(Cli, VerifyLemmas) {
  const auto r = run({"verify-lemmas", "--dmax", "4", "--amax", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "all properties hold"));
  EXPECT_FALSE(contains(r.out, "FAIL"));
}

TEST(Cli, TailBound) {
  const auto r = run({"tail-bound", "--d", "3", "--A", "C2", "--format", "tsv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "beta\t-499/1000\n"));
  EXPECT_TRUE(contains(r.out, "argmax\t((12), 1)\n"));
  EXPECT_TRUE(contains(r.out, "m\t5\n"));
  const auto zero = run({"tail-bound", "--d", "3", "--A", "C2", "--preset", "zero", "--format", "tsv"});
  EXPECT_TRUE(contains(zero.out, "beta\t-1/2\n"));
  const auto all = run({"tail-bound", "--d", "3", "--A", "C2", "--scope", "all", "--format", "tsv"});
  EXPECT_TRUE(contains(all.out, "((), 1)")) << all.out;
}

TEST(Cli, Census) {
  const auto r = run({"census", "--dataset", kFixture, "--d", "3", "--A", "C2", "--X", "10^5", "--X", "10^7",
                      "--Y", "31", "--format", "tsv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "X\tN\tN_Y(Y=31)\tflagged_wild"));
  EXPECT_TRUE(contains(r.out, "\n100000\t"));
  EXPECT_TRUE(contains(r.err, "warning: X=10000000"));
  EXPECT_EQ(run({"census", "--dataset", kFixture, "--d", "3", "--A", "C2", "--X", "100", "--Y", "5"}).code, 1);
}

TEST(Cli, Compose) {
  const auto r = run({"compose", "--dataset", kFixture, "--F", "3.1.23.1", "--K", "2.0.4.1", "--format", "tsv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "disc_FK\t33856\n"));
  EXPECT_TRUE(contains(r.out, "linearly_disjoint\tyes\n"));
  const auto wild = run({"compose", "--dataset", kFixture, "--F", "3.1.44.1", "--K", "2.0.4.1", "--format", "tsv"});
  ASSERT_EQ(wild.code, 0);
  EXPECT_TRUE(contains(wild.out, "disc_FK\tunresolved\n"));
  const auto ov = temp_file("overrides.txt", "pair 3.1.44.1 2.0.4.1 2 3\n");
  const auto fixed = run({"compose", "--dataset", kFixture, "--F", "3.1.44.1", "--K", "2.0.4.1", "--wild-overrides",
                          ov, "--format", "tsv"});
  EXPECT_TRUE(contains(fixed.out, "disc_FK\t15488\n")) << fixed.out;
}

TEST(Cli, Uniformity) {
  const auto spec = temp_file("uniformity.txt", "# classes Q r\n2.1 1 0\n3 1 0\n");
  const auto r = run({"uniformity", "--dataset", kFixture, "--d", "3", "--uniformity-spec", spec, "--X", "1000",
                      "--format", "tsv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "X\tfields\tcount\tratio\n"));
  const auto bad = temp_file("uniformity_bad.txt", "2.1 1 0\n2.1 2 0\n");
  EXPECT_EQ(run({"uniformity", "--dataset", kFixture, "--d", "3", "--uniformity-spec", bad, "--X", "1000"}).code, 1);
}
