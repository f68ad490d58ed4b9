#include <gtest/gtest.h>

#include <filesystem>

#include "common.hpp"

using dl::test::run_dl;

namespace {

std::string theory(const char* name) { return std::string(DL_THEORY_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("dl_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, InferDbird) {
  const auto r = run_dl("infer " + theory("dbird.dl"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("+d flies_tweety\n"), std::string::npos);
  EXPECT_NE(r.out.find("-d flies_ethel\n"), std::string::npos);
}

TEST(Cli, EnginesPrintIdenticalOutput) {
  const auto linear = run_dl("infer " + theory("dbird.dl") + " --all");
  for (const char* engine : {"transition", "oracle"}) {
    const auto other = run_dl("infer " + theory("dbird.dl") + " --all --engine " + engine);
    EXPECT_EQ(other.exit_code, 0);
    EXPECT_EQ(other.out, linear.out) << engine;
  }
}

TEST(Cli, Queries) {
  const auto r = run_dl("infer " + theory("dbird.dl") + " --queries flies_tweety,~flies_ethel");
  EXPECT_EQ(r.out, "-D flies_tweety\n+d flies_tweety\n-D ~flies_ethel\n-d ~flies_ethel\n");
}

TEST(Cli, ExtendedAndResidue) {
  const auto r = run_dl("infer " + theory("loop.dl") + " --extended --residue");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("-s ~p\n"), std::string::npos);
  EXPECT_NE(r.out.find("# residue\nr: p -> p.\n"), std::string::npos);
}

TEST(Cli, CheckCyclicIsInvalid) {
  EXPECT_EQ(run_dl("check " + theory("cyc.dl")).exit_code, 3);
  EXPECT_EQ(run_dl("check " + theory("dbird.dl")).exit_code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_dl("check " + temp_file("syntax.dl", "a =>")).exit_code, 2);
  EXPECT_EQ(run_dl("check " + temp_file("dup.dl", "r: => a. r: => b.")).exit_code, 3);
  EXPECT_EQ(run_dl("check /nonexistent/file.dl").exit_code, 1);
  EXPECT_EQ(run_dl("frobnicate").exit_code, 1);
  EXPECT_EQ(run_dl("infer " + theory("dbird.dl") + " --engine quantum").exit_code, 1);
}

TEST(Cli, Diff) {
  const auto r = run_dl("diff " + theory("dbird.dl"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "3 engines agree (restricted to \xCE\xA3)\n");
  EXPECT_EQ(run_dl("diff --seed-corpus 50").exit_code, 0);
}

TEST(Cli, TransformStages) {
  const auto r = run_dl("transform " + temp_file("ten.dl", "r1: => p. r2: => ~p. r1 > r2.") + " --stage nosup");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("r1__over__r2__s1: ~infp__r1 => infp__r2.\n"), std::string::npos);
  const auto out = (std::filesystem::temp_directory_path() / "dl_cli_engine.dl").string();
  EXPECT_EQ(run_dl("transform " + theory("dbird.dl") + " -o " + out).exit_code, 0);
  // Generated names are reserved, so re-reading needs the opt-in flag.
  EXPECT_EQ(run_dl("check " + out).exit_code, 3);
  EXPECT_EQ(run_dl("--allow-reserved check " + out).exit_code, 0);
}

TEST(Cli, GenRoundTripsThroughCheck) {
  for (const char* kind : {"chain", "circle", "tree", "teams", "dag", "random"}) {
    const auto out = (std::filesystem::temp_directory_path() / (std::string("dl_cli_gen_") + kind)).string();
    ASSERT_EQ(run_dl(std::string("gen ") + kind + " --size 3 --seed 9 -o " + out).exit_code, 0) << kind;
    EXPECT_EQ(run_dl("check " + out).exit_code, 0) << kind;
  }
  EXPECT_EQ(run_dl("gen chain --size 0").exit_code, 1);
}

TEST(Cli, BenchJson) {
  const auto r = run_dl("bench --kinds chain --sizes 100,200 --repeat 1 --json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("\"schema\": \"dl-bench/1\""), std::string::npos);
}
