#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using otype::cli::run_command;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const char* name) { return std::string(OTYPE_SAMPLES_DIR) + "/" + name; }

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST(Cli, AnalyzeKlein) {
  auto r = run({"analyze", "-f", sample("klein.pres")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "right: RightOType")) << r.out;
  EXPECT_TRUE(contains(r.out, "delta = aa central")) << r.out;
  EXPECT_TRUE(contains(r.out, "O-type: yes")) << r.out;
}

TEST(Cli, AnalyzeJson) {
  auto r = run({"analyze", "--json", "-f", sample("b3.pres")});
  ASSERT_EQ(r.code, 0);
  auto j = otype::json::parse(r.out);
  EXPECT_EQ(j["otype"], true);
  EXPECT_EQ(j["right"]["certificate"]["kind"], "QuasiCentral");
}

TEST(Cli, SignWordProblemFraction) {
  auto s = run({"sign", "-f", sample("b3.pres"), "-w", "b^-1 a"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.substr(0, 3), "> 1");
  auto n = run({"sign", "-f", sample("b3.pres"), "-w", "a^-1 b"});
  EXPECT_EQ(n.out.substr(0, 3), "< 1");
  auto w = run({"wp", "-f", sample("b3.pres"), "-w", "a^-1 b a^2 b"});
  EXPECT_EQ(w.code, 0);
  EXPECT_EQ(w.out.substr(0, 3), "= 1");
  auto x = run({"wp", "-f", sample("b3.pres"), "-w", "a^-1 b"});
  EXPECT_EQ(x.out.substr(0, 4), "!= 1");
  auto f = run({"fraction", "--pres", "gens: a b; rel: a = b a a b", "-w", "b^-1 a"});
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.out.substr(0, 5), "a a b") << f.out;
}

TEST(Cli, UncertifiedSignNeedsForce) {
  auto r = run({"sign", "-f", sample("bs.pres"), "-w", "b^-1 a"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err + r.out, "--force"));
  auto forced = run({"wp", "--force", "-f", sample("bs.pres"), "-w", "a^-1 b a b^2"});
  EXPECT_EQ(forced.code, 0);
  EXPECT_TRUE(contains(forced.out, "forced")) << forced.out;
}

TEST(Cli, ReverseTrace) {
  auto r = run({"reverse", "--trace", "--pres", "gens: a b c; rel: a = b a b; rel: b = c b c", "-w", "a^-1 c^-1 a"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "1: a^-1 [c^-1 a]  -> relation (c, a)")) << r.out;
  EXPECT_TRUE(contains(r.out, "2: [a^-1 b] c a b  -> relation (a, b)")) << r.out;
  EXPECT_TRUE(contains(r.out, "cycle:")) << r.out;
}

TEST(Cli, ReverseWitnessTrace) {
  auto r = run({"reverse", "--trace", "-f", sample("cyclic_witness.pres"), "-w", "a^-2 b a^2 b a"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "(10 steps)")) << r.out;
  EXPECT_TRUE(contains(r.out, "\n10: ")) << r.out;
  EXPECT_FALSE(contains(r.out, "\n11: ")) << r.out;
  EXPECT_TRUE(contains(r.out, "reverses in 10 steps")) << r.out;
}

TEST(Cli, ReverseEmptyTraceIsHeaderOnly) {
  auto r = run({"reverse", "--trace", "-f", sample("b3.pres"), "-w", "eps"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "(0 steps)")) << r.out;
  EXPECT_FALSE(contains(r.out, "1: ")) << r.out;
}

TEST(Cli, ReverseBudget) {
  auto r = run({"reverse", "--max-steps", "10", "-f", sample("bs.pres"), "-w", "a^-6 b a^6"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, LeftReverse) {
  auto r = run({"reverse", "--left", "-f", sample("b3.pres"), "-w", "a b^-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "baa")) << r.out;
}

TEST(Cli, Ceiling) {
  auto r = run({"ceiling", "-f", sample("three_gen.pres")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "period: bbaa")) << r.out;
  auto c = run({"ceiling", "-f", sample("cycling.pres")});
  EXPECT_TRUE(contains(c.out, "period: ba")) << c.out;
}

TEST(Cli, Parse) {
  auto r = run({"parse", "-f", sample("three_gen.pres")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "completed: a = c b a a c")) << r.out;
  auto j = run({"parse", "--json", "--pres", "gens: a b c; rel: c = a b; rel: c = b a"});
  EXPECT_EQ(otype::json::parse(j.out)["right_triangular"], false);
}

TEST(Cli, Families) {
  auto r = run({"family", "torus_knot", "2", "1", "2", "--json"});
  ASSERT_EQ(r.code, 0);
  auto j = otype::json::parse(r.out);
  EXPECT_EQ(j["delta_kind"], "quasi-central");
  auto check = run({"family", "three_gen", "1", "1", "2", "1", "--check"});
  EXPECT_EQ(check.code, 0) << check.out;
  auto dir = std::filesystem::temp_directory_path() / "otype_cli_family";
  std::filesystem::remove_all(dir);
  auto wrote = run({"family", "cycling", "4", "--out", dir.string()});
  EXPECT_EQ(wrote.code, 0);
  std::size_t files = 0;
  for ([[maybe_unused]] auto& e : std::filesystem::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 2u);
  std::filesystem::remove_all(dir);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"family", "nope"}).code, 2);
  EXPECT_EQ(run({"family", "torus_knot", "0", "1", "1"}).code, 2);
  EXPECT_EQ(run({"analyze", "--pres", "gens: a; rel: a ="}).code, 2);
  EXPECT_EQ(run({"sign", "-f", sample("b3.pres"), "-w", "a d"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"analyze", "-f", "/nonexistent/file.pres"}).code, 2);
}

TEST(Cli, CensusSmall) {
  auto dir = std::filesystem::temp_directory_path() / "otype_cli_census";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string jsonl = (dir / "report.jsonl").string(), csv = (dir / "s.csv").string();
  auto r = run({"census", "--max-len", "3", "--out", jsonl, "--csv", csv});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find(" (")), "8 / 0 / 7") << r.out;
  std::ifstream in(jsonl);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) {
    auto j = otype::json::parse(line);
    EXPECT_EQ(j["index"], lines);
    ++lines;
  }
  EXPECT_EQ(lines, 15u);
  auto again = run({"census", "--max-len", "3", "--out", jsonl, "--resume"});
  EXPECT_EQ(again.out, r.out);
  std::filesystem::remove_all(dir);
}

TEST(Cli, EnvironmentBudgets) {
  ::setenv("OTYPE_MAX_STEPS", "10", 1);
  auto r = run({"reverse", "-f", sample("bs.pres"), "-w", "a^-6 b a^6"});
  EXPECT_EQ(r.code, 1);
  auto flag = run({"reverse", "--max-steps", "100000", "-f", sample("bs.pres"), "-w", "a^-6 b a^6"});
  EXPECT_EQ(flag.code, 0);
  ::unsetenv("OTYPE_MAX_STEPS");
}
