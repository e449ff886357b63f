#include <gramface/cli.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace gramface;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gramface");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, MTableRows) {
  const auto r = run({"mtable", "--n", "3..6", "--d", "2", "--k", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,d,k,m\n3,2,1,3\n4,2,1,4\n5,2,1,5\n6,2,1,6\n");
}

TEST(Cli, MTableZeroCodimension) {
  const auto r = run({"mtable", "--n", "2", "--d", "2", "--k", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,d,k,m\n2,2,0,0\n");
}

TEST(Cli, MTableCheckAgainstReference) {
  const auto r = run({"mtable", "--n", "3", "--d", "2..9", "--k", "1..9", "--check-paper", "--format", "markdown"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("72 cells compared, 0 mismatches"), std::string::npos);
  EXPECT_NE(r.out.find("| k \\ d |"), std::string::npos);
}

TEST(Cli, MTableIncomplete) {
  const auto r = run({"mtable", "--n", "6", "--d", "9", "--k", "9", "--budget", "0.000000001"});
  EXPECT_EQ(r.code, kExitIncomplete);
  EXPECT_EQ(r.out, "n,d,k,m\n6,9,9,?\n");
}

TEST(Cli, MTableUsageErrors) {
  EXPECT_EQ(run({"mtable", "--n", "0..3"}).code, kExitUsage);
  EXPECT_EQ(run({"mtable", "--n", "x"}).code, kExitUsage);
  EXPECT_EQ(run({"mtable", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
}

TEST(Cli, SpaceReports) {
  const auto a = temp_file("gramface_cli_a.json", R"({"n": 3, "d": 2, "complement_monomials": []})");
  const auto r0 = run({"space", a});
  EXPECT_EQ(r0.code, 0);
  EXPECT_NE(r0.out.find("codim U^2 = 0"), std::string::npos);

  // (x1^2 + x2^2)^perp
  const auto b = temp_file("gramface_cli_b.json",
                           R"({"n": 3, "d": 2, "generators": [{"x1^2": "1", "x2^2": "-1"}, {"x1*x2": "1"}, {"x1*x3": "1"}, {"x2*x3": "1"}, {"x3^2": "1"}]})");
  const auto r1 = run({"space", b});
  EXPECT_EQ(r1.code, 0);
  EXPECT_NE(r1.out.find("codim U^2 = 2"), std::string::npos);
  EXPECT_NE(r1.out.find("dim U = 5"), std::string::npos);

  const auto c = temp_file("gramface_cli_c.json", R"({"n": 4, "d": 3, "complement_monomials": ["x1^3"]})");
  const auto r2 = run({"space", c});
  EXPECT_NE(r2.out.find("codim U^2 = 4"), std::string::npos);
  EXPECT_NE(r2.out.find("has-base-points"), std::string::npos);

  const auto e = temp_file("gramface_cli_e.json", R"({"n": 2, "d": 2, "generators": []})");
  const auto r3 = run({"space", e});
  EXPECT_NE(r3.out.find("dim U = 0"), std::string::npos);
  EXPECT_NE(r3.out.find("codim U = 3"), std::string::npos);

  const auto bad = temp_file("gramface_cli_bad.json", "{\n \"n\": 2,\n \"d\": 2,\n \"generators\": [ }\n");
  const auto r4 = run({"space", bad});
  EXPECT_EQ(r4.code, kExitUsage);
  EXPECT_NE(r4.err.find("line 4"), std::string::npos);
}

TEST(Cli, Macaulay) {
  EXPECT_EQ(run({"macaulay", "rep", "5", "2"}).out, "C(3,2) + C(2,1)\n");
  EXPECT_EQ(run({"macaulay", "growth", "6", "2"}).out, "10\n");
  EXPECT_EQ(run({"macaulay", "green", "3", "4"}).out, "0\n");
  EXPECT_EQ(run({"macaulay", "shift", "5", "2", "0", "0"}).out, "5\n");
  EXPECT_NE(run({"macaulay", "gotzmann", "3", "4", "2"}).out.find("maximal growth: yes"), std::string::npos);
  EXPECT_EQ(run({"macaulay", "shift", "1", "3", "1", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"macaulay", "rep", "-4", "2"}).code, kExitUsage);
}

TEST(Cli, EnumerateStable) {
  EXPECT_EQ(run({"enumerate-ss", "--n", "2", "--d", "2", "--k", "1"}).out, "{x1^2}  codim U^2 = 2\n");
  EXPECT_EQ(run({"enumerate-ss", "--n", "3", "--d", "3", "--k", "0", "--count"}).out, "1\n");
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "codim1-bp", "--n", "4", "--d", "3", "--trials", "20", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("passed 20, failed 0"), std::string::npos);
  const auto u = run({"verify", "nonsense"});
  EXPECT_EQ(u.code, kExitUsage);
  EXPECT_NE(u.err.find("codim1-bpf"), std::string::npos);
  EXPECT_EQ(run({"verify", "quotient-generic", "--n", "3", "--d", "2", "--k", "7"}).code, kExitUsage);
  const auto list = run({"verify", "list"});
  EXPECT_NE(list.out.find("gin-counting"), std::string::npos);
}

TEST(Cli, VerifyRecordsAreJobIndependent) {
  const auto a = run({"verify", "deg-reduction", "--n", "3", "--d", "4", "--k", "2", "--trials", "8", "--format", "records"});
  const auto b = run({"verify", "deg-reduction", "--n", "3", "--d", "4", "--k", "2", "--trials", "8", "--format", "records", "--jobs", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 8);
}

TEST(Cli, Conjecture) {
  const auto r = run({"conjecture", "--k-max", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("match"), std::string::npos);
}
