#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rsum/errors.hpp"
#include "rsum_cli/cli.hpp"
#include "rsum_cli/literal.hpp"

using namespace rsum;
using rsum::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Literal, Grammar) {
  auto f = cli::parse_family_literal("{0,1,2}x3");
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[2].size(), 3u);
  f = cli::parse_family_literal(" { 0 , -1 } ; {(1,2),(3,4)} ");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0][1], (cli::RawPoint{-1}));
  EXPECT_EQ(f[1][1], (cli::RawPoint{3, 4}));
  EXPECT_THROW(cli::parse_family_literal(""), InputError);
  EXPECT_THROW(cli::parse_family_literal("{0,1"), InputError);
  EXPECT_THROW(cli::parse_family_literal("{0,1}}"), InputError);
  EXPECT_THROW(cli::parse_family_literal("{a}"), InputError);
  EXPECT_THROW(cli::parse_family_literal("{0}x0"), InputError);
  EXPECT_EQ(cli::parse_range("3"), (std::pair<std::int64_t, std::int64_t>{3, 3}));
  EXPECT_EQ(cli::parse_range("2:5"), (std::pair<std::int64_t, std::int64_t>{2, 5}));
  EXPECT_THROW(cli::parse_range("2:"), InputError);
}

TEST(Cli, EnumerateExamples) {
  auto r = call({"enumerate", "--kind", "linear", "--zp", "7", "{0,1,2};{0,1,2};{0,1,2}"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("elements: {1,2,3,4,5}"), std::string::npos);
  EXPECT_NE(r.out.find("cardinality: 5"), std::string::npos);
  r = call({"enumerate", "--kind", "cyclic", "--int", "{0,1};{0,1};{0,1}"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("elements: {}"), std::string::npos);
  EXPECT_NE(r.out.find("cardinality: 0"), std::string::npos);
  r = call({"enumerate", "--kind", "distinct", "--int", "{0,1,2}x3", "--oracle"});
  EXPECT_NE(r.out.find("elements: {3}"), std::string::npos);
  EXPECT_NE(r.out.find("oracle: agrees"), std::string::npos);
  r = call({"enumerate", "--int", "--dim", "2", "--format", "jsonl", "{(0,0),(1,0)};{(0,0),(0,1)}"});
  EXPECT_EQ(r.out,
            R"j({"domain":"Z^2","kind":"linear","family":"{(0,0),(1,0)};{(0,0),(0,1)}","elements":["(0,1)","(1,0)","(1,1)"],"cardinality":3})j"
            "\n");
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(call({"enumerate", "--zp", "7", "{0,1"}).code, 2);
  EXPECT_EQ(call({"enumerate", "--zp", "8", "{0,1}"}).code, 2);
  EXPECT_EQ(call({"enumerate", "--zp", "7", "--int", "{0,1}"}).code, 2);
  EXPECT_EQ(call({"enumerate", "--int", "--kind", "circular", "{0,1}"}).code, 2);
  EXPECT_EQ(call({"enumerate", "--int", "{(0,1)}"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, Identities) {
  const auto r = call({"identities", "--n-max", "8", "--coeff-n-max", "6", "--k-max", "3", "--samples", "20"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("identity checks pass"), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(call({"verify", "--theorem", "three-set", "--zp", "5"}).code, 0);
  EXPECT_EQ(call({"verify", "--theorem", "corollary", "--zp", "7"}).code, 0);
  EXPECT_EQ(call({"verify", "--theorem", "odd-linear", "--zp", "7", "{0,1,2}x3"}).code, 0);
  const auto bad = call({"verify", "--theorem", "conjecture", "--int", "{0,1,2};{0,2};{0,1,2}"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("violated"), std::string::npos);
  const auto eq = call({"verify", "--theorem", "equality", "--int", "--kind", "cyclic", "{0,1,5}x5"});
  EXPECT_EQ(eq.code, 0);
  EXPECT_NE(eq.out.find("exceptional-k3n5"), std::string::npos);
  EXPECT_EQ(call({"verify", "--theorem", "equality", "--int", "--n", "4", "{0,2,4}"}).code, 0);
  EXPECT_EQ(call({"verify", "--theorem", "nonsense", "--zp", "5"}).code, 2);
  EXPECT_EQ(call({"verify", "--theorem", "three-set", "--zp", "7", "--cap", "10"}).code, 3);
}

TEST(Cli, SweepSkipsOutOfRangeN) {
  const auto r = call({"sweep", "--zp", "5", "--n", "1", "--kind", "cyclic"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("verdict":"skipped")"), std::string::npos);
  EXPECT_NE(r.out.find(R"("summary":true)"), std::string::npos);
}

TEST(Cli, SweepReportsAreByteIdentical) {
  const auto dir = std::filesystem::temp_directory_path() / "rsum_cli_test";
  std::filesystem::remove_all(dir);
  ::setenv("RSUM_OUTPUT_DIR", dir.c_str(), 1);
  const std::vector<std::string> base{"sweep", "--zp", "11", "--n", "3:4", "--sizes", "3:4", "--cap", "200",
                                      "--seed", "42"};
  auto a = base, b = base;
  a.insert(a.end(), {"--out", "a.jsonl"});
  b.insert(b.end(), {"--out", "b.jsonl", "--threads", "2"});
  const auto ra = call(a), rb = call(b);
  ::unsetenv("RSUM_OUTPUT_DIR");
  EXPECT_EQ(ra.code, 0) << ra.err;
  EXPECT_EQ(rb.code, 0) << rb.err;
  const auto fa = slurp(dir / "a.jsonl"), fb = slurp(dir / "b.jsonl");
  EXPECT_FALSE(fa.empty());
  EXPECT_EQ(fa, fb);
  std::filesystem::remove_all(dir);
}

TEST(Cli, SweepLimitIsAResourceStop) {
  EXPECT_EQ(call({"sweep", "--zp", "7", "--n", "3", "--limit", "5"}).code, 3);
}
