#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CountFussCatalan) {
  const auto r = run({"count", "--what", "fc", "--n", "2", "--r", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4\n");
}

TEST(Cli, Kreweras) {
  const auto r = run({"map", "--fn", "kreweras", "--input", "136/2/4/5/78", "--n", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "17/23/456/8\n");
}

TEST(Cli, YangBaxterPasses) {
  const auto r = run({"verify", "--what", "ybe", "--samples", "100", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("ybe 100/100 pass", 0), 0u);
}

TEST(Cli, VerificationReportIsReproducible) {
  const std::vector<std::string> args = {"verify", "--what", "re", "--samples", "5", "--seed", "3", "--format", "json"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["result"].size(), 4u);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["result"][0]["samples"][0].count("params"), 1u);
}

TEST(Cli, DefaultSeedIsFixed) {
  const auto a = run({"verify", "--what", "normalization", "--samples", "4"});
  const auto b = run({"verify", "--what", "normalization", "--samples", "4", "--seed", std::to_string(fc::cli::kDefaultSeed)});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count"}).code, 2);
  EXPECT_EQ(run({"count", "--what", "nothing", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"map", "--fn", "kreweras", "--input", "13/24"}).code, 2);
  const auto r = run({"act", "--algebra", "xx", "--word", "E1", "--state", "1/2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, FailedVerificationExitsOne) {
  const auto r = run({"verify", "--what", "dims", "--m", "3", "--r", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("dim(both) = K m=3 r=1: 84 vs 78 FAIL"), std::string::npos);
}

TEST(Cli, MapExamples) {
  EXPECT_EQ(run({"map", "--fn", "xi", "--input", "URURRR"}).out, "URRURR\n");
  EXPECT_EQ(run({"map", "--fn", "kappa", "--input", "[1/2/3/4;14/23;1234]"}).out, "URUURRURRRRRRRRR\n");
  EXPECT_EQ(run({"map", "--fn", "kappa-inv", "--input", "URU^2R^8"}).out, "[1/2/3;13/2;123]\n");
  EXPECT_EQ(run({"map", "--fn", "psi-inv", "--input", "URUURURR"}).out, "12/3/4\n");
  const auto psi = run({"map", "--fn", "psi", "--input", "12/3/4"});
  EXPECT_NE(psi.out.find("URUURURR"), std::string::npos);
  const auto tiling = run({"map", "--fn", "tiling", "--input", "[14/23;1234]"});
  EXPECT_NE(tiling.out.find("UUUURUUURRRURRRR"), std::string::npos);
}

TEST(Cli, ActExamples) {
  EXPECT_EQ(run({"act", "--algebra", "2bfc", "--word", "E0", "--state", "13456/2/7"}).out, "1'/2/3456'/7\n");
  EXPECT_EQ(run({"act", "--algebra", "tl", "--word", "E5", "--state", "1/2/3"}).out, "13/2\n");
  EXPECT_EQ(run({"act", "--algebra", "fc", "--word", "E1^1", "--state", "[1/2;1/2]"}).out, "[1/2;12]\n");
  const auto d = run({"act", "--algebra", "fc", "--word", "E1^2", "--state", "[1/2;1/2]", "--diagram", "--format", "json"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(nlohmann::json::parse(d.out)["result"].size(), 1u);
}

TEST(Cli, EnumerateJsonRoundTrips) {
  const auto r = run({"enumerate", "primed", "--n", "3", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"].size(), 8u);
  EXPECT_EQ(run({"count", "--what", "V", "--n", "2", "--r", "2"}).out, "9\n");
  EXPECT_EQ(run({"count", "--what", "snc", "--n", "4", "--epsilon", "1"}).out, "6\n");
}
