#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "jvoa_cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = jvoa::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VermaReport) {
  const auto o = invoke({"verma", "--N", "3", "--r", "3"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto doc = json::parse(o.out);
  EXPECT_EQ(doc["command"], "verma");
  EXPECT_EQ(doc["version"], JVOA_VERSION);
  EXPECT_EQ(doc["config"]["seed"], 7);
  EXPECT_EQ(doc["result"]["verdict"], "Simple");
  EXPECT_EQ(doc["result"]["pairings"].size(), 3u);

  const auto four = json::parse(invoke({"verma", "--N", "4", "--r", "3"}).out);
  EXPECT_EQ(four["result"]["verdict"], "ReducibleWitness");
  EXPECT_EQ(four["result"]["witness"], "eps2+eps4");
  EXPECT_EQ(json::parse(invoke({"verma", "--N", "2", "--r", "1"}).out)["result"]["verdict"], "InconclusiveIrregular");
}

TEST(Cli, InvalidConfigurations) {
  EXPECT_EQ(invoke({"gram", "--family", "C", "--dim", "2"}).code, 2);
  EXPECT_EQ(invoke({"gram", "--family", "C", "--dim", "5"}).code, 2);
  EXPECT_EQ(invoke({"verma", "--r", "symbolic"}).code, 2);
  EXPECT_EQ(invoke({"verma", "--N", "1", "--r", "1/2"}).code, 2);
  EXPECT_EQ(invoke({"gram", "--r", "1/0"}).code, 2);
  EXPECT_EQ(invoke({"fermion-compare", "--family", "B", "--dim", "3"}).code, 2);
  EXPECT_EQ(invoke({"span-check", "--dim", "2", "--allow-dim-2"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"gram", "--format", "xml"}).code, 2);
  const auto o = invoke({"gram", "--dim", "2"});
  EXPECT_TRUE(o.out.empty());
  EXPECT_FALSE(o.err.empty());
}

TEST(Cli, HelpAndVersion) {
  EXPECT_EQ(invoke({"--help"}).code, 0);
  const auto v = invoke({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find(JVOA_VERSION), std::string::npos);
}

TEST(Cli, DimensionTwoOverride) {
  const auto o = invoke({"graded-dim", "--dim", "2", "--allow-dim-2", "--max-degree", "3"});
  EXPECT_EQ(o.code, 0) << o.err;
}

TEST(Cli, ByteIdenticalRuns) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"borcherds-check", "--samples", "20", "--seed", "99"},
        std::vector<std::string>{"jordan-check", "--family", "B", "--dim", "3", "--seed", "5"},
        std::vector<std::string>{"gram", "--degree", "3", "--at", "1", "--at", "-2", "--format", "csv"}}) {
    const auto a = invoke(args), b = invoke(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
  const auto s1 = invoke({"borcherds-check", "--samples", "20", "--seed", "1"});
  const auto s2 = invoke({"borcherds-check", "--samples", "20", "--seed", "2"});
  EXPECT_NE(json::parse(s1.out)["config"], json::parse(s2.out)["config"]);
}

TEST(Cli, GramReport) {
  const auto doc = json::parse(invoke({"gram", "--degree", "2", "--r", "1/2"}).out);
  EXPECT_EQ(doc["result"]["det"], "r^6");
  EXPECT_EQ(doc["result"]["integer_roots"], json::array({"0"}));
  EXPECT_EQ(doc["result"]["ranks"][0]["rank"], 6);
  const auto four = json::parse(invoke({"gram", "--degree", "4", "--at", "1"}).out);
  EXPECT_EQ(four["result"]["dimension"], 43);
  EXPECT_EQ(four["result"]["integer_roots"], json::array({"-2", "0", "1"}));
  EXPECT_EQ(four["result"]["ranks"][0]["radical"], 20);
}

TEST(Cli, CsvQuoting) {
  const auto o = invoke({"griess", "--format", "csv"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.out.substr(0, o.out.find("\r\n")), "x,y,x(1)y,jordan");
  // labels such as L[psi1,psi2] carry commas and must be quoted
  EXPECT_NE(o.out.find("\"L[psi1,psi2]\""), std::string::npos);
  const auto g = invoke({"graded-dim", "--max-degree", "4", "--format", "csv"});
  EXPECT_EQ(g.out, "degree,count\r\n0,1\r\n1,0\r\n2,6\r\n3,16\r\n4,43\r\n");
}

TEST(Cli, FermionCompareTable) {
  const auto o = invoke({"fermion-compare", "--dim", "4", "--max-degree", "4", "--format", "csv"});
  ASSERT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("degree,pbw_dim,even_dim,image_dim,kernel_dim\r\n"), std::string::npos);
  EXPECT_NE(o.out.find("\r\n4,43,"), std::string::npos);
  EXPECT_NE(o.out.find(",23,20\r\n"), std::string::npos);
}

TEST(Cli, CheckVerbsPass) {
  for (const std::vector<std::string>& args : {
           std::vector<std::string>{"jordan-check"},
           std::vector<std::string>{"griess", "--family", "B", "--dim", "3"},
           std::vector<std::string>{"locality"},
           std::vector<std::string>{"lemma1-check", "--max-degree", "1", "--samples", "10"},
           std::vector<std::string>{"binom-det", "--N", "5", "--tmin", "-2", "--tmax", "2"},
           std::vector<std::string>{"central-charge", "--dim", "6", "--r", "1"},
           std::vector<std::string>{"span-check", "--max-degree", "3"},
       }) {
    const auto o = invoke(args);
    EXPECT_EQ(o.code, 0) << args[0] << ": " << o.err;
    EXPECT_TRUE(json::parse(o.out)["passed"].get<bool>()) << args[0];
  }
  const auto cc = json::parse(invoke({"central-charge", "--dim", "6", "--r", "1"}).out);
  EXPECT_EQ(cc["result"]["c"], "-6*r");
  EXPECT_EQ(cc["result"]["c_at_r"], "-6/1");
  EXPECT_EQ(invoke({"binom-det", "--tmin", "2", "--tmax", "1"}).code, 2);
}
