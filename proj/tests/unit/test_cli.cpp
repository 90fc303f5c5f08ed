#include <gtest/gtest.h>

#include "cli.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = so3zi::cli::run(args, o, e);
  return {c, o.str(), e.str()};
}

using json = nlohmann::json;

}  // namespace

TEST(Cli, Member) {
  Out a = run({"member", R"({"a":"1","b":"1+1i","c":"0","d":"1"})"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "member, i=0, delta=0\n");
  Out b = run({"member", R"({"a":"1","b":"1","c":"0","d":"1"})"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out, "not a member\n");
  Out c = run({"member", R"({"a":{"a":"1i","b":"0","k":1},"b":{"a":"1","b":"0","k":1},"c":{"a":"1i","b":"0","k":1},"d":{"a":"3","b":"0","k":1}})"});
  EXPECT_EQ(c.out, "member, i=2, delta=0\n");
  Out d = run({"member", "--json", R"({"a":{"a":"0","b":"-1i","k":0},"b":"0","c":"0","d":{"a":"0","b":"-1i","k":1}})"});
  EXPECT_EQ(d.code, 0);
}

TEST(Cli, MemberReal) {
  Out a = run({"member-real", R"({"a":1,"b":-1,"c":1,"d":1,"sqrt2_pow":1})"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "member, delta=1\n");
  EXPECT_EQ(run({"member-real", R"({"a":1,"b":1,"c":0,"d":1})"}).out, "not a member\n");
}

TEST(Cli, Hecke) {
  Out a = run({"hecke", R"({"a":"1","b":"5","c":"0","d":"2"})"});
  ASSERT_EQ(a.code, 0);
  json j = json::parse(a.out);
  EXPECT_EQ(j["m"], "1");
  EXPECT_EQ(j["x"], "1");
  EXPECT_EQ(j["xi"]["b"], "2");
  EXPECT_EQ(run({"hecke", R"({"a":"1","b":"2","c":"2","d":"4"})"}).code, 1);
}

TEST(Cli, Cosets) {
  Out a = run({"cosets"});
  ASSERT_EQ(a.code, 0);
  json j = json::parse(a.out);
  ASSERT_EQ(j.size(), 6u);
  std::vector<std::string> labels;
  for (auto& e : j) {
    std::string l = std::to_string(e["label"]["i"].get<int>()) + std::to_string(e["label"]["delta"].get<int>());
    if (e["label"].contains("epsilon")) l += std::to_string(e["label"]["epsilon"].get<int>());
    labels.push_back(l);
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"00", "01", "200", "201", "210", "211"}));
}

TEST(Cli, Reduce) {
  Out a = run({"reduce", "--domain", "gamma-h3", "--point", "1,0,0.1", "--self-check"});
  ASSERT_EQ(a.code, 0) << a.err;
  json j = json::parse(a.out);
  EXPECT_EQ(j["self_check"], true);
  EXPECT_NEAR(j["point"]["y"].get<double>(), 20.0, 1e-9);
  EXPECT_EQ(j["region"], "boundary");
  Out b = run({"reduce", "--domain", "gamma-int-h2", "--point", "0.3,0.05", "--self-check"});
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(run({"reduce", "--domain", "gamma-h3", "--point", "1,0"}).code, 1);
  EXPECT_EQ(run({"reduce", "--domain", "mars", "--point", "1,0,1"}).code, 1);
  EXPECT_EQ(run({"reduce", "--domain", "gamma-h3", "--point", "1,0,-1"}).code, 1);
  EXPECT_EQ(run({"reduce", "--domain", "gamma-h3", "--point", "0.3,0.1,1e-6", "--cap", "1"}).code, 2);
}

TEST(Cli, DomainCsv) {
  Out a = run({"domain", "--kind", "gamma-h3", "--emit-boundary", "5"});
  ASSERT_EQ(a.code, 0);
  std::istringstream in(a.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x1,x2,y");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 5);
  EXPECT_EQ(run({"domain", "--kind", "gamma-h3", "--emit-boundary", "0"}).code, 1);
}

TEST(Cli, Volume) {
  Out a = run({"volume", "--kind", "gamma-int-h2"});
  ASSERT_EQ(a.code, 0);
  json j = json::parse(a.out);
  EXPECT_EQ(j["domain"], "gamma-int-h2");
  EXPECT_NEAR(j["volume"].get<double>(), 1.570796, 1e-6);
  Out b = run({"volume"});
  ASSERT_EQ(b.code, 0);
  json k = json::parse(b.out);
  EXPECT_TRUE(k.contains("zeta_qi_2"));
  EXPECT_TRUE(k.contains("V2"));
  EXPECT_TRUE(k.contains("covol_gamma"));
}

TEST(Cli, Zeta) {
  Out a = run({"zeta", "--s", "3", "--tol", "1e-6"});
  ASSERT_EQ(a.code, 0);
  json j = json::parse(a.out);
  EXPECT_LE(j["tail_bound"].get<double>(), 1e-6);
  EXPECT_EQ(run({"zeta", "--s", "1"}).code, 1);
}

TEST(Cli, BadInput) {
  Out a = run({"member", "{oops"});
  EXPECT_EQ(a.code, 1);
  EXPECT_NE(a.err.find("malformed JSON"), std::string::npos);
  EXPECT_EQ(a.out, "");
  EXPECT_EQ(run({"member", R"({"a":"1"})"}).code, 1);
  EXPECT_EQ(run({"member", R"({"a":"x","b":"0","c":"0","d":"1"})"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"reduce", "--domain", "picard-h3", "--point", "0.3,0.2,0.4"};
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_EQ(run({"cosets"}).out, run({"cosets"}).out);
}
