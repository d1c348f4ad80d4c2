#include "cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = agslice::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST(Cli, MemberNilpotent) {
  const CliRun r = run({"member", "--n", "2", "--lambda", "[2]", "--matrix", R"([["0","1"],["0","0"]])"});
  EXPECT_EQ(r.code, 0);
  const json d = r.doc();
  EXPECT_EQ(d["version"], "v1");
  EXPECT_EQ(d["seed"], 0);
  EXPECT_TRUE(d["result"]["member"].get<bool>());
}

TEST(Cli, MemberDiagonalNamesDeterminant) {
  const CliRun r = run({"member", "--n", "2", "--lambda", "2", "--matrix", R"([["1","0"],["0","-1"]])"});
  EXPECT_EQ(r.code, 1);
  const json v = r.doc()["result"]["violations"];
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0]["kind"], "char-poly");
  EXPECT_EQ(v[0]["s"], 2);
  EXPECT_EQ(v[0]["value"], "-1/1");
}

TEST(Cli, InputErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"member", "--n", "2", "--lambda", "2", "--matrix", "[[1,0],[0"},
           {"member", "--n", "3", "--lambda", "2", "--matrix", "[[1]]"},
           {"member", "--n", "2", "--lambda", "2", "--matrix", R"([["1","0","0"],["0","1","0"],["0","0","1"]])"},
           {"member", "--n", "2", "--lambda", "x", "--matrix", "[[0,0],[0,0]]"},
           {"member", "--n", "2", "--lambda", "0", "--matrix", "[[0,0],[0,0]]"},
           {"iso", "verify", "--lambda", "2,2", "--matrix", "[[1]]"},
           {"poisson", "bracket", "--n", "2", "--a", "1,2", "--b", "2,1,1"},
           {"poisson", "bracket", "--n", "2", "--a", "1,2,1", "--b", "2,1,1", "--form", "other"},
           {"orbit", "closure", "--partition", "2,1", "--other", "2"},
           {"selftest", "--n-max", "9"},
           {"nonsense"},
           {}}) {
    const CliRun r = run(args);
    EXPECT_EQ(r.code, 2) << r.out;
    EXPECT_TRUE(r.doc().contains("error")) << r.out;
  }
}

TEST(Cli, SampleIsReproducible) {
  const CliRun a = run({"orbit", "sample", "--partition", "2,2", "--seed", "11"});
  const CliRun b = run({"orbit", "sample", "--partition", "2,2", "--seed", "11"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.doc()["seed"], 11);
  const std::string m = a.doc()["result"]["matrix"].dump();
  const CliRun t = run({"orbit", "type", "--matrix", m});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.doc()["result"]["jordan_type"], json::parse("[2,2]"));
}

TEST(Cli, EmbedSampledAndGiven) {
  const CliRun a = run({"iso", "embed", "--lambda", "2,2", "--seed", "5"});
  ASSERT_EQ(a.code, 0) << a.out;
  const json res = a.doc()["result"];
  EXPECT_EQ(res["k"], 2);
  EXPECT_EQ(res["image"].size(), 6u);
  // feed g back in, and the image through verify with mu = 2 w_3 in SL_6
  const CliRun b = run({"iso", "embed", "--lambda", "2,2", "--matrix", res["g"].dump()});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.doc()["result"]["image"], res["image"]);
  const json tau = run({"coweight", "--lambda", "2,2"}).doc()["result"]["tau"];
  EXPECT_EQ(tau, json::parse("[2,2,0,0,0]"));
  const CliRun c = run({"iso", "verify", "--lambda", "2,2,0,0,0", "--mu", "0,0,2,0,0", "--matrix", res["image"].dump()});
  EXPECT_EQ(c.code, 0) << c.out;
  const CliRun d = run({"iso", "verify", "--lambda", "2,2", "--matrix", R"([["1","0","0"],["0","1","0"],["0","0","1"]])"});
  EXPECT_EQ(d.code, 0);
}

TEST(Cli, VerifyReportsFailedMinor) {
  const json g = json::parse(R"([[{"shift":0,"coeffs":{"0":"1","1":"1"}},"0"],["0",{"shift":0,"coeffs":{"0":"1","1":"-1"}}]])");
  const CliRun r = run({"iso", "verify", "--lambda", "2", "--matrix", g.dump()});
  EXPECT_EQ(r.code, 1);
  const json f = r.doc()["result"]["failures"];
  ASSERT_FALSE(f.empty());
  EXPECT_EQ(f[0]["j"], 2);
}

TEST(Cli, PoissonCommands) {
  const CliRun b = run({"poisson", "bracket", "--n", "2", "--a", "1,2,1", "--b", "2,1,1"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.doc()["result"]["bracket"],
            json::parse(R"([{"coeff":"1/1","monomial":{"d_1_1_1":1}},{"coeff":"-1/1","monomial":{"d_2_2_1":1}}])"));
  const CliRun k = run({"poisson", "bracket", "--n", "2", "--a", "1,2,1", "--b", "2,1,1", "--form", "killing"});
  EXPECT_EQ(k.doc()["result"]["bracket"][0]["coeff"], "1/4");
  const CliRun j = run({"poisson", "jacobi", "--n", "2", "--max-order", "1"});
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(j.doc()["result"]["holds"].get<bool>());
  const CliRun v = run({"poisson", "vanishing", "--lambda", "2", "--samples", "5", "--seed", "3"});
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(v.doc()["result"]["negative_control"]["found"].get<bool>());
  EXPECT_EQ(v.out, run({"poisson", "vanishing", "--lambda", "2", "--samples", "5", "--seed", "3"}).out);
}

TEST(Cli, CoweightAndGenerators) {
  const CliRun c = run({"coweight", "--lambda", "3,0"});
  EXPECT_EQ(c.code, 0);
  const json r = c.doc()["result"];
  EXPECT_EQ(r["m"], json::parse(R"(["1/1","2/1"])"));
  EXPECT_EQ(r["orbit_type"], json::parse("[3]"));
  const CliRun g = run({"ideal-gens", "--lambda", "3,0"});
  EXPECT_EQ(g.doc()["result"]["u0"].size(), 3u);
  const CliRun w = run({"weyman", "generators", "--lambda", "1,1"});
  EXPECT_EQ(w.code, 0);
  const CliRun h = run({"weyman", "hwv-check", "--n", "4"});
  EXPECT_EQ(h.code, 0);
  const CliRun d = run({"weyman", "dims", "--n", "2", "--k", "1", "--p", "1"});
  EXPECT_EQ(d.doc()["result"]["dim_w"], 4);
  const CliRun i = run({"iso", "inequalities", "--lambda", "2,2"});
  EXPECT_EQ(i.code, 0);
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "agslice_out.json";
  const CliRun r = run({"orbit", "closure", "--partition", "3", "--other", "2,1", "--out", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_FALSE(json::parse(ss.str())["result"]["a_in_closure_of_b"].get<bool>());
  std::remove(path.c_str());
}

TEST(Cli, SelftestIsByteIdentical) {
  const CliRun a = run({"selftest", "--n-max", "3", "--seed", "2"});
  const CliRun b = run({"selftest", "--n-max", "3", "--seed", "2"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(a.doc()["result"]["all_pass"].get<bool>());
  EXPECT_EQ(a.doc()["result"]["criteria"].size(), 8u);
  EXPECT_NE(a.err.find("PASS [8]"), std::string::npos);
}
