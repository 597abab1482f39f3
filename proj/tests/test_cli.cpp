#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "tropmono/cli.hpp"

using namespace tropmono;

namespace {

struct Outcome {
  int code = 0;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Outcome run(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string &rel) { return std::string(TROPMONO_DATA_DIR) + "/" + rel; }

std::string temp_file(const std::string &name, const std::string &text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

const Json *find_check(const Json &report, const std::string &prefix) {
  for (const auto &c : report.at("checks"))
    if (c.at("name").get<std::string>().rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

} // namespace

TEST(Cli, SuperformSuitePasses) {
  Outcome r = run({"check", "superform", "--n", "3", "--cases", "100", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_EQ(j.at("command"), "check superform");
  EXPECT_EQ(j.at("seed"), 7);
  EXPECT_EQ(j.at("exitCode"), 0);
  EXPECT_EQ(j.at("checks").size(), 15u);
  for (const auto &c : j.at("checks")) {
    EXPECT_EQ(c.at("status"), "pass") << c.dump();
    EXPECT_FALSE(c.contains("witness"));
  }
}

TEST(Cli, SameSeedSameBytes) {
  std::vector<std::vector<std::string>> cmds{
      {"check", "superform", "--n", "2", "--cases", "40", "--maps", "10", "--seed", "5"},
      {"simplex", "starprop", "--n", "2", "--p", "2", "--random", "5", "--points", "4", "--seed", "5"},
      {"ss", "monodromy", "--input", data("complexes/mgon5.json"), "--p", "1"},
      {"dolbeault", "--complex", data("complexes/tetra.json"), "--pres", data("presentations/tetra_p2.json")},
  };
  for (const auto &cmd : cmds) {
    Outcome a = run(cmd), b = run(cmd);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  Outcome s1 = run({"check", "superform", "--n", "2", "--cases", "40", "--seed", "1"});
  Outcome s2 = run({"check", "superform", "--n", "2", "--cases", "40", "--seed", "2"});
  EXPECT_NE(s1.out, s2.out);
}

TEST(Cli, MonodromyOnPentagon) {
  Outcome r = run({"ss", "monodromy", "--input", data("complexes/mgon5.json"), "--p", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json res = r.json().at("result");
  EXPECT_EQ(res.at("iso"), true);
  EXPECT_EQ(res.at("dims"), Json::array({1, 1}));
  Json in = r.json().at("inputs").at(0);
  EXPECT_EQ(in.at("role"), "complex");
  EXPECT_EQ(in.at("fnv1a64"), hex64(fnv1a64(read_file(data("complexes/mgon5.json")))));
}

TEST(Cli, MonodromyZeroGysinFails) {
  Outcome r = run({"ss", "monodromy", "--input", data("complexes/mgon4.json"), "--p", "1", "--h2", "zero"});
  EXPECT_EQ(r.code, 1);
  Json j = r.json();
  const Json *iso = find_check(j, "corner map");
  ASSERT_NE(iso, nullptr);
  EXPECT_EQ(iso->at("status"), "fail");
  EXPECT_NE(iso->at("witness").get<std::string>().find("dims=[4,1]"), std::string::npos);
}

TEST(Cli, StarpropFactor) {
  Outcome r = run({"simplex", "starprop", "--n", "2", "--p", "2", "--random", "5", "--points", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_EQ(j.at("result").at("factor"), "-2");
  ASSERT_NE(find_check(j, "restriction factor -2"), nullptr);
  EXPECT_EQ(find_check(j, "restriction factor -2")->at("status"), "pass");
}

TEST(Cli, E2Dims) {
  Outcome r = run({"ss", "e2", "--input", data("complexes/tetra.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json().at("result").at("dims"), Json::array({1, 0, 1}));
}

TEST(Cli, ValidateReportsWitness) {
  std::string path = data("complexes/mgon5.json");
  Outcome good = run({"ss", "validate", "--input", path, "--h2", "intersection"});
  EXPECT_EQ(good.code, 0) << good.out;
  Outcome bad = run({"ss", "validate", "--input", path, "--h2", "unit-restrict"});
  EXPECT_EQ(bad.code, 1);
  Json j = bad.json();
  const Json *c = find_check(j, "pullback/pushforward");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->at("status"), "fail");
  // the witness residual is what the library recomputes
  auto cx = complex_from_json(load_json_file(path));
  QMatrix res = relation_residual(cx, H2Model::unit(cx, true), 1);
  EXPECT_EQ(c->at("witness"), "residual=" + res.str());
  Outcome none = run({"ss", "validate", "--input", data("complexes/point.json")});
  EXPECT_EQ(none.code, 2);
}

TEST(Cli, OrdAndLadderOnDataFiles) {
  Outcome ord = run({"ord", "check", "--complex", data("complexes/mgon5.json"), "--pres", data("presentations/mgon5_cyclic.json")});
  ASSERT_EQ(ord.code, 0) << ord.err << ord.out;
  Json res = ord.json().at("result");
  EXPECT_EQ(res.at("ord").at("Y1_5"), "-1");
  EXPECT_EQ(res.at("ord").at("Y2_3"), "1");
  Outcome dol = run({"dolbeault", "--complex", data("complexes/tetra.json"), "--pres", data("presentations/tetra_p2.json")});
  ASSERT_EQ(dol.code, 0) << dol.err;
  Json d = dol.json().at("result");
  EXPECT_EQ(d.at("factor"), "-1/2");
  EXPECT_EQ(d.at("ord").at("Y1_2_3"), "5/2");
  EXPECT_EQ(d.at("deltaTheta").at("Y1_2_3"), "-5/4");
  EXPECT_EQ(dol.json().at("inputs").size(), 2u);
}

TEST(Cli, TsvFormat) {
  Outcome r = run({"ss", "e2", "--input", data("complexes/mgon3.json"), "--format", "tsv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("# command\tss e2\n", 0), 0u);
  EXPECT_NE(r.out.find("name\tstatus\tcases\twitness\n"), std::string::npos);
  EXPECT_NE(r.out.find("delta*delta*=0\tpass\t"), std::string::npos);
  EXPECT_NE(r.out.find("# result\t{"), std::string::npos);
  EXPECT_NE(r.out.find("# exit\t0\n"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check", "superform", "--format", "xml"}).code, 2);
  Outcome missing = run({"ss", "e2"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("--input"), std::string::npos);
  EXPECT_EQ(run({"ss", "e2", "--input", "/nonexistent/x.json"}).code, 2);
}

TEST(Cli, MalformedJsonReportsLineAndColumn) {
  std::string path = temp_file("broken.json", "{\n  \"components\": [\"Y1\",\n  oops]\n}\n");
  Outcome r = run({"ss", "e2", "--input", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(path + ":3:"), std::string::npos) << r.err;
}

TEST(Cli, DimensionCap) {
  ::setenv("TROPMONO_MAX_DIM", "2", 1);
  Outcome r = run({"check", "superform", "--n", "3", "--cases", "5"});
  ::unsetenv("TROPMONO_MAX_DIM");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("TROPMONO_MAX_DIM"), std::string::npos);
}

TEST(Cli, SuperformInputFile) {
  std::string path = temp_file("forms.json", R"({"n":2,"forms":[[{"dprime":[1,2],"dsecond":[],"coeff":{"[1,0]":"3"}}]]})");
  Outcome r = run({"check", "superform", "--n", "2", "--cases", "5", "--maps", "2", "--input", path});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json();
  EXPECT_NE(find_check(j, "input#0 N^p=p!J"), nullptr);
}

TEST(Cli, BinaryExitCodes) {
  std::string bin = TROPMONO_CLI_PATH;
  std::string ok = bin + " ss monodromy --input " + data("complexes/mgon3.json") + " --p 1 > /dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(ok.c_str())), 0);
  std::string fail = bin + " ss monodromy --input " + data("complexes/mgon3.json") + " --p 1 --h2 zero > /dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(fail.c_str())), 1);
  std::string usage = bin + " nonsense > /dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(usage.c_str())), 2);
}
