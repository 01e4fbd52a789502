#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "zetacat/cli.hpp"

namespace zc = zetacat;
using zc::json_io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string sample(const std::string& name) { return std::string(ZETACAT_SAMPLES_DIR) + "/" + name; }

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = zc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return zc::json_io::parse(r.out, "output");
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("zetacat_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, WeqOfDessinCayleyGraphs) {
  const auto r = run({"weq", sample("cal_d0.json"), sample("cal_d1.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("weakly equivalent: true"), std::string::npos);
  const auto j = run_json({"weq", sample("cal_d0.json"), sample("cal_d1.json")});
  EXPECT_EQ(j["reciprocals"][0], Json::array({1, -2}));
}

TEST(Cli, WeqNegativeVerdictExitsOne) {
  const auto r = run({"weq", sample("c1.json"), sample("c3.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("weakly equivalent: false"), std::string::npos);
}

TEST(Cli, ZetaOfLoop) {
  const auto j = run_json({"zeta", sample("c1.json"), "--terms", "5"});
  EXPECT_EQ(j["series"]["coeffs"], Json::array({1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(j["reciprocal"], Json::array({1, -1}));
}

TEST(Cli, FormatFlagAfterVerb) {
  const auto r = run({"zeta", sample("c1.json"), "--terms", "2", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(zc::json_io::parse(r.out, "output")["series"]["coeffs"], Json::array({1, 1, 1}));
}

TEST(Cli, CoveringOfFolding) {
  const auto r = run({"covering", sample("folding.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("covering: false"), std::string::npos);
  const auto j = run_json({"covering", sample("folding.json")}, 1);
  EXPECT_EQ(j["failures"][0]["node"], "v1");
  EXPECT_EQ(j["failures"][0]["image"], "u1");
  EXPECT_EQ(j["failures"][0]["injective"], false);
  const auto cover = run_json({"covering", sample("double_cover.json")});
  EXPECT_EQ(cover["covering"], true);
  EXPECT_EQ(cover["degree"], 2);
}

TEST(Cli, MalformedJsonReportsPosition) {
  const auto r = run({"validate", sample("malformed.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("malformed JSON at byte"), std::string::npos);
  EXPECT_NE(r.err.find("malformed.json"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"zeta", sample("c1.json"), "--terms", "0"}).code, 2);
  EXPECT_EQ(run({"demo", "no-such-demo"}).code, 2);
  EXPECT_EQ(run({"zeta", sample("missing.json")}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "zeta", sample("c1.json")}).code, 2);
  // Undirected input to a directed verb is an input error.
  EXPECT_EQ(run({"zeta", sample("triangle.json")}).code, 2);
}

TEST(Cli, ValidateReportsDiagnostics) {
  const auto bad = temp_file("dangling.json", R"({"flavor":"directed","nodes":["x"],"arcs":[{"id":"a","src":"x","tgt":"y"}]})");
  const auto j = run_json({"validate", bad}, 1);
  EXPECT_EQ(j["valid"], false);
  EXPECT_EQ(j["diagnostics"][0]["kind"], "dangling target");
  EXPECT_EQ(run_json({"validate", sample("petersen.json")})["valid"], true);
}

TEST(Cli, IharaAndBass) {
  const auto j = run_json({"ihara", sample("triangle.json"), "--terms", "6"});
  EXPECT_EQ(j["reciprocal"], Json::array({1, 0, 0, -2, 0, 0, 1}));
  EXPECT_EQ(j["bass"]["holds"], true);
  const auto loops = run_json({"ihara", sample("eight.json"), "--terms", "3"});
  EXPECT_TRUE(loops["reciprocal"].is_null());
  EXPECT_EQ(loops["series"]["order"], 3);
}

TEST(Cli, Homcount) {
  EXPECT_EQ(run_json({"homcount", sample("b2.json"), "--cycle", "3"})["homs"], 8);
  const auto k4 = run_json({"homcount", sample("k4.json"), "--cycle", "3"});
  EXPECT_EQ(k4["nb_cycles"], 24);
  EXPECT_EQ(k4["trace"], 24);
  EXPECT_EQ(run_json({"homcount", sample("c6.json"), "--cycle", "6"})["homs"], 6);
}

TEST(Cli, CofibMultiplicitiesAndProfile) {
  const auto j = run_json({"cofib", sample("b2.json"), "--max", "4"});
  EXPECT_EQ(j["multiplicities"], Json::array({2, 1, 2, 3}));
  const auto profile = run_json({"cofib", sample("c6.json"), sample("c3.json"), "--max", "6"});
  ASSERT_EQ(profile["hom_profile"].size(), 1u);
  EXPECT_EQ(profile["hom_profile"][0]["maps"], 3);
  EXPECT_EQ(run_json({"cofib", sample("f1_cycle.json")})["cofibrant"], true);
  EXPECT_EQ(run_json({"cofib", sample("d0.json")}, 1)["cofibrant"], false);
}

TEST(Cli, Coloring) {
  const auto j = run_json({"color", sample("k4.json"), "--n", "3"});
  EXPECT_FALSE(j["coloring"].is_null());
  EXPECT_EQ(run_json({"color", sample("petersen.json"), "--n", "3"}, 1)["coloring"], nullptr);
}

TEST(Cli, CayleyAndGsetWeq) {
  const auto j = run_json({"cayley", sample("d1.json")});
  const auto g = zc::json_io::directed_from_json(j);
  EXPECT_EQ(g, zc::cayley_directed(zc::dessins::d1().action()));
  EXPECT_EQ(run({"gset-weq", sample("d0.json"), sample("d1.json")}).code, 0);
  // d1 is free, so the undirected Cayley graph is refused.
  EXPECT_EQ(run({"cayley", sample("d1.json"), "--undirected"}).code, 2);
  const auto sphere = run_json({"cayley", sample("sphere2.json"), "--undirected"});
  EXPECT_EQ(sphere["flavor"], "undirected");
}

TEST(Cli, Dessin) {
  const auto p = run_json({"dessin", "passport", sample("d1.json")});
  EXPECT_EQ(p["s0"], Json::array({1, 1}));
  EXPECT_EQ(p["s1"], Json::array({2}));
  const auto m = run_json({"dessin", "graph", sample("d1.json")});
  EXPECT_EQ(m["white"].size(), 2u);
}

TEST(Cli, Ramify) {
  const auto j = run_json({"ramify", sample("hexagon.json"), "--max", "3"});
  bool found = false;
  for (const auto& e : j["entries"])
    if (e["colors"] == Json::array({"a0", "a1"})) {
      found = true;
      EXPECT_EQ(e["degree"], 3);
      EXPECT_EQ(e["vertex_ambiguous"], true);
    }
  EXPECT_TRUE(found);
  EXPECT_EQ(j["plus_action"]["generators"].size(), 2u);
}

TEST(Cli, DemosSucceedAndAreByteIdentical) {
  for (const char* name : {"theorem-4-9", "prop-4-8", "dessins-d0-d1"}) {
    const auto a = run({"--format", "json", "demo", name});
    const auto b = run({"--format", "json", "demo", name});
    EXPECT_EQ(a.code, 0) << name << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(zc::json_io::parse(a.out, "demo")["all_hold"], true);
  }
  EXPECT_EQ(run({"demo", "prop-4-8", sample("double_cover.json")}).code, 0);
}

TEST(Cli, GraphRoundTrip) {
  for (const char* name : {"c3.json", "k4.json", "petersen.json", "eight.json", "cal_d1.json"}) {
    const Json original = zc::json_io::load_file(sample(name));
    const auto g = zc::json_io::graph_from_json(original);
    const Json again = std::visit([](const auto& x) { return zc::json_io::to_json(x); }, g);
    EXPECT_EQ(again, original) << name;
  }
}

TEST(Cli, RandomGraphsRoundTrip) {
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto u = zc::testing::random_undirected(rng, 5, 5);
    EXPECT_EQ(zc::json_io::undirected_from_json(zc::json_io::parse(zc::json_io::to_json(u).dump(), "t")), u);
    const auto d = zc::testing::random_directed(rng, 5, 6);
    EXPECT_EQ(zc::json_io::directed_from_json(zc::json_io::parse(zc::json_io::to_json(d).dump(), "t")), d);
    const auto x = zc::testing::random_involutive(rng, 1 + i % 5, 2, false);
    EXPECT_EQ(zc::json_io::gset_from_json(zc::json_io::to_json(x)), x);
  }
  const auto f = zc::lab::elementary_folding();
  const auto back = zc::json_io::morphism_from_json<zc::UndirectedGraph>(zc::json_io::to_json(f));
  EXPECT_EQ(back.map, f.map);
}

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j) if (has_float(v)) return true;
  return false;
}

TEST(Cli, NoFloatsInOutput) {
  // Order 10 of 1/(1 - 2t) needs no rationals, so force some with a loop graph.
  EXPECT_FALSE(has_float(run_json({"zeta", sample("b2.json"), "--terms", "10"})));
  const auto j = run_json({"ihara", sample("eight.json"), "--terms", "6"});
  EXPECT_FALSE(has_float(j));
  EXPECT_FALSE(has_float(run_json({"demo", "theorem-4-9"})));
}
