#include <gtest/gtest.h>

#include <fstream>

#include "support.hpp"

using namespace xmodcat;
using oracle::fixture;
using oracle::lines;
using oracle::run;

namespace {

std::string cli(const std::string& args) { return std::string(XMODCAT_BIN) + " " + args; }
std::string fx(const std::string& rel) { return "'" + fixture(rel).string() + "'"; }

json last_json(const std::string& out) {
  const auto ls = lines(out);
  if (ls.empty()) {
    ADD_FAILURE() << "no output";
    return json();
  }
  return json::parse(ls.back());
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("xmodcat_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Validate, GoodCrossedModuleExitsZero) {
  const auto r = run(cli("validate --kind xmod " + fx("xm1.json")));
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Validate, PeifferFixtureExitsOneWithCM2Lines) {
  const auto r = run(cli("validate --kind xmod " + fx("bad_peiffer.json")));
  EXPECT_EQ(r.code, 1);
  std::size_t cm2 = 0;
  for (const auto& l : lines(r.out)) {
    const json j = json::parse(l);
    if (j.contains("law") && j["law"] == "CM2") ++cm2;
    EXPECT_NE(j.value("law", std::string()), "CM1");
  }
  EXPECT_GE(cm2, 1u);
}

TEST(Validate, OtherKinds) {
  EXPECT_EQ(run(cli("validate --kind action " + fx("actions/trivial.json"))).code, 0);
  EXPECT_EQ(run(cli("validate --kind action " + fx("mutated_action.json"))).code, 1);
}

TEST(Validate, MissingFileExitsTwo) {
  const auto r = run(cli("validate --kind xmod " + fx("missing.json")), true);
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(last_json(r.out)["error"], "Io");
}

TEST(Usage, UnknownVerbAndFlagExitTwoWithUsage) {
  auto r = run(cli("transmogrify"), true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("Usage:"), std::string::npos);
  r = run(cli("verify --adjoint " + fx("xm1.json") + " --frobnicate"), true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("Usage:"), std::string::npos);
  EXPECT_EQ(run(cli("build"), true).code, 2);
}

TEST(Eval, IdentityGrid) {
  const auto r = run(cli("eval " + fx("grids/identity_1x1.grid")));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_json(r.out), json::parse(R"({"l":0,"t":0,"r":0,"b":0,"e":0})"));
}

TEST(Eval, GridsMatchTheLibrary) {
  for (const char* f : {"grids/xm1_1x2.grid", "grids/xm1_2x1.grid", "grids/xm1_2x2.grid", "grids/xm1_2x2.json",
                        "grids/xm2_3x2.grid"}) {
    const auto r = run(cli("eval --check-interchange " + fx(f)));
    ASSERT_EQ(r.code, 0) << f << r.out;
    const std::string path = fixture(f).string();
    const ParsedGrid g = path.ends_with(".json") ? grid_from_json(read_json_file(path), fixture("grids"))
                                                 : parse_grid_file(path);
    EXPECT_EQ(last_json(r.out), quintet_to_json(evaluate_grid(g.grid))) << f;
  }
  // 2×2 over XM1 evaluates to face 0, as compose_h of (1,0,1,0;1) and (1,0,1,0;2) does
  EXPECT_EQ(last_json(run(cli("eval " + fx("grids/xm1_2x2.grid"))).out)["e"], 0);
}

TEST(Eval, BadAdjacencyNamesTheCell) {
  const auto r = run(cli("eval " + fx("grids/malformed/adjacency.grid")), true);
  EXPECT_EQ(r.code, 1);
  const json j = last_json(r.out);
  EXPECT_EQ(j["error"], "AdjacencyViolation");
  EXPECT_NE(j["message"].get<std::string>().find("cell (0,0)"), std::string::npos);
  EXPECT_EQ(j["line"], 6);
}

TEST(Eval, SyntaxErrorsCarryPositions) {
  const auto r = run(cli("eval " + fx("grids/malformed/missing_paren.grid")), true);
  EXPECT_EQ(r.code, 1);
  const json j = last_json(r.out);
  EXPECT_EQ(j["error"], "SyntaxError");
  EXPECT_EQ(j["line"], 3);
  EXPECT_EQ(j["column"], 23);
}

TEST(Build, AdjointXM1HasThirtySixSquares) {
  const auto r = run(cli("build --adjoint " + fx("xm1.json")));
  ASSERT_EQ(r.code, 0);
  const json tdc = json::parse(lines(r.out).front());
  EXPECT_EQ(tdc["squares"].size(), 36u);
  EXPECT_EQ(tdc["objects"], 2);
}

TEST(Build, TrivialActionHasOneSquare) {
  const auto r = run(cli("build " + fx("actions/trivial.json")));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(lines(r.out).front())["squares"].size(), 1u);
}

TEST(Build, DotForS3HasThreeClusters) {
  const fs::path out = scratch("dot");
  const auto r = run(cli("build --adjoint " + fx("xm2.json") + " --dot '" + out.string() + "'"));
  ASSERT_EQ(r.code, 0) << r.out;
  const std::string dot = read_text_file(out / "objects.dot");
  EXPECT_EQ(count(dot, "subgraph cluster_"), 3u);
  EXPECT_TRUE(fs::exists(out / "morphisms.dot"));
  fs::remove_all(out);
}

TEST(Build, TwoCellTables) {
  const auto r = run(cli("build --adjoint " + fx("xm1.json") + " --h2cat --v2cat"));
  ASSERT_EQ(r.code, 0);
  const json tdc = json::parse(lines(r.out).front());
  // 6 morphisms × |ker ∂| = 3
  EXPECT_EQ(tdc["h2cat"]["count"], 18);
  // from (γ, 0): 3 each, from (γ, 1): 1 each
  EXPECT_EQ(tdc["v2cat"]["count"], 2 * 3 + 2 * 1);
  EXPECT_TRUE(tdc["h2cat"]["check"]["ok"].get<bool>());
  EXPECT_TRUE(tdc["v2cat"]["check"]["ok"].get<bool>());
}

TEST(Build, InvalidActionExitsOne) { EXPECT_EQ(run(cli("build " + fx("mutated_action.json"))).code, 1); }

TEST(Verify, AdjointXM1ExhaustivePasses) {
  const auto r = run(cli("verify --adjoint " + fx("xm1.json") + " --exhaustive"));
  EXPECT_EQ(r.code, 0);
  for (const auto& l : lines(r.out)) {
    const json j = json::parse(l);
    if (j.contains("status")) {
      EXPECT_EQ(j["status"], "pass") << l;
    }
  }
}

TEST(Verify, SeededRunIsByteIdentical) {
  const std::string cmd = cli("verify --adjoint " + fx("xm2.json") + " --samples 100000 --seed 7");
  const auto a = run(cmd);
  const auto b = run(cmd);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("7"), std::string::npos);
}

TEST(Verify, ThreadCountDoesNotChangeTheLog) {
  const std::string args = " verify --adjoint " + fx("xm2.json") + " --samples 20000 --seed 3";
  const auto one = run("XMODCAT_THREADS=1 " + std::string(XMODCAT_BIN) + args);
  const auto many = run("XMODCAT_THREADS=8 " + std::string(XMODCAT_BIN) + args);
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, many.out);
}

TEST(Verify, MutatedActionReportsInterchange) {
  const auto r = run(cli("verify " + fx("mutated_action.json")));
  EXPECT_EQ(r.code, 1);
  bool interchange = false;
  for (const auto& l : lines(r.out)) {
    const json j = json::parse(l);
    interchange |= j.value("law", std::string()) == "dc.interchange" && j.value("status", std::string()) == "fail";
  }
  EXPECT_TRUE(interchange);
}

TEST(Export, RoundTripsThroughTheLibrary) {
  const fs::path out = scratch("export.json");
  ASSERT_EQ(run(cli("export --adjoint " + fx("xm2.json") + " --what action --out '" + out.string() + "'")).code, 0);
  EXPECT_EQ(load_action(out), adjoint_action(xm2()));
  fs::remove(out);
  const auto r = run(cli("export --adjoint " + fx("xm1.json") + " --what xmod"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(xmod_from_json(json::parse(r.out)), xm1());
}

TEST(Catalog, WritesTheShippedFixtures) {
  const fs::path out = scratch("catalog");
  ASSERT_EQ(run(cli("catalog --out '" + out.string() + "'")).code, 0);
  for (const char* f : {"xm1.json", "xm2.json", "xm3.json", "xm4.json", "bad_peiffer.json"})
    EXPECT_EQ(read_text_file(out / f), read_text_file(fixture(f))) << f;
  fs::remove_all(out);
}

TEST(Pretty, IsAcceptedAnywhere) {
  EXPECT_EQ(run(cli("--pretty validate --kind xmod " + fx("xm1.json"))).code, 0);
  EXPECT_EQ(run(cli("validate --kind xmod " + fx("xm1.json") + " --pretty")).code, 0);
}
