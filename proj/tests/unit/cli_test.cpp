#include <gtest/gtest.h>

#include <sstream>

#include "app.hpp"
#include "json_io.hpp"

namespace chipfire::cli {
namespace {

constexpr const char* kRunning =
    R"({"L": [[2,-1,1],[-1,2,-1],[1,-1,2]], "M": [[3,-1,-1],[-1,3,-1],[-1,-1,3]]})";

struct Run {
  int status;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int status = run(args, in, out, err);
  return {status, out.str(), err.str()};
}

Json with(const char* base, const Json& extra) {
  Json doc = Json::parse(base);
  doc.update(extra);
  return doc;
}

std::set<Json> as_set(const Json& list) { return {list.begin(), list.end()}; }

TEST(Cli, CheckMMatrix) {
  auto r = invoke({"check-mmatrix", "-"}, R"({"M": [[3,-1,-1],[-1,3,-1],[-1,-1,3]]})");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.json()["is_m_matrix"].get<bool>());
  EXPECT_EQ(r.json()["inverse"][0][0], "1/2");
  EXPECT_EQ(r.json()["positive_witness"], Json::parse("[1,1,1]"));

  r = invoke({"check-mmatrix", "--json", R"({"M": [[1,0],[0,1]]})"});
  EXPECT_EQ(r.status, 0);

  r = invoke({"check-mmatrix", "--json", R"({"M": [[1,-2],[-2,1]]})"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.json()["failure_reason"], "NegativeInverseEntry");
}

TEST(Cli, ParseErrorsExitWithTwo) {
  EXPECT_EQ(invoke({"check-mmatrix", "-"}, "{not json").status, 2);
  EXPECT_EQ(invoke({"check-mmatrix", "--json", R"({"M": [[0.5]]})"}).status, 2);
  EXPECT_EQ(invoke({"classify", "--json", R"({"M": [[1]]})"}).status, 2);
  EXPECT_EQ(invoke({"bogus"}).status, 2);
  EXPECT_EQ(invoke({"stabilize", "--format", "xml", "--json", kRunning}).status, 2);
}

TEST(Cli, Membership) {
  auto r = invoke({"membership", "--json", with(kRunning, {{"f", {0, 0, 1}}}).dump()});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.json()["x"], Json::parse(R"(["-7/4", "1/4", "9/4"])"));
  r = invoke({"membership", "--json", with(kRunning, {{"f", {3, -1, 4}}}).dump()});
  EXPECT_EQ(r.status, 0);
  r = invoke({"membership", "--json", with(kRunning, {{"x", {"1/8", 0, 0}}}).dump()});
  EXPECT_EQ(r.status, 1);
  EXPECT_FALSE(r.json()["in_r_plus"].get<bool>());
}

TEST(Cli, Fire) {
  auto r = invoke({"fire", "--json", with(kRunning, {{"f", {6, -1, 5}}, {"site", 0}}).dump()});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.json()["result"], Json::parse("[4,0,4]"));
  r = invoke({"fire", "--json", with(kRunning, {{"f", {0, 0, 0}}, {"site", 0}}).dump()});
  EXPECT_EQ(r.status, 1);
  r = invoke({"fire", "--json", with(kRunning, {{"f", {4, -1, 4}}, {"script", {1, 0, 1}}}).dump()});
  EXPECT_EQ(r.status, 0);
}

TEST(Cli, Stabilize) {
  auto r = invoke({"stabilize", "--json", with(kRunning, {{"f", {6, -1, 5}}}).dump()});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.json()["stable_config"], Json::parse("[4,0,4]"));
  EXPECT_EQ(r.json()["firing_script"], Json::parse("[1,0,0]"));
  EXPECT_EQ(r.json()["steps"], 1);

  r = invoke({"stabilize", "--json", with(kRunning, {{"f", {0, 0, 0}}}).dump()});
  EXPECT_EQ(r.json()["stable_config"], Json::parse("[0,0,0]"));
  EXPECT_EQ(r.json()["firing_script"], Json::parse("[0,0,0]"));

  EXPECT_EQ(invoke({"stabilize", "--json", with(kRunning, {{"f", {1, -1, 1}}}).dump()}).status, 1);

  const auto random = invoke({"stabilize", "--policy", "random", "--seed", "9", "--json",
                              with(kRunning, {{"f", {30, 0, 30}}}).dump()});
  const auto lowest = invoke({"stabilize", "--json", with(kRunning, {{"f", {30, 0, 30}}}).dump()});
  EXPECT_EQ(random.json()["stable_config"], lowest.json()["stable_config"]);
}

TEST(Cli, Classify) {
  auto r = invoke({"classify", "--json", kRunning});
  ASSERT_EQ(r.status, 0);
  const Json doc = r.json();
  EXPECT_EQ(doc["det_L_abs"], 4);
  EXPECT_EQ(doc["classes"].size(), 4u);
  EXPECT_EQ(as_set(doc["criticals"]), as_set(Json::parse("[[4,-1,4],[4,0,4],[5,0,5],[5,-1,5]]")));
  EXPECT_EQ(as_set(doc["superstables"]), as_set(Json::parse("[[1,0,1],[1,1,1],[0,0,0],[2,1,2]]")));

  r = invoke({"superstables", "--json", R"({"L": [[2,-1,1],[-1,2,-1],[1,-1,2]], "M": "identity"})"});
  EXPECT_EQ(as_set(r.json()["superstables"]), as_set(Json::parse("[[1,0,1],[0,1,0],[0,0,0],[2,-1,2]]")));

  r = invoke({"criticals", "--json", R"({"L": [[1,0],[0,1]]})"});
  EXPECT_EQ(r.json()["criticals"], Json::parse("[[0,0]]"));

  EXPECT_EQ(invoke({"classify", "--cap-det", "3", "--json", kRunning}).status, 3);
}

TEST(Cli, OutputIsDeterministic) {
  const auto a = invoke({"classify", "--format", "text", "--json", kRunning});
  const auto b = invoke({"classify", "--format", "text", "--json", kRunning});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("criticals:"), std::string::npos);
  const auto c = invoke({"classify", "--json", kRunning});
  EXPECT_EQ(c.out, invoke({"classify", "--json", kRunning}).out);
}

TEST(Cli, EnergyCokerParallelepiped) {
  auto r = invoke({"energy", "--json", with(kRunning, {{"f", {1, 0, 1}}}).dump()});
  EXPECT_EQ(r.json()["energy"], "3/4");
  r = invoke({"coker", "--json", R"({"L": [[2,-1,1],[-1,2,-1],[1,-1,2]], "f": [4,0,4]})"});
  EXPECT_EQ(r.json()["invariant_factors"], Json::parse("[1,1,4]"));
  EXPECT_EQ(r.json()["label"], Json::parse("[0,0,0]"));
  r = invoke({"parallelepiped", "--json", R"({"L": [[2,-1,1],[-1,2,-1],[1,-1,2]]})"});
  EXPECT_EQ(r.json()["points"], Json::parse("[[0,0,0],[0,1,0],[1,0,1],[2,-1,2]]"));
}

TEST(Cli, FromComplex) {
  auto r = invoke({"from-complex", "--json",
                   R"({"facets": [[1,2,3],[1,2,4],[1,3,4],[2,3,4]], "tree": [[1,2],[1,3],[1,4]]})"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.json()["L"], Json::parse("[[2,-1,1],[-1,2,-1],[1,-1,2]]"));
  EXPECT_EQ(r.json()["edges"], Json::parse("[[2,3],[2,4],[3,4]]"));

  r = invoke({"from-complex", "--with-m", "identity", "--json",
              R"({"facets": [[1,2,3],[1,2,4],[1,3,4],[2,3,4]], "tree": [[1,2],[1,3],[1,4]]})"});
  EXPECT_EQ(as_set(r.json()["classification"]["criticals"]),
            as_set(Json::parse("[[1,0,1],[0,1,0],[0,0,0],[2,-1,2]]")));

  r = invoke({"from-complex", "--json", R"({"facets": [[1,2,3]], "tree": [[1,2],[1,3]]})"});
  EXPECT_EQ(r.json()["L"], Json::parse("[[1]]"));

  EXPECT_EQ(invoke({"from-complex", "--json", R"({"facets": [[1,2,3]], "tree": [[1,2]]})"}).status, 1);
  EXPECT_EQ(invoke({"from-complex", "--json", R"({"facets": [[1,2,3]]})"}).status, 2);
}

TEST(Cli, FromGraph) {
  auto r = invoke({"from-graph", "--json",
                   R"({"vertices": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]], "sink": 3, "undirected": true})"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.json()["L"], Json::parse("[[3,-1,-1],[-1,3,-1],[-1,-1,3]]"));

  r = invoke({"from-graph", "--json", R"({"graph": {"vertices": 2, "edges": [[0,1,1]], "sink": 1}})"});
  EXPECT_EQ(r.json()["L"], Json::parse("[[1]]"));

  EXPECT_EQ(invoke({"from-graph", "--json", R"({"vertices": 3, "edges": [[0,1],[1,0]], "sink": 2})"}).status, 1);
}

TEST(Cli, CheckDuality) {
  EXPECT_EQ(invoke({"check-duality", "--json", kRunning}).status, 1);
  const auto r = invoke({"check-duality", "--json", R"({"L": [[2,-1],[-1,2]], "M": "L"})"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.json()["holds"].get<bool>());
}

TEST(JsonIo, LargeIntegersRoundTripAsStrings) {
  const BigInt big("123456789012345678901234567890");
  const Json j = to_json(big);
  EXPECT_TRUE(j.is_string());
  EXPECT_EQ(parse_integer(j), big);
  EXPECT_EQ(parse_rational(Json("-3/6")), Rational(BigInt(-1), BigInt(2)));
}

}  // namespace
}  // namespace chipfire::cli
