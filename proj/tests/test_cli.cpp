#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "polyknot/cli.hpp"
#include "polyknot/io.hpp"
#include "support.hpp"

using namespace polyknot;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("polyknot_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("classify-hex on the trefoil fixture") {
  const auto r = run({"classify-hex", testing::fixture_path("hexagon_trefoil.json")});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["chirality"] == 1);
  CHECK(j["curl"] == 1);
  CHECK(j["class"] == "right-trefoil");
}

TEST_CASE("region on pentagon Q") {
  const auto r = run({"region", testing::fixture_path("pentagon_q.json"), "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "2-4-3\n");
  CHECK(json::parse(run({"region", testing::fixture_path("pentagon_q.json")}).out)["region"] == "2-4-3");
}

TEST_CASE("usage errors exit 2") {
  const std::string two = temp_file("two.txt", "0 0 0\n1 0 0\n");
  const auto r = run({"check", two});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out).contains("error"));
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"--tol", "5", "check", two}).code == 2);
  CHECK(run({"act", testing::fixture_path("hexagon_trefoil.json"), "--op", "twist"}).code == 2);
  CHECK(run({"check", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("domain errors exit 1 with an error object") {
  const std::string bad = temp_file("singular.json", polygon_to_json(testing::hexagon_crossed()).dump());
  const auto r = run({"classify-hex", bad});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["error"]["kind"] == "NotEmbedded");
  CHECK(run({"classify-hex", testing::fixture_path("pentagon_q.json")}).code == 1);
}

TEST_CASE("check reports embedding") {
  const auto r = run({"check", testing::fixture_path("hexagon_unknot.json")});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["embedded"] == true);
  CHECK(j["n"] == 6);
}

TEST_CASE("act writes polygons") {
  const auto r = run({"act", testing::fixture_path("hexagon_trefoil.json"), "--op", "mirror"});
  REQUIRE(r.code == 0);
  const Polygon m = parse_polygon(r.out);
  CHECK(m[3].z == doctest::Approx(-0.845227));
  const std::string out = (std::filesystem::temp_directory_path() / "polyknot_test_rot.txt").string();
  CHECK(run({"--format", "text", "act", testing::fixture_path("hexagon_trefoil.json"), "--op", "rotate:1", "--out", out}).code == 0);
  CHECK(parse_polygon(read_file(out))[0] == testing::hexagon_trefoil()[1]);
}

TEST_CASE("project and identify") {
  const auto p = run({"project", testing::fixture_path("hexagon_trefoil.json")});
  REQUIRE(p.code == 0);
  const json j = json::parse(p.out);
  CHECK(j["crossing_count"] == 3);
  CHECK(j["bound"] == 3);
  const auto o = run({"project", testing::fixture_path("hexagon_trefoil.json"), "--method", "orthogonal"});
  CHECK(json::parse(o.out)["bound"] == 5);
  CHECK(run({"project", testing::fixture_path("hexagon_trefoil.json"), "--method", "sideways"}).code == 2);
  const auto t = run({"project", testing::fixture_path("hexagon_trefoil.json"), "--format", "text"});
  CHECK(t.out.find("gauss: ") != std::string::npos);
  CHECK(t.out.find("pd: X[") != std::string::npos);

  const auto id = run({"identify", testing::fixture_path("hexagon_trefoil.json")});
  CHECK(json::parse(id.out)["knot"] == "3_1");
  const std::string pd = temp_file("fig8.pd", Diagram::from_braid(3, {1, -2, 1, -2}).pd_string());
  const auto f = run({"identify", pd});
  REQUIRE(f.code == 0);
  CHECK(json::parse(f.out)["knot"] == "4_1");
  CHECK(json::parse(f.out)["determinant"] == 5);
}

TEST_CASE("classify-hept on a figure-eight fixture") {
  const auto r = run({"classify-hept", testing::fixture_path("figure_eight/heptagon_4_1_0.json")});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["knot"] == "4_1");
  CHECK((j["xi"] == 1 || j["xi"] == -1));
  CHECK(j["figure_eight_consistent"] == true);
}

TEST_CASE("census and path-check") {
  const std::string out = (std::filesystem::temp_directory_path() / "polyknot_test_census.json").string();
  const auto r = run({"--seed", "5", "census", "--n", "6", "--samples", "300", "--out", out});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(read_file(out)));
  CHECK(run({"--seed", "5", "census", "--n", "6", "--samples", "300"}).out == r.out);

  // text table: header plus one row per bucket, counts summing to the sample size
  const auto t = run({"--seed", "5", "--format", "text", "census", "--n", "6", "--samples", "300"});
  std::istringstream rows(t.out);
  std::string line;
  std::getline(rows, line);
  CHECK(line == "n 6, samples 300, seed 5");
  std::getline(rows, line);
  CHECK(line.starts_with("region"));
  std::size_t total = 0, buckets = 0;
  while (std::getline(rows, line)) {
    total += std::stoul(line.substr(line.find_last_of(' ') + 1));
    ++buckets;
  }
  CHECK(total == 300);
  CHECK(buckets == json::parse(r.out)["histogram"].size());

  const json frames = json::array({polygon_to_json(testing::hexagon_unknot()), polygon_to_json(testing::hexagon_trefoil())});
  const auto pc = run({"path-check", temp_file("path.json", frames.dump())});
  REQUIRE(pc.code == 0);
  CHECK(json::parse(pc.out)["certified"] == false);
}

TEST_CASE("permutahedron output") {
  const auto j = json::parse(run({"permutahedron"}).out);
  CHECK(j["node_count"] == 24);
  CHECK(j["edge_count"] == 36);
  CHECK(j["square_faces"] == 6);
  CHECK(j["hexagonal_faces"] == 8);
  CHECK(run({"permutahedron", "--format", "text"}).out.rfind("graph", 0) == 0);
}

TEST_CASE("perturb flag keeps classification of the fixture") {
  const auto r = run({"--perturb", "--perturb-magnitude", "1e-6", "classify-hex", testing::fixture_path("hexagon_trefoil.json")});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["class"] == "right-trefoil");
}
