#include "doctest.h"
#include "helpers.hpp"

#include "gallery/constructions.hpp"
#include "gallery/error.hpp"
#include "gallery/io.hpp"

#include <filesystem>
#include <sstream>

using namespace gallery;
using testing::pt3;

namespace {

ErrorKind parse_kind(const std::string& text, bool polygon) {
  try {
    const Json j = Json::parse(text);
    if (polygon) {
      polygon_from_json(j);
    } else {
      polyhedron_from_json(j);
    }
  } catch (const GeometryError& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Precondition;
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
  return n;
}

std::size_t lines_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0 ? 1 : 0;
  return n;
}

// squared length of the normal; zero for a degenerate triangle
Rational triangle_area2(const Polyhedron& m, const Triangle& t) {
  const Point3 c = cross(m.vertices[t[1]] - m.vertices[t[0]], m.vertices[t[2]] - m.vertices[t[0]]);
  return dot(c, c);
}

}  // namespace

TEST_CASE("polygon json round trip is exact") {
  const SimplePolygon p = validate_simple({{Rational(1, 3), 0}, {5, Rational(-2, 7)}, {4, 4}, {Rational(-11, 13), 3}});
  const Json j = polygon_to_json(p);
  CHECK(j["vertices"][0][0] == "1/3");
  CHECK(j["vertices"][1][1] == "-2/7");
  CHECK(j["vertices"][2][0] == "4");
  CHECK(polygon_from_json(Json::parse(dump(j))) == p);
  CHECK(dump(polygon_to_json(polygon_from_json(Json::parse(dump(j))))) == dump(j));
  CHECK(dump(j).back() == '\n');

  // integers are accepted on input
  CHECK(polygon_from_json(Json::parse(R"({"vertices": [[0,0],[2,0],[2,2],[0,2]]})")) == testing::square2());
  CHECK(polygon_from_json(polygon_to_json(leszek_fortress())) == leszek_fortress());
}

TEST_CASE("polyhedron json round trip is exact") {
  for (const Polyhedron& m : {uberoctoplex(), octoplex(), truncated_octoplex()}) {
    const Json j = polyhedron_to_json(m);
    const Polyhedron back = polyhedron_from_json(Json::parse(dump(j)));
    CHECK(back == m);
    CHECK(dump(polyhedron_to_json(back)) == dump(j));
  }
  const Json j = polyhedron_to_json(truncated_octoplex());
  bool has_third = false;
  for (const auto& v : j["vertices"]) {
    for (const auto& c : v) has_third = has_third || c.get<std::string>().find("/3") != std::string::npos;
  }
  CHECK(has_third);
  CHECK(j["faces"][0].contains("holes"));
}

TEST_CASE("malformed files are parse errors") {
  CHECK(parse_kind(R"({"points": []})", true) == ErrorKind::Parse);
  CHECK(parse_kind(R"({"vertices": [["1","2","3"]]})", true) == ErrorKind::Parse);
  CHECK(parse_kind(R"({"vertices": [["1/0","0"],["1","0"],["1","1"]]})", true) == ErrorKind::Parse);
  CHECK(parse_kind(R"({"vertices": [["a","0"],["1","0"],["1","1"]]})", true) == ErrorKind::Parse);
  CHECK(parse_kind(R"({"vertices": [[0.5,0],[1,0],[1,1]]})", true) == ErrorKind::Parse);
  // geometry errors pass through
  CHECK(parse_kind(R"({"vertices": [[0,0],[1,0]]})", true) == ErrorKind::TooFewVertices);
  CHECK(parse_kind(R"({"vertices": [[0,0],[2,2],[2,0],[0,2]]})", true) == ErrorKind::SelfIntersection);

  CHECK(parse_kind(R"({"vertices": [[0,0,0]]})", false) == ErrorKind::Parse);
  CHECK(parse_kind(R"({"vertices": [[0,0,0]], "faces": [{"outer": [0, 5, 1]}]})", false) == ErrorKind::Parse);
  CHECK(parse_kind(R"({"vertices": [[0,0,0]], "faces": [{"outer": [0, -1, 1]}]})", false) == ErrorKind::Parse);
  CHECK(parse_kind(R"({"vertices": [[0,0,0],[1,0,0],[0,1,0]], "faces": [{"outer": [0,1,2]}]})", false) ==
        ErrorKind::OpenEdge);

  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), GeometryError);
  const auto path = (std::filesystem::temp_directory_path() / "gallery_bad.json").string();
  write_text_file(path, "{ not json");
  CHECK_THROWS_AS(read_json_file(path), GeometryError);
  std::filesystem::remove(path);
}

TEST_CASE("verdict and report layouts") {
  const StrategyReport r = fortress_all_starts(leszek_fortress());
  const Json j = report_to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"n", "k", "side", "starts", "exists_good_start"});
  CHECK(j["n"] == 12);
  CHECK(j["k"] == 2);
  CHECK(j["side"] == "exterior");
  CHECK(j["exists_good_start"] == false);
  REQUIRE(j["starts"].size() == 2);
  CHECK(j["starts"][1]["guards"] == Json::parse("[1,3,5,7,9,11]"));
  CHECK(j["starts"][0]["verdict"] == "uncovered");
  CHECK(point2_from_json(j["starts"][0]["witness"]) == r.starts[0].verdict.uncovered()->witness);

  const Json c = verdict_to_json(verify_guard_set(testing::square2(), {0, 2}, Side::Exterior));
  CHECK(c["verdict"] == "covered");
  CHECK_FALSE(c.contains("witness"));
  CHECK(c["cells"].is_number_unsigned());
}

TEST_CASE("svg rendering") {
  const std::string plain = render_svg(testing::square2(), {{GuardPlacement(4, {0, 2}), Side::Exterior}});
  CHECK(plain.rfind("<?xml", 0) == 0);
  CHECK(count_of(plain, "version=\"1.1\"") == 1);
  CHECK(count_of(plain, "class=\"unobserved") == 0);
  CHECK(count_of(plain, "class=\"guard layer0\"") == 2);

  const SimplePolygon f = leszek_fortress();
  const std::string even = render_svg(f, {{every_kth(12, 2, 0), Side::Exterior}});
  CHECK(count_of(even, "class=\"unobserved layer0\"") >= 1);
  CHECK(count_of(even, "class=\"guard layer0\"") == 6);

  const std::string both = render_svg(f, {{every_kth(12, 2, 0), Side::Exterior}, {every_kth(12, 2, 1), Side::Exterior}});
  CHECK(count_of(both, "class=\"unobserved layer0\"") >= 1);
  CHECK(count_of(both, "class=\"unobserved layer1\"") >= 1);
  CHECK(count_of(both, "#d62728") >= 2);
  CHECK(count_of(both, "#1f77b4") >= 2);
  CHECK(render_svg(f, {{every_kth(12, 2, 0), Side::Exterior}}) == even);
}

TEST_CASE("obj export and triangulation audit") {
  const Polyhedron cube = subtract(box_solid(pt3(0, 0, 0), pt3(20, 20, 20)), {});
  const std::string obj = render_obj(cube);
  CHECK(lines_starting(obj, "v ") == 8);
  CHECK(lines_starting(obj, "f ") == 12);
  CHECK(lines_starting(obj, "vn") == 0);
  CHECK(lines_starting(obj, "f 0") == 0);  // 1-based

  const Polyhedron pocket = subtract(box_solid(pt3(0, 0, 0), pt3(20, 20, 20)), {box_solid(pt3(5, 5, -1), pt3(15, 15, 5))});
  for (const Polyhedron& m : {cube, pocket, uberoctoplex(), octoplex(), truncated_octoplex()}) {
    const auto tris = triangulate(m);
    const EdgeAudit a = audit_triangles(tris);
    CHECK(a.watertight());
    // V - E + F with triangles: a closed genus-0 surface still has Euler 2
    CHECK(static_cast<long>(m.vertices.size()) - static_cast<long>(a.edges) + static_cast<long>(a.triangles) == 2);
    for (const Triangle& t : tris) CHECK(sign(triangle_area2(m, t)) > 0);
    CHECK(lines_starting(render_obj(m), "f ") == tris.size());
  }

  // a tampered triangle list is caught
  auto tris = triangulate(cube);
  std::swap(tris[0][0], tris[0][1]);
  CHECK_FALSE(audit_triangles(tris).watertight());
  tris.pop_back();
  CHECK(audit_triangles(tris).bad_edges > 0);
}
