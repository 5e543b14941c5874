#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

#include "gallery/constructions.hpp"
#include "gallery/error.hpp"
#include "gallery/guards.hpp"

#include <set>

using namespace gallery;
using testing::pt3;

namespace {

std::set<Point3> vertex_set(const Polyhedron& p) { return {p.vertices.begin(), p.vertices.end()}; }

std::set<Point3> mapped(const std::set<Point3>& s, Point3 (*f)(const Point3&)) {
  std::set<Point3> out;
  for (const Point3& p : s) out.insert(f(p));
  return out;
}

Point3 point_reflect(const Point3& p) { return {20 - p.x, 20 - p.y, 20 - p.z}; }
Point3 cycle(const Point3& p) { return {p.z, p.x, p.y}; }
Point3 swap_xy(const Point3& p) { return {p.y, p.x, p.z}; }

bool builds(const OctoplexParams& p) {
  try {
    octoplex(p);
    return true;
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::InvalidParameters);
    return false;
  }
}

}  // namespace

TEST_CASE("leszek fortress") {
  const SimplePolygon f = leszek_fortress();
  CHECK(f.size() == 12);
  const StrategyReport r = fortress_all_starts(f);
  REQUIRE(r.starts.size() == 2);
  CHECK_FALSE(r.exists_good_start);
  for (const StartVerdict& s : r.starts) {
    const Uncovered* u = s.verdict.uncovered();
    REQUIRE(u != nullptr);
    // witness sees only vertices of the other parity
    for (std::size_t v = 0; v < f.size(); ++v) {
      const bool sees = oracle::visible(f, u->witness, f[v], Side::Exterior);
      if (v % 2 == s.start % 2) CHECK_FALSE(sees);
    }
    for (std::size_t v : visible_vertex_set(f, u->witness, Side::Exterior)) CHECK(v % 2 != s.start % 2);
    CHECK(point_location(hull_polygon(f), u->witness) != Location::Exterior);
    bool in_pocket = false;
    for (const SimplePolygon& k : pockets(f).faces) in_pocket = in_pocket || point_location(k, u->witness) != Location::Exterior;
    CHECK(in_pocket);
  }
  // single pocket, holding both chambers
  const Region2 pk = pockets(f);
  CHECK(pk.size() == 1);
  const Region2 dark = unobserved_region(f, every_kth(12, 2, 0), Side::Exterior);
  CHECK_FALSE(dark.empty());
  for (const SimplePolygon& cell : dark.faces) {
    for (const Point2& v : cell.vertices()) CHECK(point_location(pk.faces[0], v) != Location::Exterior);
  }
}

TEST_CASE("leszek needs four guards and four suffice") {
  const auto best = brute_force_min_guards(leszek_fortress(), Side::Exterior, 4);
  REQUIRE(best.has_value());
  CHECK(best->size == 4);
  CHECK(best->guards.indices() == std::vector<std::size_t>{0, 4, 7, 10});
  CHECK(verify_guard_set(leszek_fortress(), best->guards.indices(), Side::Exterior).covered());
  for (std::size_t v = 0; v < 12; ++v) CHECK_FALSE(verify_guard_set(leszek_fortress(), {v}, Side::Exterior).covered());
}

TEST_CASE("double leszek") {
  const SimplePolygon d = double_leszek();
  CHECK(d.size() == 21);
  const StrategyReport r = fortress_all_starts(d);
  CHECK(r.starts.size() == 21);
  CHECK_FALSE(r.exists_good_start);
  for (const StartVerdict& s : r.starts) {
    const Uncovered* u = s.verdict.uncovered();
    REQUIRE(u != nullptr);
    for (std::size_t g : s.guards.indices()) CHECK_FALSE(oracle::visible(d, u->witness, d[g], Side::Exterior));
  }
  // one pocket per copy: the glued edge lies on the hull
  CHECK(pockets(d).size() == 2);
}

TEST_CASE("glue_by_reflection") {
  const SimplePolygon rect = testing::poly({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
  const SimplePolygon twice = glue_by_reflection(rect, 1);  // mirror across x = 2
  CHECK(twice.size() == 4);
  CHECK(area(twice) == 4);
  CHECK_THROWS_AS(glue_by_reflection(rect, 4), GeometryError);
}

TEST_CASE("uberoctoplex") {
  const Polyhedron u = uberoctoplex();
  CHECK(validate(u) == FeatureCount{24, 48, 26, 0});
  CHECK(count_features(u).euler() == 2);
  CHECK(vertex_observers(u, pt3(10, 10, 10)).empty());
  std::size_t triangles = 0;
  for (const Face& f : u.faces) triangles += f.outer.size() == 3 && f.holes.empty() ? 1 : 0;
  CHECK(triangles == 8);

  const auto vs = vertex_set(u);
  CHECK(vs.size() == 24);
  CHECK(mapped(vs, point_reflect) == vs);
  CHECK(mapped(vs, cycle) == vs);
  CHECK(mapped(mapped(vs, cycle), cycle) == vs);
  // chiral: the mirror image is the other accepted layout
  CHECK(mapped(vs, swap_xy) != vs);
}

TEST_CASE("uberoctoplex configuration search") {
  const auto all = enumerate_uberoctoplex();
  CHECK(all.size() == 16);
  std::vector<std::string> accepted;
  for (const auto& o : all) {
    if (o.accepted) accepted.push_back(to_string(o.config));
  }
  CHECK(accepted == std::vector<std::string>{"yyzzxx/wide-out", "zzxxyy/wide-out"});
  CHECK(to_string(uberoctoplex_config()) == accepted.front());
  const Polyhedron mirror = uberoctoplex_from(all[7].config);
  CHECK(mapped(vertex_set(mirror), swap_xy) == vertex_set(uberoctoplex()));
}

TEST_CASE("uberoctoplex blind radius is frozen") {
  CHECK(uberoctoplex_blind_radius() == Rational(5, 2));
  const BlindProbe p = blind_region_probe(uberoctoplex(), pt3(10, 10, 10), uberoctoplex_blind_radius(), 1000, 1);
  CHECK(p.samples == 1000);
  CHECK(p.blind == 1000);
  // twice the radius is no longer blind everywhere
  CHECK(blind_region_probe(uberoctoplex(), pt3(10, 10, 10), 5, 1000, 1).blind < 1000);
}

TEST_CASE("octoplex") {
  const Polyhedron o = octoplex();
  CHECK(validate(o) == FeatureCount{56, 84, 30, 0});
  CHECK(vertex_observers(o, pt3(10, 10, 10)).empty());
  const auto vs = vertex_set(o);
  CHECK(mapped(vs, point_reflect) == vs);
  CHECK(mapped(vs, cycle) != vs);  // cutouts differ per axis
}

TEST_CASE("octoplex parameter validation") {
  const OctoplexParams good = default_octoplex_params();
  CHECK(builds(good));

  OctoplexParams zero = good;
  zero.cutouts[0].depth = 0;
  CHECK_FALSE(builds(zero));

  OctoplexParams deep = good;
  deep.cutouts[3].depth = 20;
  CHECK_FALSE(builds(deep));

  OctoplexParams outside = good;
  outside.cutouts[4].v1 = 21;
  CHECK_FALSE(builds(outside));

  OctoplexParams inverted = good;
  inverted.cutouts[5].u0 = 12;
  inverted.cutouts[5].u1 = 12;
  CHECK_FALSE(builds(inverted));

  OctoplexParams whole = good;
  whole.cutouts[1] = Cutout{0, 20, 0, 20, 1};
  CHECK_FALSE(builds(whole));

  // a y channel reaching into the z channels' layer
  OctoplexParams clash = good;
  clash.cutouts[2].depth = 6;
  CHECK_FALSE(builds(clash));

  CHECK_THROWS_AS(cutout_box(6, good.cutouts[0]), GeometryError);
  const CutoutBox b = cutout_box(3, good.cutouts[3]);
  CHECK(b.lo == pt3(3, 16, 0));
  CHECK(b.hi == pt3(17, 20, 20));
}

TEST_CASE("truncated octoplex") {
  const FeatureCount base = validate(octoplex());
  const Polyhedron t = truncated_octoplex();
  const FeatureCount c = validate(t);
  CHECK(c == FeatureCount{48, 72, 26, 0});
  CHECK(static_cast<long>(base.V) - static_cast<long>(c.V) == 8);
  CHECK(static_cast<long>(base.F) - static_cast<long>(c.F) == 4);
  CHECK(vertex_observers(t, pt3(10, 10, 10)).empty());

  // the moved vertices: not in the octoplex, still blind
  const auto before = vertex_set(octoplex());
  std::vector<Point3> moved;
  for (const Point3& p : t.vertices) {
    if (!before.count(p)) moved.push_back(p);
  }
  CHECK(moved.size() == 8);
  const SolidQuery q(t);
  for (const Point3& p : moved) CHECK_FALSE(q.visible(pt3(10, 10, 10), p));

  CHECK_THROWS_AS(strip_wedge(4, Cutout{2, 18, 5, 15, 2}, false), GeometryError);
  CHECK_THROWS_AS(strip_wedge(4, Cutout{0, 20, 0, 15, 2}, false), GeometryError);
}

TEST_CASE("catalog") {
  std::vector<std::string> names;
  for (const auto& c : construction_catalog()) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"leszek", "double-leszek", "uberoctoplex", "octoplex", "truncated-octoplex"});
}
