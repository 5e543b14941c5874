#include "doctest.h"
#include "helpers.hpp"

#include "gallery/error.hpp"
#include "gallery/predicates.hpp"
#include "gallery/search.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace gallery;
using testing::l_shape;
using testing::pt;
using testing::square2;
using testing::unit_square;

namespace {

ErrorKind kind_of(std::vector<Point2> pts) {
  try {
    validate_simple(std::move(pts));
  } catch (const GeometryError& e) {
    return e.kind();
  }
  FAIL("expected a GeometryError");
  return ErrorKind::Parse;
}

// Independent winding-number oracle for points off the boundary.
int winding(const SimplePolygon& p, const Point2& q) {
  int w = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point2& a = p[i];
    const Point2& b = p.vertex(i + 1);
    if (a.y <= q.y) {
      if (b.y > q.y && orient2d(a, b, q) > 0) ++w;
    } else if (b.y <= q.y && orient2d(a, b, q) < 0) {
      --w;
    }
  }
  return w;
}

std::set<Point2> as_set(std::span<const Point2> pts) { return {pts.begin(), pts.end()}; }

}  // namespace

TEST_CASE("validate_simple examples") {
  const SimplePolygon sq = validate_simple({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
  CHECK(sq.size() == 4);
  CHECK(twice_signed_area(sq.vertices()) > 0);
  CHECK(kind_of({pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)}) == ErrorKind::SelfIntersection);
  CHECK(kind_of({pt(0, 0), pt(1, 0), pt(2, 0), pt(2, 2)}) == ErrorKind::CollinearRun);
  CHECK(kind_of({pt(0, 0), pt(1, 0)}) == ErrorKind::TooFewVertices);
  CHECK(kind_of({pt(0, 0), pt(1, 0), pt(1, 1), pt(1, 0)}) == ErrorKind::DuplicateVertex);
  // A clockwise input is reversed.
  const SimplePolygon cw = validate_simple({pt(0, 0), pt(0, 2), pt(2, 2), pt(2, 0)});
  CHECK(twice_signed_area(cw.vertices()) > 0);
  // Non-adjacent edges touching at a vertex are a self-intersection too.
  CHECK(kind_of({pt(0, 0), pt(4, 0), pt(4, 4), pt(2, 0), pt(0, 4)}) == ErrorKind::SelfIntersection);
}

TEST_CASE("point_location examples") {
  const SimplePolygon sq = unit_square();
  CHECK(point_location(sq, pt("1/2", "1/2")) == Location::Interior);
  CHECK(point_location(sq, pt("1", "1/2")) == Location::Boundary);
  CHECK(point_location(sq, pt(2, 2)) == Location::Exterior);
  CHECK(point_location(sq, pt(0, 0)) == Location::Boundary);
  CHECK(point_location(sq, pt(-1, 0)) == Location::Exterior);
  CHECK(point_location(l_shape(), pt("3/2", "3/2")) == Location::Exterior);
  CHECK(point_location(l_shape(), pt("1/2", "3/2")) == Location::Interior);
}

TEST_CASE("point_location agrees with a winding-number oracle") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const SimplePolygon p = random_simple_polygon(3 + t % 9, rng());
    std::uniform_int_distribution<long> c(-20, kRandomGrid + 20);
    for (int i = 0; i < 200; ++i) {
      const Point2 q{make_rational(c(rng) * 2 + 1, 2), make_rational(c(rng) * 3 + 1, 3)};
      const Location loc = point_location(p, q);
      if (loc == Location::Boundary) continue;
      CHECK((loc == Location::Interior) == (winding(p, q) != 0));
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(point_location(p, p[i]) == Location::Boundary);
      CHECK(point_location(p, midpoint(p[i], p.vertex(i + 1))) == Location::Boundary);
    }
  }
}

TEST_CASE("convex_hull examples") {
  CHECK(convex_hull(square2()).size() == 4);
  const SimplePolygon l = l_shape();
  std::set<Point2> hull;
  for (std::size_t i : convex_hull(l)) hull.insert(l[i]);
  CHECK(hull == std::set<Point2>{pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 2), pt(0, 2)});
}

TEST_CASE("convex_hull matches the brute-force triple test") {
  // A vertex is on the hull iff it is extreme: not inside or on any
  // triangle of other vertices and not between two others on a line.
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    const SimplePolygon p = random_simple_polygon(3 + t % 12, rng());
    std::set<std::size_t> expected;
    for (std::size_t v = 0; v < p.size(); ++v) {
      bool extreme = true;
      for (std::size_t a = 0; a < p.size() && extreme; ++a) {
        for (std::size_t b = 0; b < p.size() && extreme; ++b) {
          if (a == v || b == v || a == b) continue;
          if (on_segment(p[a], p[b], p[v])) extreme = false;
          for (std::size_t c = 0; c < p.size() && extreme; ++c) {
            if (c == v || c == a || c == b) continue;
            const int s1 = orient2d(p[a], p[b], p[v]), s2 = orient2d(p[b], p[c], p[v]), s3 = orient2d(p[c], p[a], p[v]);
            if (s1 >= 0 && s2 >= 0 && s3 >= 0 && orient2d(p[a], p[b], p[c]) > 0) extreme = false;
          }
        }
      }
      if (extreme) expected.insert(v);
    }
    const auto hull = convex_hull(p);
    CHECK(std::set<std::size_t>(hull.begin(), hull.end()) == expected);
    for (std::size_t i = 0; i < hull.size(); ++i) {
      CHECK(orient2d(p[hull[i]], p[hull[(i + 1) % hull.size()]], p[hull[(i + 2) % hull.size()]]) > 0);
    }
  }
}

TEST_CASE("pockets examples") {
  CHECK(pockets(square2()).empty());
  const Region2 r = pockets(l_shape());
  REQUIRE(r.size() == 1);
  CHECK(as_set(r.faces[0].vertices()) == std::set<Point2>{pt(2, 1), pt(1, 1), pt(1, 2)});
}

TEST_CASE("pockets: area identity and containment on random polygons") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 80; ++t) {
    const SimplePolygon p = random_simple_polygon(4 + t % 14, rng());
    const SimplePolygon hull = hull_polygon(p);
    const Region2 r = pockets(p);
    CHECK(area(hull) == area(p) + area(r));
    for (const SimplePolygon& face : r.faces) {
      // A point just inside a pocket corner: centroid of an ear-ish triangle.
      // Use the centroid of the first three vertices when it lies inside the face.
      for (std::size_t i = 0; i < face.size(); ++i) {
        const Point2 c{(face.vertex(i).x + face.vertex(i + 1).x + face.vertex(i + 2).x) / 3,
                       (face.vertex(i).y + face.vertex(i + 1).y + face.vertex(i + 2).y) / 3};
        if (point_location(face, c) != Location::Interior) continue;
        CHECK(point_location(p, c) == Location::Exterior);
        CHECK(point_location(hull, c) == Location::Interior);
      }
    }
  }
}
