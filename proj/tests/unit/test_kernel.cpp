#include "doctest.h"
#include "helpers.hpp"

#include "gallery/error.hpp"
#include "gallery/predicates.hpp"

#include <cmath>
#include <random>

using namespace gallery;
using testing::pt;
using testing::pt3;

TEST_CASE("rational text form") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("3/-6"), GeometryError);  // denominators are written positive
  CHECK(parse_rational("1/3") == make_rational(2, 6));
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1//2", " 1"}) {
    CHECK_THROWS_AS(parse_rational(bad), GeometryError);
  }
  CHECK(make_rational(4, -8).get_den() == 2);
}

TEST_CASE("orient2d examples") {
  CHECK(orient2d(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
  CHECK(orient2d(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
  CHECK(orient2d(pt(0, 0), pt(0, 1), pt(1, 0)) == -1);
}

TEST_CASE("classify_segments examples") {
  CHECK(classify_segments(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)) == SegmentRelation::ProperCross);
  CHECK(classify_segments(pt(0, 0), pt(2, 0), pt(2, 0), pt(3, 1)) == SegmentRelation::Touch);
  CHECK(classify_segments(pt(0, 0), pt(2, 0), pt(1, 0), pt(3, 0)) == SegmentRelation::Overlap);
  CHECK(classify_segments(pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)) == SegmentRelation::Disjoint);
  CHECK(classify_segments(pt(0, 0), pt(1, 0), pt(1, 0), pt(3, 0)) == SegmentRelation::Touch);
  CHECK(classify_segments(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 5)) == SegmentRelation::Touch);
  CHECK(classify_segments(pt(0, 0), pt(0, 4), pt(0, 1), pt(0, 2)) == SegmentRelation::Overlap);
  CHECK_THROWS_AS(classify_segments(pt(1, 1), pt(1, 1), pt(0, 0), pt(2, 2)), GeometryError);
}

TEST_CASE("orient3d examples") {
  CHECK(orient3d(pt3(0, 0, 0), pt3(1, 0, 0), pt3(0, 1, 0), pt3(0, 0, 1)) == 1);
  CHECK(orient3d(pt3(0, 0, 0), pt3(1, 0, 0), pt3(0, 1, 0), pt3(1, 1, 0)) == 0);
  CHECK(orient3d(pt3(0, 0, 0), pt3(1, 0, 0), pt3(0, 1, 0), pt3(0, 0, -1)) == -1);
}

namespace {

Point2 random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 7);
  return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

long double orient_float(const Point2& a, const Point2& b, const Point2& c) {
  auto d = [](const Rational& r) { return static_cast<long double>(r.get_d()); };
  return (d(b.x) - d(a.x)) * (d(c.y) - d(a.y)) - (d(b.y) - d(a.y)) * (d(c.x) - d(a.x));
}

}  // namespace

TEST_CASE("orient2d antisymmetry and float agreement") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Point2 a = random_point(rng), b = random_point(rng), c = random_point(rng);
    const int s = orient2d(a, b, c);
    CHECK(orient2d(b, a, c) == -s);
    CHECK(orient2d(a, c, b) == -s);
    CHECK(orient2d(c, b, a) == -s);
    CHECK(orient2d(b, c, a) == s);
    const long double f = orient_float(a, b, c);
    if (std::fabs(f) > 1e-9L) CHECK(s == (f > 0 ? 1 : -1));
  }
}

TEST_CASE("orient2d agrees with float on near-degenerate large inputs when far from zero") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> big(-1000000000L, 1000000000L);
  for (int i = 0; i < 1000; ++i) {
    Point2 a{Rational(big(rng)), Rational(big(rng))};
    Point2 b{Rational(big(rng)), Rational(big(rng))};
    Point2 c = midpoint(a, b);
    c.y += make_rational(1, 3);  // tiny offset off the line
    const int s = orient2d(a, b, c);
    CHECK(s == sign(cross2d(a, b, c)));
    CHECK(s != 0);
    const long double f = orient_float(a, b, c);
    if (std::fabs(f) > 1e6L) CHECK(s == (f > 0 ? 1 : -1));
  }
}

TEST_CASE("classify_segments symmetry") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> small(0, 4);
  for (int i = 0; i < 5000; ++i) {
    Point2 a = pt(small(rng), small(rng)), b = pt(small(rng), small(rng));
    Point2 c = pt(small(rng), small(rng)), d = pt(small(rng), small(rng));
    if (a == b || c == d) continue;
    const auto r = classify_segments(a, b, c, d);
    CHECK(classify_segments(c, d, a, b) == r);
    CHECK(classify_segments(b, a, c, d) == r);
    CHECK(classify_segments(a, b, d, c) == r);
  }
}

TEST_CASE("classify_segments against a parametric oracle") {
  // Independent oracle: solve for the intersection parameters directly.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> small(0, 5);
  for (int i = 0; i < 5000; ++i) {
    Point2 a = pt(small(rng), small(rng)), b = pt(small(rng), small(rng));
    Point2 c = pt(small(rng), small(rng)), d = pt(small(rng), small(rng));
    if (a == b || c == d) continue;
    const Rational rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
    const Rational den = rx * sy - ry * sx;
    SegmentRelation expected;
    if (den != 0) {
      const Rational t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / den;
      const Rational u = ((c.x - a.x) * ry - (c.y - a.y) * rx) / den;
      if (t < 0 || t > 1 || u < 0 || u > 1) expected = SegmentRelation::Disjoint;
      else if (t > 0 && t < 1 && u > 0 && u < 1) expected = SegmentRelation::ProperCross;
      else expected = SegmentRelation::Touch;
    } else if ((c.x - a.x) * ry - (c.y - a.y) * rx != 0) {
      expected = SegmentRelation::Disjoint;
    } else {
      // Collinear: project onto the direction and intersect intervals.
      auto proj = [&](const Point2& p) -> Rational { return (p.x - a.x) * rx + (p.y - a.y) * ry; };
      Rational lo1 = 0, hi1 = proj(b);
      Rational lo2 = testing::rmin(proj(c), proj(d)), hi2 = testing::rmax(proj(c), proj(d));
      const Rational lo = testing::rmax(lo1, lo2), hi = testing::rmin(hi1, hi2);
      expected = lo > hi ? SegmentRelation::Disjoint : (lo == hi ? SegmentRelation::Touch : SegmentRelation::Overlap);
    }
    CHECK(classify_segments(a, b, c, d) == expected);
  }
}
