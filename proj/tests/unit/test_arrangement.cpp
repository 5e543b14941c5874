#include "doctest.h"
#include "helpers.hpp"

#include "gallery/arrangement.hpp"
#include "gallery/error.hpp"
#include "gallery/predicates.hpp"

#include <random>
#include <set>

using namespace gallery;
using testing::pt;

namespace {

Box2 box(long x0, long y0, long x1, long y1) { return {Rational(x0), Rational(y0), Rational(x1), Rational(y1)}; }

std::vector<int> sign_vector(const std::vector<LineSupport>& lines, const Point2& p) {
  std::vector<int> s;
  for (const auto& l : lines) s.push_back(side_of(l, p));
  return s;
}

bool strictly_inside(const TrapezoidCell& cell, const Point2& p) {
  for (std::size_t i = 0; i < cell.corners.size(); ++i) {
    if (orient2d(cell.corners[i], cell.corners[(i + 1) % cell.corners.size()], p) <= 0) return false;
  }
  return true;
}

Rational total_area(const TrapezoidalMap& m) {
  Rational a = 0;
  for (const auto& c : m.cells) a += twice_signed_area(c.corners) / 2;
  return a;
}

}  // namespace

TEST_CASE("trapezoidal_map examples") {
  const TrapezoidalMap empty = trapezoidal_map({}, box(0, 0, 1, 1));
  REQUIRE(empty.cells.size() == 1);
  CHECK(empty.cells[0].witness == pt("1/2", "1/2"));

  const TrapezoidalMap one = trapezoidal_map({{pt(0, "1/2"), pt(1, "1/2")}}, box(0, 0, 1, 1));
  CHECK(one.cells.size() == 2);

  const std::vector<LineSupport> two{{pt(0, 0), pt(1, 1)}, {pt(0, 1), pt(1, 0)}};
  const TrapezoidalMap cross = trapezoidal_map(two, box(-1, -1, 2, 2));
  std::set<std::vector<int>> cell_vectors;
  for (const auto& c : cross.cells) cell_vectors.insert(sign_vector(two, c.witness));
  CHECK(cell_vectors.size() == 4);
  // Oracle: distinct sign vectors over a dense grid of generic points.
  std::set<std::vector<int>> grid_vectors;
  for (int i = 0; i < 60; ++i) {
    for (int j = 0; j < 60; ++j) {
      const Point2 p{make_rational(-100 + 5 * i + 1, 100), make_rational(-100 + 5 * j + 2, 100)};
      auto s = sign_vector(two, p);
      if (std::find(s.begin(), s.end(), 0) == s.end()) grid_vectors.insert(s);
    }
  }
  CHECK(grid_vectors == cell_vectors);
}

TEST_CASE("trapezoidal_map rejects intersections outside the box") {
  const std::vector<LineSupport> lines{{pt(0, 0), pt(1, 1)}, {pt(0, 1), pt(1, 0)}};
  CHECK_THROWS_AS(trapezoidal_map(lines, box(1, 1, 3, 3)), GeometryError);
  const std::vector<LineSupport> corner{{pt(0, 0), pt(1, 1)}, {pt(0, 2), pt(2, 0)}};
  CHECK_THROWS_AS(trapezoidal_map(corner, box(0, 0, 1, 1)), GeometryError);  // crossing on the corner
  CHECK_NOTHROW(trapezoidal_map(lines, box(0, 0, 1, 1)));
}

TEST_CASE("trapezoidal_map: tiling, witnesses and sign-vector constancy") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> c(0, 20);
  for (int t = 0; t < 30; ++t) {
    std::vector<LineSupport> lines;
    const int count = 1 + t % 9;
    while (static_cast<int>(lines.size()) < count) {
      Point2 a = pt(c(rng), c(rng)), b = pt(c(rng), c(rng));
      if (!(a == b)) lines.push_back({a, b});
    }
    // Box strictly containing all pairwise intersections.
    Rational lo = -1, hi = 21;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        const auto& [a, b] = lines[i];
        const auto& [p, q] = lines[j];
        const Rational den = (b.x - a.x) * (q.y - p.y) - (b.y - a.y) * (q.x - p.x);
        if (den == 0) continue;
        const Rational s = ((p.x - a.x) * (q.y - p.y) - (p.y - a.y) * (q.x - p.x)) / den;
        const Rational x = a.x + s * (b.x - a.x), y = a.y + s * (b.y - a.y);
        lo = testing::rmin(lo, testing::rmin(x, y) - 1);
        hi = testing::rmax(hi, testing::rmax(x, y) + 1);
      }
    }
    const Box2 b{lo, lo, hi, hi};
    const TrapezoidalMap m = trapezoidal_map(lines, b);
    CHECK(total_area(m) == (hi - lo) * (hi - lo));
    std::uniform_int_distribution<long> w(1, 1000);
    for (const auto& cell : m.cells) {
      CHECK(strictly_inside(cell, cell.witness));
      const auto expected = sign_vector(lines, cell.witness);
      CHECK(std::find(expected.begin(), expected.end(), 0) == expected.end());
      for (int k = 0; k < 10; ++k) {
        // Random strict convex combination of the corners.
        Rational sx = 0, sy = 0, sw = 0;
        for (const auto& corner : cell.corners) {
          const Rational wt(w(rng));
          sx += wt * corner.x;
          sy += wt * corner.y;
          sw += wt;
        }
        CHECK(sign_vector(lines, {sx / sw, sy / sw}) == expected);
      }
    }
  }
}
