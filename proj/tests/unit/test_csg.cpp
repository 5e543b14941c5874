#include "doctest.h"
#include "helpers.hpp"

#include "gallery/csg.hpp"
#include "gallery/error.hpp"

using namespace gallery;
using testing::pt3;

namespace {

ConvexSolid cube20() { return box_solid(pt3(0, 0, 0), pt3(20, 20, 20)); }

}  // namespace

TEST_CASE("box cutouts change the counts as expected") {
  CHECK(validate(subtract(cube20(), {})) == FeatureCount{8, 12, 6, 0});
  // blind pocket: one hole loop in the bottom face
  CHECK(validate(subtract(cube20(), {box_solid(pt3(5, 5, -1), pt3(15, 15, 5))})) == FeatureCount{16, 24, 11, 1});
  // slot open through one edge
  CHECK(validate(subtract(cube20(), {box_solid(pt3(5, -1, -1), pt3(15, 10, 5))})) == FeatureCount{16, 24, 10, 0});
  // full channel
  CHECK(validate(subtract(cube20(), {box_solid(pt3(5, -1, -1), pt3(15, 21, 5))})) == FeatureCount{16, 24, 10, 0});
  // corner notch
  CHECK(validate(subtract(cube20(), {box_solid(pt3(-1, -1, -1), pt3(5, 5, 5))})) == FeatureCount{14, 21, 9, 0});
}

TEST_CASE("slanted cut and containment") {
  // chop one corner: a triangle appears
  const ConvexSolid corner{{Halfspace{pt3(1, 1, 1), 3}}};
  CHECK(validate(subtract(cube20(), {corner})) == FeatureCount{10, 15, 7, 0});
  CHECK(csg_contains(cube20(), {corner}, pt3(10, 10, 10)));
  CHECK_FALSE(csg_contains(cube20(), {corner}, pt3(1, 1, 0)));
  CHECK(csg_contains(cube20(), {corner}, pt3(3, 0, 0)));  // on the cut plane
  CHECK_FALSE(csg_contains(cube20(), {corner}, pt3(21, 0, 5)));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(box_solid(pt3(0, 0, 0), pt3(0, 1, 1)), GeometryError);
  CHECK_THROWS_AS(box_solid(pt3(0, 0, 0), pt3(1, -1, 1)), GeometryError);
  // two separate pieces: closed, but the Euler sum shows two components
  const auto halves = subtract(cube20(), {box_solid(pt3(9, -1, -1), pt3(11, 21, 21))});
  CHECK(validate(halves).euler() == 4);
}
