#pragma once

#include "gallery/polygon.hpp"
#include "gallery/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace gallery {

/// A line given by two distinct points on it.
using LineSupport = std::pair<Point2, Point2>;

/// Non-vertical line y = slope * x + intercept.
struct SweepLine {
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return slope * x + intercept; }
};

/// One trapezoid of the vertical decomposition: the slab
/// (x_left, x_right) between two consecutive non-vertical lines.
struct TrapezoidCell {
  Rational x_left;
  Rational x_right;
  std::size_t lower = 0;  // index into TrapezoidalMap::lines
  std::size_t upper = 0;
  std::vector<Point2> corners;  // counter-clockwise, distinct (3 or 4)
  Point2 witness;               // centroid of the corners, strictly inside
};

struct TrapezoidalMap {
  Box2 box;
  /// Non-vertical lines after de-duplication; the last two are the box
  /// bottom and top.
  std::vector<SweepLine> lines;
  std::vector<Rational> vertical_lines;
  std::vector<TrapezoidCell> cells;  // ordered by x_right, then bottom-up
};

/// Vertical decomposition of `clip_box` by the given lines. Every pairwise
/// intersection of the input lines must lie strictly inside the box;
/// otherwise GeometryError(Precondition) is thrown.
TrapezoidalMap trapezoidal_map(const std::vector<LineSupport>& lines, const Box2& clip_box);

/// Sign of the point relative to the directed line through the support
/// points (orient2d(support.first, support.second, p)).
int side_of(const LineSupport& line, const Point2& p);

}  // namespace gallery
