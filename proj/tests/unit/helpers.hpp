#pragma once

#include "gallery/polygon.hpp"
#include "gallery/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

namespace testing {

inline gallery::Rational rmin(const gallery::Rational& a, const gallery::Rational& b) { return a < b ? a : b; }
inline gallery::Rational rmax(const gallery::Rational& a, const gallery::Rational& b) { return a < b ? b : a; }

/// A coordinate written either as an integer or as rational text.
struct Coord {
  gallery::Rational value;
  Coord(int v) : value(v) {}
  Coord(long v) : value(v) {}
  Coord(const char* text) : value(gallery::parse_rational(text)) {}
};

inline gallery::Point2 pt(Coord x, Coord y) { return {x.value, y.value}; }
inline gallery::Point3 pt3(long x, long y, long z) {
  return {gallery::Rational(x), gallery::Rational(y), gallery::Rational(z)};
}

inline gallery::SimplePolygon poly(std::initializer_list<std::pair<long, long>> coords) {
  std::vector<gallery::Point2> pts;
  for (auto [x, y] : coords) pts.push_back(pt(x, y));
  return gallery::validate_simple(std::move(pts));
}

inline gallery::SimplePolygon square2() { return poly({{0, 0}, {2, 0}, {2, 2}, {0, 2}}); }
inline gallery::SimplePolygon unit_square() { return poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
inline gallery::SimplePolygon l_shape() { return poly({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}); }

}  // namespace testing
