#pragma once

// Independent reference implementations used to cross-check the library.
// They are deliberately naive: slow, direct formulas, no shared helpers
// beyond the scalar type and orientation sign.

#include "gallery/polygon.hpp"
#include "gallery/predicates.hpp"
#include "gallery/visibility.hpp"

#include <algorithm>
#include <vector>

namespace oracle {

using gallery::Point2;
using gallery::Rational;
using gallery::SimplePolygon;

inline Rational rmin(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline bool on_closed_segment(const Point2& a, const Point2& b, const Point2& p) {
  if (gallery::orient2d(a, b, p) != 0) return false;
  return rmin(a.x, b.x) <= p.x && p.x <= rmax(a.x, b.x) && rmin(a.y, b.y) <= p.y && p.y <= rmax(a.y, b.y);
}

/// -1 strictly inside, 0 on the boundary, +1 strictly outside.
inline int classify(const SimplePolygon& poly, const Point2& q) {
  int w = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly.vertex(i + 1);
    if (on_closed_segment(a, b, q)) return 0;
    if (a.y <= q.y) {
      if (b.y > q.y && gallery::orient2d(a, b, q) > 0) ++w;
    } else if (b.y <= q.y && gallery::orient2d(a, b, q) < 0) {
      --w;
    }
  }
  return w != 0 ? -1 : 1;
}

/// Segment ab stays in the closed region of `side`: split ab at every
/// parameter where it meets the boundary and test each piece's midpoint.
inline bool visible(const SimplePolygon& poly, const Point2& a, const Point2& b, gallery::Side side) {
  const int bad = side == gallery::Side::Exterior ? -1 : 1;
  if (a == b) return classify(poly, a) != bad;
  std::vector<Rational> ts{0, 1};
  const Rational dx = b.x - a.x, dy = b.y - a.y;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly.vertex(i + 1);
    const Rational ex = q.x - p.x, ey = q.y - p.y;
    const Rational den = dx * ey - dy * ex;
    if (den != 0) {
      const Rational t = ((p.x - a.x) * ey - (p.y - a.y) * ex) / den;
      const Rational u = ((p.x - a.x) * dy - (p.y - a.y) * dx) / den;
      if (t >= 0 && t <= 1 && u >= 0 && u <= 1) ts.push_back(t);
    }
    // Vertices lying on ab (covers collinear edges).
    const Rational len2 = dx * dx + dy * dy;
    if (on_closed_segment(a, b, p)) ts.push_back(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2);
  }
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (ts[i] == ts[i + 1]) continue;
    const Rational t = (ts[i] + ts[i + 1]) / 2;
    if (classify(poly, {a.x + t * dx, a.y + t * dy}) == bad) return false;
  }
  for (const Rational& t : ts) {
    if (classify(poly, {a.x + t * dx, a.y + t * dy}) == bad) return false;
  }
  return true;
}

/// Dense-grid plus near-line probe points in the domain of `side`. For
/// Exterior, the grid spans the bounding box of all vertex-pair line
/// intersections enlarged by its extent, so unbounded faces are reached.
inline std::vector<Point2> probe_points(const SimplePolygon& poly, gallery::Side side, int grid) {
  const int bad = side == gallery::Side::Exterior ? -1 : 1;
  const std::size_t n = poly.size();
  Rational xmin = poly[0].x, xmax = poly[0].x, ymin = poly[0].y, ymax = poly[0].y;
  auto grow = [&](const Point2& p) {
    xmin = rmin(xmin, p.x);
    xmax = rmax(xmax, p.x);
    ymin = rmin(ymin, p.y);
    ymax = rmax(ymax, p.y);
  };
  std::vector<std::pair<Point2, Point2>> lines;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) lines.push_back({poly[i], poly[j]});
  }
  std::vector<Point2> crossings;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& [a, b] = lines[i];
      const auto& [p, q] = lines[j];
      const Rational den = (b.x - a.x) * (q.y - p.y) - (b.y - a.y) * (q.x - p.x);
      if (den == 0) continue;
      const Rational s = ((p.x - a.x) * (q.y - p.y) - (p.y - a.y) * (q.x - p.x)) / den;
      crossings.push_back({a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) grow(poly[i]);
  if (side == gallery::Side::Exterior) {
    for (const auto& c : crossings) grow(c);
    const Rational ex = xmax - xmin, ey = ymax - ymin;
    xmin -= ex;
    xmax += ex;
    ymin -= ey;
    ymax += ey;
  }
  std::vector<Point2> out;
  auto keep = [&](const Point2& p) {
    if (classify(poly, p) != bad) out.push_back(p);
  };
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      // Irrational-looking offsets keep grid points off the lines.
      const Rational fx = gallery::make_rational(1000 * i + 137, 1000 * grid + 1001);
      const Rational fy = gallery::make_rational(1000 * j + 291, 1000 * grid + 1003);
      keep({xmin + fx * (xmax - xmin), ymin + fy * (ymax - ymin)});
    }
  }
  // Points just off each vertex-pair line, near every crossing and vertex.
  const Rational eps = gallery::make_rational(1, 1 << 20);
  auto perturb = [&](const Point2& c) {
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        if (dx == 0 && dy == 0) continue;
        keep({c.x + eps * dx, c.y + eps * (2 * dy + dx) / 3});
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i) perturb(poly[i]);
  for (const auto& c : crossings) {
    if (c.x > xmin && c.x < xmax && c.y > ymin && c.y < ymax) perturb(c);
  }
  return out;
}

}  // namespace oracle
