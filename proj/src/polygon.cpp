#include "gallery/polygon.hpp"

#include "gallery/error.hpp"
#include "gallery/predicates.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gallery {

namespace {

std::string edge_name(std::size_t i, std::size_t n) {
  return "edge " + std::to_string(i) + "-" + std::to_string((i + 1) % n);
}

}  // namespace

Rational twice_signed_area(std::span<const Point2> points) {
  Rational sum = 0;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = points[i];
    const Point2& b = points[(i + 1) % n];
    sum += a.x * b.y - b.x * a.y;
  }
  return sum;
}

Rational area(const SimplePolygon& polygon) { return twice_signed_area(polygon.vertices()) / 2; }

SimplePolygon validate_simple(std::vector<Point2> points) {
  const std::size_t n = points.size();
  if (n < 3) {
    throw GeometryError(ErrorKind::TooFewVertices, std::to_string(n) + " vertices given, need at least 3");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  for (std::size_t k = 1; k < n; ++k) {
    if (points[order[k - 1]] == points[order[k]]) {
      throw GeometryError(ErrorKind::DuplicateVertex,
                          "vertices " + std::to_string(std::min(order[k - 1], order[k])) + " and " +
                              std::to_string(std::max(order[k - 1], order[k])) + " coincide at " +
                              to_string(points[order[k]]));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = (i + n - 1) % n;
    const std::size_t q = (i + 1) % n;
    if (orient2d(points[p], points[i], points[q]) == 0) {
      throw GeometryError(ErrorKind::CollinearRun, "vertices " + std::to_string(p) + ", " + std::to_string(i) +
                                                       ", " + std::to_string(q) + " are collinear");
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const SegmentRelation rel =
          classify_segments(points[i], points[(i + 1) % n], points[j], points[(j + 1) % n]);
      const SegmentRelation allowed = adjacent ? SegmentRelation::Touch : SegmentRelation::Disjoint;
      if (rel != allowed) {
        throw GeometryError(ErrorKind::SelfIntersection,
                            edge_name(i, n) + " and " + edge_name(j, n) + " (" + to_string(rel) + ")");
      }
    }
  }

  if (sign(twice_signed_area(points)) < 0) std::reverse(points.begin(), points.end());
  return SimplePolygon(std::move(points));
}

const char* to_string(Location location) {
  switch (location) {
    case Location::Interior: return "interior";
    case Location::Boundary: return "boundary";
    case Location::Exterior: return "exterior";
  }
  return "unknown";
}

Location point_location(const SimplePolygon& polygon, const Point2& p) {
  const std::size_t n = polygon.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = polygon[i];
    const Point2& b = polygon.vertex(i + 1);
    if (on_segment(a, b, p)) return Location::Boundary;
    const bool a_above = a.y > p.y;
    const bool b_above = b.y > p.y;
    if (a_above == b_above) continue;
    // Edge straddles the horizontal line through p; it crosses the ray to
    // the right when p is left of the upward-directed edge.
    const int o = orient2d(a, b, p);
    if (b_above ? o > 0 : o < 0) inside = !inside;
  }
  return inside ? Location::Interior : Location::Exterior;
}

std::vector<std::size_t> convex_hull(const SimplePolygon& polygon) {
  const std::size_t n = polygon.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return polygon[a] < polygon[b]; });

  std::vector<std::size_t> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && orient2d(polygon[hull[k - 2]], polygon[hull[k - 1]], polygon[idx[i]]) <= 0) --k;
    hull[k++] = idx[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i > 0; --i) {
    while (k >= t && orient2d(polygon[hull[k - 2]], polygon[hull[k - 1]], polygon[idx[i - 1]]) <= 0) --k;
    hull[k++] = idx[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

SimplePolygon hull_polygon(const SimplePolygon& polygon) {
  std::vector<Point2> pts;
  for (std::size_t i : convex_hull(polygon)) pts.push_back(polygon[i]);
  return validate_simple(std::move(pts));
}

Rational area(const Region2& region) {
  Rational sum = 0;
  for (const auto& face : region.faces) sum += area(face);
  return sum;
}

Region2 pockets(const SimplePolygon& polygon) {
  const std::size_t n = polygon.size();
  std::vector<std::size_t> hull = convex_hull(polygon);
  // Polygon and hull are both counter-clockwise, so hull vertices appear
  // in the same cyclic order along the polygon. Rotate the hull so the
  // walk starts at its smallest polygon index.
  std::rotate(hull.begin(), std::min_element(hull.begin(), hull.end()), hull.end());

  Region2 region;
  const std::size_t m = hull.size();
  for (std::size_t h = 0; h < m; ++h) {
    const std::size_t from = hull[h];
    const std::size_t to = hull[(h + 1) % m];
    const Point2& a = polygon[from];
    const Point2& b = polygon[to];

    // Chain from `from` to `to`, split wherever it touches the bridge.
    std::vector<Point2> chain{a};
    for (std::size_t i = (from + 1) % n;; i = (i + 1) % n) {
      chain.push_back(polygon[i]);
      const bool end = i == to;
      if (end || on_segment(a, b, polygon[i])) {
        if (chain.size() >= 3) region.faces.push_back(validate_simple(chain));
        chain.assign(1, polygon[i]);
      }
      if (end) break;
    }
  }
  return region;
}

Box2 bounding_box(std::span<const Point2> points) {
  Box2 box{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const auto& p : points) {
    box.xmin = std::min(box.xmin, p.x);
    box.xmax = std::max(box.xmax, p.x);
    box.ymin = std::min(box.ymin, p.y);
    box.ymax = std::max(box.ymax, p.y);
  }
  return box;
}

}  // namespace gallery
