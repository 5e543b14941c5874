#pragma once

#include "gallery/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gallery {

/// Simple polygon with counter-clockwise vertices. Construct through
/// validate_simple(), which enforces the invariants: at least three
/// vertices, no repeated vertex, no three consecutive collinear vertices,
/// no self-intersection, positive signed area.
class SimplePolygon {
 public:
  SimplePolygon() = default;

  std::size_t size() const noexcept { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  std::span<const Point2> vertices() const noexcept { return vertices_; }

  std::size_t next(std::size_t i) const noexcept { return (i + 1) % vertices_.size(); }
  std::size_t prev(std::size_t i) const noexcept { return (i + vertices_.size() - 1) % vertices_.size(); }

  friend bool operator==(const SimplePolygon&, const SimplePolygon&) = default;

 private:
  friend SimplePolygon validate_simple(std::vector<Point2> points);
  explicit SimplePolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {}

  std::vector<Point2> vertices_;
};

/// Validates and normalizes to counter-clockwise order. Throws
/// GeometryError (TooFewVertices, DuplicateVertex, CollinearRun,
/// SelfIntersection) naming the offending vertices or edges.
SimplePolygon validate_simple(std::vector<Point2> points);

/// Twice the signed area (shoelace sum).
Rational twice_signed_area(std::span<const Point2> points);
Rational area(const SimplePolygon& polygon);

enum class Location { Interior, Boundary, Exterior };

const char* to_string(Location location);

Location point_location(const SimplePolygon& polygon, const Point2& p);

/// Indices of the convex hull vertices in counter-clockwise order, starting
/// from the lexicographically smallest vertex. Collinear hull-boundary
/// vertices are excluded.
std::vector<std::size_t> convex_hull(const SimplePolygon& polygon);

/// Hull as a polygon (vertices in hull order).
SimplePolygon hull_polygon(const SimplePolygon& polygon);

/// A set of pairwise interior-disjoint simple polygons.
struct Region2 {
  std::vector<SimplePolygon> faces;

  bool empty() const noexcept { return faces.empty(); }
  std::size_t size() const noexcept { return faces.size(); }
};

Rational area(const Region2& region);

/// Closures of the bounded components of Conv(P) minus P. Each pocket is a
/// simple polygon made of one hull bridge edge and a boundary chain of P.
Region2 pockets(const SimplePolygon& polygon);

/// Axis-aligned bounding box of a point set.
struct Box2 {
  Rational xmin, ymin, xmax, ymax;
};

Box2 bounding_box(std::span<const Point2> points);

}  // namespace gallery
