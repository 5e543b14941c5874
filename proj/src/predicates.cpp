#include "gallery/predicates.hpp"

#include "gallery/error.hpp"

#include <algorithm>

namespace gallery {

Rational cross2d(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int orient2d(const Point2& a, const Point2& b, const Point2& c) { return sign(cross2d(a, b, c)); }

int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  const Point3 u = b - a;
  const Point3 v = c - a;
  const Point3 w = d - a;
  return sign(dot(cross(u, v), w));
}

const char* to_string(SegmentRelation relation) {
  switch (relation) {
    case SegmentRelation::Disjoint: return "Disjoint";
    case SegmentRelation::Touch: return "Touch";
    case SegmentRelation::ProperCross: return "ProperCross";
    case SegmentRelation::Overlap: return "Overlap";
  }
  return "Unknown";
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  if (orient2d(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

SegmentRelation classify_segments(const Point2& a, const Point2& b, const Point2& c,
                                  const Point2& d) {
  if (a == b || c == d) throw GeometryError(ErrorKind::DegenerateSegment, "zero-length segment");
  const int o1 = orient2d(a, b, c);
  const int o2 = orient2d(a, b, d);
  const int o3 = orient2d(c, d, a);
  const int o4 = orient2d(c, d, b);

  if (o1 == 0 && o2 == 0) {
    // Collinear: compare the parameter intervals along the dominant axis.
    const bool use_x = a.x != b.x;
    auto key = [use_x](const Point2& p) -> const Rational& { return use_x ? p.x : p.y; };
    Rational lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
    Rational lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
    const Rational lo = std::max(lo1, lo2);
    const Rational hi = std::min(hi1, hi2);
    if (lo < hi) return SegmentRelation::Overlap;
    if (lo == hi) return SegmentRelation::Touch;
    return SegmentRelation::Disjoint;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentRelation::ProperCross;
  if ((o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
      (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b))) {
    return SegmentRelation::Touch;
  }
  return SegmentRelation::Disjoint;
}

}  // namespace gallery
