#pragma once

#include "gallery/rational.hpp"

namespace gallery {

/// Sign of the signed area of triangle abc: +1 counter-clockwise, -1
/// clockwise, 0 collinear.
int orient2d(const Point2& a, const Point2& b, const Point2& c);

/// Twice the signed area of triangle abc.
Rational cross2d(const Point2& a, const Point2& b, const Point2& c);

/// Orientation of d relative to the plane through a, b, c: +1 when
/// (a, b, c, d) is a positively oriented tetrahedron.
int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

enum class SegmentRelation { Disjoint, Touch, ProperCross, Overlap };

const char* to_string(SegmentRelation relation);

/// Relation between closed segments ab and cd. Touch means the segments
/// meet only at an endpoint of at least one of them; Overlap means they
/// share a subsegment of positive length. Throws on zero-length input.
SegmentRelation classify_segments(const Point2& a, const Point2& b, const Point2& c,
                                  const Point2& d);

/// True when p lies on the closed segment ab (a != b).
bool on_segment(const Point2& a, const Point2& b, const Point2& p);

}  // namespace gallery
