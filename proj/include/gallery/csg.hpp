#pragma once

#include "gallery/polyhedron.hpp"
#include "gallery/rational.hpp"

#include <vector>

namespace gallery {

/// {x : normal . x <= offset}
struct Halfspace {
  Point3 normal;
  Rational offset;
};

/// Intersection of halfspaces. As a cutter it removes its open interior.
struct ConvexSolid {
  std::vector<Halfspace> halfspaces;
};

ConvexSolid box_solid(const Point3& lo, const Point3& hi);

/// Exact boundary of closure(base minus the union of the cutters),
/// normalized. Faces are computed plane by plane: each segment of the
/// plane-line arrangement is tested on both sides with infinitesimal
/// offsets, so coincident planes and touching cutters need no special
/// handling. Throws GeometryError(ConstructionFailed) if the result is not
/// a valid closed mesh.
Polyhedron subtract(const ConvexSolid& base, const std::vector<ConvexSolid>& cutters);

/// Membership of a point in closure(base minus cutters), exact.
bool csg_contains(const ConvexSolid& base, const std::vector<ConvexSolid>& cutters, const Point3& p);

}  // namespace gallery
