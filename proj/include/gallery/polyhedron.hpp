#pragma once

#include "gallery/polygon.hpp"
#include "gallery/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gallery {

/// A planar face: one outer loop (counter-clockwise seen from outside) and
/// optional hole loops (clockwise), as vertex indices.
struct Face {
  std::vector<std::size_t> outer;
  std::vector<std::vector<std::size_t>> holes;

  friend bool operator==(const Face&, const Face&) = default;
};

/// Closed orientable boundary mesh.
struct Polyhedron {
  std::vector<Point3> vertices;
  std::vector<Face> faces;

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;
};

struct FeatureCount {
  std::size_t V = 0;
  std::size_t E = 0;
  std::size_t F = 0;
  std::size_t holes = 0;  // hole loops over all faces

  /// V - E + F - holes; 2 for a closed genus-0 solid.
  long euler() const { return static_cast<long>(V) - static_cast<long>(E) + static_cast<long>(F) - static_cast<long>(holes); }

  friend bool operator==(const FeatureCount&, const FeatureCount&) = default;
};

/// Checks the mesh invariants and returns an equivalent mesh in canonical
/// form: adjacent coplanar faces merged into maximal planar patches,
/// vertices that only subdivide a straight edge removed, unused vertices
/// dropped. Throws GeometryError (OpenEdge, NonPlanarFace, BadOrientation)
/// naming the offending feature.
Polyhedron normalize(const Polyhedron& mesh);

/// normalize() followed by counting.
FeatureCount validate(const Polyhedron& mesh);

/// Counts of an already normalized mesh.
FeatureCount count_features(const Polyhedron& mesh);

/// Exact queries against a validated solid. Face planes and projected loops
/// are computed once.
class SolidQuery {
 public:
  explicit SolidQuery(const Polyhedron& mesh);

  const Polyhedron& mesh() const noexcept { return mesh_; }

  Location locate(const Point3& p) const;
  /// True iff segment ab lies in the closed solid. Throws
  /// GeometryError(Precondition) if an endpoint is outside.
  bool visible(const Point3& a, const Point3& b) const;
  std::vector<std::size_t> observers(const Point3& p) const;
  bool observed_by_any_vertex(const Point3& p) const;

  struct FacePlane {
    Point3 normal;  // outward, not normalized
    Rational offset;
    int drop = 2;        // coordinate dropped for projection
    bool swap = false;   // swap the remaining two to keep orientation
    std::vector<std::vector<Point2>> loops;  // outer first
  };

  Point2 project(const FacePlane& face, const Point3& p) const;
  const std::vector<FacePlane>& planes() const noexcept { return planes_; }

 private:
  Location locate_in_face(const FacePlane& face, const Point2& q) const;

  Polyhedron mesh_;
  std::vector<FacePlane> planes_;
};

Location point_in_polyhedron(const Polyhedron& mesh, const Point3& p);
bool visible3(const Polyhedron& mesh, const Point3& a, const Point3& b);
std::vector<std::size_t> vertex_observers(const Polyhedron& mesh, const Point3& p);

struct BlindProbe {
  std::size_t samples = 0;
  std::size_t blind = 0;

  double fraction() const { return samples == 0 ? 0.0 : static_cast<double>(blind) / static_cast<double>(samples); }
};

/// Samples points of the ball of `radius` around `center` that lie in the
/// interior of the solid and counts those no vertex observes. Coordinates
/// are rationals with denominator 2^20 (times the radius); deterministic
/// per seed.
BlindProbe blind_region_probe(const Polyhedron& mesh, const Point3& center, const Rational& radius,
                              std::size_t samples, std::uint64_t seed);

}  // namespace gallery
