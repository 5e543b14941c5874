#pragma once

#include "gallery/csg.hpp"
#include "gallery/polygon.hpp"
#include "gallery/polyhedron.hpp"
#include "gallery/rational.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace gallery {

/// Named construction with the parameter values its frozen coordinates
/// were derived from.
struct ConstructionSpec {
  std::string name;
  std::vector<std::pair<std::string, Rational>> parameters;
  std::string notes;
};

/// Every construction the library can build, in a fixed order.
std::vector<ConstructionSpec> construction_catalog();

/// 12-gon for which both every-second-vertex placements leave part of the
/// exterior unguarded (frozen coordinates; see tools/derive_leszek).
SimplePolygon leszek_fortress();

/// The polygon together with its mirror image across the line through
/// vertices `edge` and `edge + 1`, glued along that edge. Vertices whose
/// two sides become collinear are removed. Throws if the union is not
/// simple.
SimplePolygon glue_by_reflection(const SimplePolygon& polygon, std::size_t edge);

/// 21-gon: leszek_fortress() glued to its mirror image along the edge with a
/// right angle at one end, so 12 + 12 - 3 vertices remain.
SimplePolygon double_leszek();

/// Index of the glued edge of leszek_fortress() used by double_leszek().
inline constexpr std::size_t kLeszekGlueEdge = 10;

// ---- 3D ----

inline constexpr int kCubeSize = 20;

/// Channel layout of the Überoctoplex. channel_axis[f] is the axis (0..2)
/// the full-length channel on face f runs along; faces are ordered
/// x=0, x=20, y=0, y=20, z=0, z=20.
struct UberoctoplexConfig {
  std::array<int, 6> channel_axis{};
  bool wide_base_at_surface = true;

  friend bool operator==(const UberoctoplexConfig&, const UberoctoplexConfig&) = default;
};

std::string to_string(const UberoctoplexConfig& config);

struct UberoctoplexOutcome {
  UberoctoplexConfig config;
  bool built = false;
  std::string failure;      // why the build was rejected
  FeatureCount features;    // when built
  std::size_t center_observers = 0;
  bool accepted = false;    // V=24, F=26 and blind center
};

/// Builds one configuration: the cube minus six trapezoidal channels
/// (height 4, bases 12 and 10), then every corner cut by the plane through
/// the three of its seven nearby vertices that are farthest from it.
/// Throws GeometryError(ConstructionFailed) when the recipe does not apply.
Polyhedron uberoctoplex_from(const UberoctoplexConfig& config);

/// Opposite faces share a channel axis (2 choices per pair) and the base
/// choice is global: 16 configurations, in a fixed order.
std::vector<UberoctoplexOutcome> enumerate_uberoctoplex();

/// First accepted configuration of enumerate_uberoctoplex(), frozen.
UberoctoplexConfig uberoctoplex_config();
Polyhedron uberoctoplex();

/// Radius of a ball around the center that is entirely blind, found by
/// halving until 1000 probe samples are all unobserved.
Rational uberoctoplex_blind_radius();

/// One axis-aligned cuboid removed from one face of the cube. (u, v) are the
/// face coordinates: the axes after the face normal axis in cyclic order.
/// A range reaching 0 or 20 opens the cutout through that edge.
struct Cutout {
  Rational u0, u1, v0, v1;
  Rational depth;

  friend bool operator==(const Cutout&, const Cutout&) = default;
};

struct OctoplexParams {
  std::array<Cutout, 6> cutouts;  // face order as for UberoctoplexConfig

  friend bool operator==(const OctoplexParams&, const OctoplexParams&) = default;
};

OctoplexParams default_octoplex_params();

/// Axis-aligned cuboid occupied by a cutout, clipped to the cube.
struct CutoutBox {
  Point3 lo, hi;
};
CutoutBox cutout_box(std::size_t face, const Cutout& cutout);

/// Cube minus the six cutouts. Throws GeometryError(InvalidParameters) for
/// empty or out-of-range cutouts and for cutouts whose solids overlap.
Polyhedron octoplex(const OctoplexParams& params = default_octoplex_params());

/// Extra convex regions removed on top of the octoplex cutouts.
struct TruncationParams {
  std::vector<ConvexSolid> cuts;
};

/// Wedge removing the surface strip between face `face` and the near side
/// (`high_side` false) or far side of its cutout's v-range, together with
/// the cutout wall on that side. The slanted face runs from the cube edge
/// to the cutout floor edge. Requires a cutout open along its whole u-range.
ConvexSolid strip_wedge(std::size_t face, const Cutout& cutout, bool high_side);

/// The four wedges on the y faces (the deep channels) of the default octoplex.
TruncationParams default_truncation_params();

Polyhedron truncated_octoplex(const OctoplexParams& params = default_octoplex_params(),
                              const TruncationParams& truncation = default_truncation_params());

}  // namespace gallery
