#include "gallery/constructions.hpp"

#include "gallery/error.hpp"
#include "gallery/predicates.hpp"

#include <algorithm>

namespace gallery {

namespace {

Point2 ip(long x, long y) { return {Rational(x), Rational(y)}; }

Point3 axis_vector(int axis, long value) {
  Point3 p{0, 0, 0};
  p[axis] = value;
  return p;
}

// Channel cutter on face (k, high): depth 4, trapezoid across the width
// axis, unbounded (beyond the cube) along `along`.
ConvexSolid trapezoid_channel(int k, bool high, int along, const Rational& surface_width,
                              const Rational& floor_width) {
  const int w = 3 - k - along;
  const Rational n = kCubeSize;
  ConvexSolid c;
  // depth t = 20 - x_k on the high face, x_k on the low one; 4 >= t >= -1
  if (high) {
    c.halfspaces.push_back({axis_vector(k, -1), Rational(-(n - 4))});
    c.halfspaces.push_back({axis_vector(k, 1), Rational(n + 1)});
  } else {
    c.halfspaces.push_back({axis_vector(k, 1), Rational(4)});
    c.halfspaces.push_back({axis_vector(k, -1), Rational(1)});
  }
  c.halfspaces.push_back({axis_vector(along, 1), Rational(n + 1)});
  c.halfspaces.push_back({axis_vector(along, -1), Rational(1)});
  // |x_w - 10| <= surface/2 + (floor - surface)/8 * t
  const Rational slope = (floor_width - surface_width) / 8;
  for (int s : {1, -1}) {
    Point3 normal = axis_vector(w, s);
    Rational offset = s * (n / 2) + surface_width / 2;
    if (high) {
      normal[k] = slope;
      offset += slope * n;
    } else {
      normal[k] = -slope;
    }
    c.halfspaces.push_back({normal, offset});
  }
  return c;
}

std::vector<ConvexSolid> uber_channels(const UberoctoplexConfig& config) {
  const Rational wide = 12, narrow = 10;
  std::vector<ConvexSolid> cuts;
  for (int f = 0; f < 6; ++f) {
    const int k = f / 2;
    const int along = config.channel_axis[static_cast<std::size_t>(f)];
    if (along == k || along < 0 || along > 2) {
      throw GeometryError(ErrorKind::InvalidParameters, "channel axis must lie in its face");
    }
    cuts.push_back(config.wide_base_at_surface ? trapezoid_channel(k, f % 2 == 1, along, wide, narrow)
                                               : trapezoid_channel(k, f % 2 == 1, along, narrow, wide));
  }
  return cuts;
}

ConvexSolid cube_solid() {
  return box_solid({0, 0, 0}, {kCubeSize, kCubeSize, kCubeSize});
}

}  // namespace

SimplePolygon leszek_fortress() {
  // Two ratchet-shaped chambers around X = (0,0) and Y = (30,2) (Y's is the
  // half-turn of X's about the midpoint of a1 b3). From X only the tips a_i
  // (even indices) are visible, from Y only the odd ones; the outer triangle
  // closes the single pocket.
  return validate_simple({
      ip(53, -31),   // HR = half-turn of b1
      ip(20, 2),     // b3
      ip(-5, -9),    // a3
      ip(-8, -18),   // b2
      ip(-5, 9),     // a2
      ip(-23, 33),   // b1
      ip(10, 0),     // a1
      ip(35, 11),    // c2
      ip(38, 20),    // d1
      ip(35, -7),    // c1
      ip(111, 675),  // HL
      ip(-33, -13),  // H0, right angle
  });
}

SimplePolygon glue_by_reflection(const SimplePolygon& polygon, std::size_t edge) {
  const std::size_t n = polygon.size();
  if (edge >= n) throw GeometryError(ErrorKind::InvalidParameters, "glue edge out of range");
  const Point2& a = polygon[edge];
  const Point2& b = polygon.vertex(edge + 1);
  const Rational dx = b.x - a.x, dy = b.y - a.y;
  const Rational dd = dx * dx + dy * dy;
  auto reflect = [&](const Point2& p) {
    const Rational t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / dd;
    const Rational fx = a.x + t * dx, fy = a.y + t * dy;
    return Point2{Rational(2 * fx - p.x), Rational(2 * fy - p.y)};
  };
  // own boundary from b round to a, then the mirror copy back from a to b
  std::vector<Point2> ring;
  for (std::size_t k = 0; k < n; ++k) ring.push_back(polygon.vertex(edge + 1 + k));
  for (std::size_t k = 1; k + 1 < n; ++k) ring.push_back(reflect(polygon.vertex(edge + n - k)));

  std::vector<Point2> out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point2& p = ring[(i + ring.size() - 1) % ring.size()];
    const Point2& q = ring[(i + 1) % ring.size()];
    if (orient2d(p, ring[i], q) != 0) out.push_back(ring[i]);
  }
  return validate_simple(std::move(out));
}

SimplePolygon double_leszek() { return glue_by_reflection(leszek_fortress(), kLeszekGlueEdge); }

std::string to_string(const UberoctoplexConfig& config) {
  std::string s;
  for (int a : config.channel_axis) s += "xyz"[a];
  s += config.wide_base_at_surface ? "/wide-out" : "/narrow-out";
  return s;
}

Polyhedron uberoctoplex_from(const UberoctoplexConfig& config) {
  const ConvexSolid cube = cube_solid();
  std::vector<ConvexSolid> cuts = uber_channels(config);
  const Polyhedron channelled = subtract(cube, cuts);

  for (int c = 0; c < 8; ++c) {
    const Point3 corner{Rational(c & 1 ? kCubeSize : 0), Rational(c & 2 ? kCubeSize : 0),
                        Rational(c & 4 ? kCubeSize : 0)};
    std::vector<std::pair<Rational, Point3>> near;
    for (const Point3& v : channelled.vertices) {
      const Point3 d = v - corner;
      if (abs(d.x) <= 6 && abs(d.y) <= 6 && abs(d.z) <= 6) near.emplace_back(dot(d, d), v);
    }
    std::sort(near.begin(), near.end());
    if (near.size() != 7 || sign(near[0].first) != 0) {
      throw GeometryError(ErrorKind::ConstructionFailed,
                          "corner " + to_string(corner) + " has " + std::to_string(near.size()) + " nearby vertices, expected 7");
    }
    if (near[3].first == near[4].first) {
      throw GeometryError(ErrorKind::ConstructionFailed, "three farthest corner vertices are not unique");
    }
    Point3 normal = cross(near[5].second - near[4].second, near[6].second - near[4].second);
    Rational offset = dot(normal, near[4].second);
    if (dot(normal, corner) > offset) {
      normal = Rational(-1) * normal;
      offset = -offset;
    }
    cuts.push_back(ConvexSolid{{Halfspace{normal, offset}}});
  }
  return subtract(cube, cuts);
}

std::vector<UberoctoplexOutcome> enumerate_uberoctoplex() {
  std::vector<UberoctoplexOutcome> out;
  for (int wide = 1; wide >= 0; --wide) {
    for (int pattern = 0; pattern < 8; ++pattern) {
      UberoctoplexOutcome o;
      for (int k = 0; k < 3; ++k) {
        const int along = ((pattern >> k) & 1) ? (k + 2) % 3 : (k + 1) % 3;
        o.config.channel_axis[static_cast<std::size_t>(2 * k)] = along;
        o.config.channel_axis[static_cast<std::size_t>(2 * k + 1)] = along;
      }
      o.config.wide_base_at_surface = wide == 1;
      try {
        const Polyhedron p = uberoctoplex_from(o.config);
        o.built = true;
        o.features = count_features(p);
        o.center_observers = vertex_observers(p, {10, 10, 10}).size();
        o.accepted = o.features.V == 24 && o.features.F == 26 && o.center_observers == 0;
      } catch (const GeometryError& e) {
        o.failure = e.what();
      }
      out.push_back(std::move(o));
    }
  }
  return out;
}

UberoctoplexConfig uberoctoplex_config() {
  // enumerate_uberoctoplex() accepts exactly this layout and its mirror
  // image (faces x along z, y along x, z along y); the first is frozen.
  return UberoctoplexConfig{{1, 1, 2, 2, 0, 0}, true};
}

Polyhedron uberoctoplex() {
  static const Polyhedron built = uberoctoplex_from(uberoctoplex_config());
  return built;
}

Rational uberoctoplex_blind_radius() {
  // halving from half the cube size; the value is frozen in the tests
  static const Rational radius = [] {
    const Polyhedron mesh = uberoctoplex();
    Rational r = Rational(kCubeSize) / 2;
    while (blind_region_probe(mesh, {10, 10, 10}, r, 1000, 1).fraction() < 1) r /= 2;
    return r;
  }();
  return radius;
}

OctoplexParams default_octoplex_params() {
  // first hit of tools/derive_octoplex. Full-length channels: the x pair
  // runs along y, the y pair along z, the z pair along x. Only the y
  // channels are deeper than their neighbours' offsets, which is what
  // hides the cube corners.
  const Cutout x_face{0, 20, 3, 17, 2};
  const Cutout y_face{0, 20, 3, 17, 4};
  const Cutout z_face{0, 20, 5, 15, 2};
  return OctoplexParams{{x_face, x_face, y_face, y_face, z_face, z_face}};
}

namespace {

void check_cutout(std::size_t face, const Cutout& c) {
  const Rational n = kCubeSize;
  const std::string where = "cutout on face " + std::to_string(face);
  if (face >= 6) throw GeometryError(ErrorKind::InvalidParameters, where + ": no such face");
  if (sign(c.depth) <= 0 || c.depth >= n) {
    throw GeometryError(ErrorKind::InvalidParameters, where + ": depth must lie strictly between 0 and 20");
  }
  for (const auto& [lo, hi] : {std::pair{c.u0, c.u1}, std::pair{c.v0, c.v1}}) {
    if (sign(lo) < 0 || hi > n || lo >= hi) {
      throw GeometryError(ErrorKind::InvalidParameters, where + ": empty or out-of-range extent");
    }
  }
  if (sign(c.u0) == 0 && c.u1 == n && sign(c.v0) == 0 && c.v1 == n) {
    throw GeometryError(ErrorKind::InvalidParameters, where + ": covers the whole face");
  }
}

bool open_boxes_meet(const CutoutBox& a, const CutoutBox& b) {
  for (int k = 0; k < 3; ++k) {
    if (std::min(a.hi[k], b.hi[k]) <= std::max(a.lo[k], b.lo[k])) return false;
  }
  return true;
}

// cutter for a cutout: sides reaching the cube boundary are pushed one
// unit past it so no sliver faces remain
ConvexSolid cutout_cutter(const CutoutBox& box) {
  Point3 lo = box.lo, hi = box.hi;
  for (int k = 0; k < 3; ++k) {
    if (sign(lo[k]) == 0) lo[k] = -1;
    if (hi[k] == kCubeSize) hi[k] = kCubeSize + 1;
  }
  return box_solid(lo, hi);
}

std::vector<ConvexSolid> octoplex_cutters(const OctoplexParams& params) {
  std::vector<CutoutBox> boxes;
  for (std::size_t f = 0; f < 6; ++f) {
    check_cutout(f, params.cutouts[f]);
    boxes.push_back(cutout_box(f, params.cutouts[f]));
  }
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      if (open_boxes_meet(boxes[i], boxes[j])) {
        throw GeometryError(ErrorKind::InvalidParameters,
                            "cutouts on faces " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      }
    }
  }
  std::vector<ConvexSolid> cuts;
  for (const CutoutBox& b : boxes) cuts.push_back(cutout_cutter(b));
  return cuts;
}

}  // namespace

CutoutBox cutout_box(std::size_t face, const Cutout& cutout) {
  check_cutout(face, cutout);
  const int k = static_cast<int>(face / 2), u = (k + 1) % 3, v = (k + 2) % 3;
  CutoutBox b;
  b.lo[u] = cutout.u0;
  b.hi[u] = cutout.u1;
  b.lo[v] = cutout.v0;
  b.hi[v] = cutout.v1;
  if (face % 2 == 1) {
    b.lo[k] = kCubeSize - cutout.depth;
    b.hi[k] = kCubeSize;
  } else {
    b.lo[k] = 0;
    b.hi[k] = cutout.depth;
  }
  return b;
}

Polyhedron octoplex(const OctoplexParams& params) {
  return subtract(cube_solid(), octoplex_cutters(params));
}

ConvexSolid strip_wedge(std::size_t face, const Cutout& cutout, bool high_side) {
  check_cutout(face, cutout);
  const Rational n = kCubeSize;
  if (sign(cutout.u0) != 0 || cutout.u1 != n) {
    throw GeometryError(ErrorKind::InvalidParameters, "strip wedge needs a cutout open along its whole length");
  }
  const Rational strip = high_side ? n - cutout.v1 : cutout.v0;
  if (sign(strip) == 0) throw GeometryError(ErrorKind::InvalidParameters, "no surface strip on that side");

  const int k = static_cast<int>(face / 2), v = (k + 2) % 3;
  const bool high_face = face % 2 == 1;
  // removed: depth below the face t < depth * s / strip, where s is the
  // distance from the cube edge across the strip
  Halfspace slant;
  slant.normal[v] = high_side ? cutout.depth : -cutout.depth;
  slant.normal[k] = high_face ? -strip : strip;
  slant.offset = (high_side ? n * cutout.depth : Rational(0)) - (high_face ? n * strip : Rational(0));
  Halfspace side;
  side.normal[v] = high_side ? -1 : 1;
  side.offset = high_side ? -cutout.v1 : cutout.v0;
  return ConvexSolid{{slant, side}};
}

TruncationParams default_truncation_params() {
  const OctoplexParams p = default_octoplex_params();
  TruncationParams t;
  for (std::size_t face : {2u, 3u}) {
    for (bool high : {false, true}) t.cuts.push_back(strip_wedge(face, p.cutouts[face], high));
  }
  return t;
}

Polyhedron truncated_octoplex(const OctoplexParams& params, const TruncationParams& truncation) {
  std::vector<ConvexSolid> cuts = octoplex_cutters(params);
  cuts.insert(cuts.end(), truncation.cuts.begin(), truncation.cuts.end());
  return subtract(cube_solid(), cuts);
}

std::vector<ConstructionSpec> construction_catalog() {
  std::vector<ConstructionSpec> out;
  out.push_back({"leszek",
                 {{"r", 10}, {"Rb1", 40}, {"Rb2", 20}, {"Rb3", 20}, {"delta_deg", 5}},
                 "12-gon, two ratchet chambers, right angle at the last vertex"});
  out.push_back({"double-leszek", {{"glue_edge", static_cast<long>(kLeszekGlueEdge)}},
                 "leszek glued to its mirror image, 21 vertices"});
  out.push_back({"uberoctoplex", {{"cube", kCubeSize}, {"height", 4}, {"base_surface", 12}, {"base_floor", 10}},
                 "cube minus six trapezoid channels, corners sliced; " + to_string(uberoctoplex_config())});
  const OctoplexParams o = default_octoplex_params();
  ConstructionSpec oct{"octoplex", {{"cube", kCubeSize}}, "cube minus six full-length rectangular channels"};
  for (std::size_t f = 0; f < 6; ++f) {
    const Cutout& c = o.cutouts[f];
    const std::string tag = "face" + std::to_string(f) + ".";
    oct.parameters.push_back({tag + "v0", c.v0});
    oct.parameters.push_back({tag + "v1", c.v1});
    oct.parameters.push_back({tag + "depth", c.depth});
  }
  out.push_back(oct);
  out.push_back({"truncated-octoplex", {{"wedges", 4}},
                 "octoplex minus the four strip-and-wall wedges on the y faces"});
  return out;
}

}  // namespace gallery
