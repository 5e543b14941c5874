#include "gallery/visibility.hpp"

#include "gallery/error.hpp"
#include "gallery/parallel.hpp"
#include "gallery/predicates.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

namespace gallery {

const char* to_string(Side side) { return side == Side::Interior ? "interior" : "exterior"; }

namespace {

bool in_closed_side(Location loc, Side side) {
  if (loc == Location::Boundary) return true;
  return side == Side::Interior ? loc == Location::Interior : loc == Location::Exterior;
}

// Parameter of p along segment ab (p known to lie on the line ab).
Rational parameter_on(const Point2& a, const Point2& b, const Point2& p) {
  if (a.x != b.x) return (p.x - a.x) / (b.x - a.x);
  return (p.y - a.y) / (b.y - a.y);
}

Point2 lerp(const Point2& a, const Point2& b, const Rational& t) {
  return {Rational(a.x + t * (b.x - a.x)), Rational(a.y + t * (b.y - a.y))};
}

// Exact visibility from points in general position with respect to the
// vertex-pair lines. Vertex coordinates are scaled to integers and each
// query point is written as (X/Q, Y/Q), so every orientation test is one
// integer linear form.
class PairLineTable {
 public:
  explicit PairLineTable(const SimplePolygon& polygon) : n_(polygon.size()) {
    for (const auto& v : polygon.vertices()) {
      mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), v.x.get_den_mpz_t());
      mpz_lcm(scale_.get_mpz_t(), scale_.get_mpz_t(), v.y.get_den_mpz_t());
    }
    for (const auto& v : polygon.vertices()) {
      xs_.push_back(Integer(v.x * scale_));
      ys_.push_back(Integer(v.y * scale_));
    }
    a_.resize(n_ * n_);
    b_.resize(n_ * n_);
    c_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        a_[i * n_ + j] = ys_[i] - ys_[j];
        b_[i * n_ + j] = xs_[j] - xs_[i];
        c_[i * n_ + j] = xs_[i] * ys_[j] - ys_[i] * xs_[j];
      }
    }
    edge_side_.assign(n_ * n_, 0);
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t v = 0; v < n_; ++v) {
        edge_side_[k * n_ + v] =
            static_cast<signed char>(orient2d(polygon[k], polygon.vertex(k + 1), polygon[v]));
      }
    }
  }

  struct Query {
    std::vector<signed char> sides;  // orient(v_i, v_j, w) for i < j
    bool generic = true;
    bool interior = false;
  };

  // Evaluates all pair-line signs at w. `generic` is false if w lies on any
  // vertex-pair line.
  void evaluate(const Point2& w, Query& q) const {
    Rational sx = w.x * scale_;
    Rational sy = w.y * scale_;
    Integer Q;
    mpz_lcm(Q.get_mpz_t(), sx.get_den_mpz_t(), sy.get_den_mpz_t());
    Integer X(Rational(sx * Q));
    Integer Y(Rational(sy * Q));
    q.sides.assign(n_ * n_, 0);
    q.generic = true;
    mpz_t t;
    mpz_init(t);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        const std::size_t k = i * n_ + j;
        mpz_mul(t, a_[k].get_mpz_t(), X.get_mpz_t());
        mpz_addmul(t, b_[k].get_mpz_t(), Y.get_mpz_t());
        mpz_addmul(t, c_[k].get_mpz_t(), Q.get_mpz_t());
        const int s = mpz_sgn(t);
        if (s == 0) q.generic = false;
        q.sides[k] = static_cast<signed char>(s);
      }
    }
    if (q.generic) {
      bool inside = false;
      Integer yq;
      std::vector<bool> above(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        yq = ys_[i] * Q;
        above[i] = yq > Y;
      }
      for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t j = (i + 1) % n_;
        if (above[i] == above[j]) continue;
        const int o = orient(q, i, j);
        if (above[j] ? o > 0 : o < 0) inside = !inside;
      }
      q.interior = inside;
    }
    mpz_clear(t);
  }

  int orient(const Query& q, std::size_t i, std::size_t j) const {
    return i < j ? q.sides[i * n_ + j] : -q.sides[j * n_ + i];
  }

  // Mask of vertices visible from a generic query point.
  VertexMask mask(const Query& q) const {
    VertexMask m(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      bool blocked = false;
      for (std::size_t k = 0; k < n_ && !blocked; ++k) {
        const std::size_t e1 = (k + 1) % n_;
        if (k == v || e1 == v) continue;
        const int d1 = orient(q, k, e1);
        const int d2 = edge_side_[k * n_ + v];
        if (d1 * d2 >= 0) continue;
        const int d3 = orient(q, v, k);
        const int d4 = orient(q, v, e1);
        if (d3 * d4 < 0) blocked = true;
      }
      if (!blocked) m.set(v);
    }
    return m;
  }

 private:
  std::size_t n_;
  Integer scale_{1};
  std::vector<Integer> xs_, ys_;
  std::vector<Integer> a_, b_, c_;
  std::vector<signed char> edge_side_;
};

VertexMask mask_from_indices(std::size_t n, const std::vector<std::size_t>& indices) {
  VertexMask m(n);
  for (std::size_t i : indices) m.set(i);
  return m;
}

// Visible-vertex mask of any point in the closed domain, using the fast
// path when the point is generic.
VertexMask point_mask(const SimplePolygon& polygon, const PairLineTable& table, const Point2& p, Side side,
                      PairLineTable::Query& scratch) {
  table.evaluate(p, scratch);
  if (scratch.generic) return table.mask(scratch);
  return mask_from_indices(polygon.size(), visible_vertex_set(polygon, p, side));
}

Box2 arrangement_bounds(const SimplePolygon& polygon, const std::vector<LineSupport>& lines) {
  Box2 box = bounding_box(polygon.vertices());
  auto extend = [&box](const Point2& p) {
    box.xmin = std::min(box.xmin, p.x);
    box.xmax = std::max(box.xmax, p.x);
    box.ymin = std::min(box.ymin, p.y);
    box.ymax = std::max(box.ymax, p.y);
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& [p1, p2] = lines[i];
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& [p3, p4] = lines[j];
      const Rational d = (p2.x - p1.x) * (p4.y - p3.y) - (p2.y - p1.y) * (p4.x - p3.x);
      if (d == 0) continue;
      const Rational t = ((p3.x - p1.x) * (p4.y - p3.y) - (p3.y - p1.y) * (p4.x - p3.x)) / d;
      extend(lerp(p1, p2, t));
    }
  }
  return box;
}

std::vector<LineSupport> vertex_pair_lines(const SimplePolygon& polygon) {
  // One support per distinct line.
  std::set<std::pair<Rational, Rational>> seen;
  std::set<Rational> vertical;
  std::vector<LineSupport> lines;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    for (std::size_t j = i + 1; j < polygon.size(); ++j) {
      const Point2& p = polygon[i];
      const Point2& q = polygon[j];
      if (p.x == q.x) {
        if (vertical.insert(p.x).second) lines.emplace_back(p, q);
        continue;
      }
      Rational slope = (q.y - p.y) / (q.x - p.x);
      Rational intercept = p.y - slope * p.x;
      if (seen.emplace(slope, intercept).second) lines.emplace_back(p, q);
    }
  }
  return lines;
}

}  // namespace

bool visible(const SimplePolygon& polygon, const Point2& a, const Point2& b, Side side) {
  if (!in_closed_side(point_location(polygon, a), side) || !in_closed_side(point_location(polygon, b), side)) {
    throw GeometryError(ErrorKind::Precondition, "segment endpoint lies strictly outside the " +
                                                     std::string(to_string(side)) + " region");
  }
  if (a == b) return true;

  std::vector<Rational> params{Rational(0), Rational(1)};
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& c = polygon[i];
    const Point2& d = polygon.vertex(i + 1);
    switch (classify_segments(a, b, c, d)) {
      case SegmentRelation::ProperCross:
        return false;
      case SegmentRelation::Disjoint:
        break;
      case SegmentRelation::Touch:
      case SegmentRelation::Overlap:
        if (on_segment(a, b, c)) params.push_back(parameter_on(a, b, c));
        if (on_segment(a, b, d)) params.push_back(parameter_on(a, b, d));
        break;
    }
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  for (std::size_t k = 0; k + 1 < params.size(); ++k) {
    const Point2 mid = lerp(a, b, Rational((params[k] + params[k + 1]) / 2));
    if (!in_closed_side(point_location(polygon, mid), side)) return false;
  }
  return true;
}

std::vector<std::size_t> visible_vertex_set(const SimplePolygon& polygon, const Point2& p, Side side) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < polygon.size(); ++v) {
    if (visible(polygon, p, polygon[v], side)) out.push_back(v);
  }
  return out;
}

bool VertexMask::intersects(const VertexMask& other) const {
  const std::size_t w = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < w; ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::optional<std::size_t> VertexMask::first_common(const VertexMask& other) const {
  const std::size_t w = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < w; ++i) {
    if (const std::uint64_t both = words_[i] & other.words_[i]) {
      return i * 64 + static_cast<std::size_t>(std::countr_zero(both));
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> VertexMask::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size() * 64; ++i) {
    if (test(i)) out.push_back(i);
  }
  return out;
}

VertexMask to_mask(const GuardPlacement& guards) {
  return mask_from_indices(guards.polygon_size(), guards.indices());
}

CoverageAnalysis::CoverageAnalysis(const SimplePolygon& polygon, Side side, const CertifyOptions& options)
    : polygon_(polygon), side_(side) {
  if (sign(options.margin) <= 0) throw GeometryError(ErrorKind::InvalidParameters, "clip margin must be positive");
  const std::vector<LineSupport> lines = vertex_pair_lines(polygon_);
  Box2 box = arrangement_bounds(polygon_, lines);
  const Rational extent = std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  const Rational pad = options.margin * extent;
  box.xmin -= pad;
  box.ymin -= pad;
  box.xmax += pad;
  box.ymax += pad;
  map_ = trapezoidal_map(lines, box);

  const PairLineTable table(polygon_);
  const std::size_t count = map_.cells.size();
  std::vector<signed char> in_domain(count, 0);
  std::vector<VertexMask> all_masks(count);
  parallel_chunks(count, [&](std::size_t begin, std::size_t end) {
    PairLineTable::Query q;
    for (std::size_t c = begin; c < end; ++c) {
      const Point2& w = map_.cells[c].witness;
      table.evaluate(w, q);
      if (q.generic) {
        const bool inside = q.interior;
        if (inside != (side_ == Side::Interior)) continue;
        in_domain[c] = 1;
        all_masks[c] = table.mask(q);
      } else {
        // Cell witnesses are strictly inside cells, so this is unreachable
        // unless the decomposition is wrong; fall back to the slow path.
        const Location loc = point_location(polygon_, w);
        if (loc == Location::Boundary || !in_closed_side(loc, side_)) continue;
        in_domain[c] = 1;
        all_masks[c] = mask_from_indices(polygon_.size(), visible_vertex_set(polygon_, w, side_));
      }
    }
  });
  for (std::size_t c = 0; c < count; ++c) {
    if (!in_domain[c]) continue;
    domain_cells_.push_back(c);
    masks_.push_back(std::move(all_masks[c]));
  }

  PairLineTable::Query q;
  for (std::size_t i = 0; i < polygon_.size(); ++i) {
    probe_points_.push_back(polygon_[i]);
    probe_points_.push_back(midpoint(polygon_[i], polygon_.vertex(i + 1)));
  }
  for (const auto& p : probe_points_) probe_masks_.push_back(point_mask(polygon_, table, p, side_, q));
}

bool CoverageAnalysis::covers(const VertexMask& guards) const {
  for (const auto& m : masks_) {
    if (!m.intersects(guards)) return false;
  }
  for (const auto& m : probe_masks_) {
    if (!m.intersects(guards)) return false;
  }
  return true;
}

CoverageVerdict CoverageAnalysis::verdict(const GuardPlacement& guards) const {
  if (guards.polygon_size() != polygon_.size()) {
    throw GeometryError(ErrorKind::Precondition, "guard placement is for a polygon of different size");
  }
  const VertexMask g = to_mask(guards);
  CoverageVerdict out;
  out.cells = masks_.size();
  Covered covered;
  covered.cells.reserve(masks_.size());
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    const auto guard = masks_[i].first_common(g);
    if (!guard) {
      const TrapezoidCell& cell = domain_cell(i);
      out.result = Uncovered{cell.witness, {}, cell.corners};
      return out;
    }
    covered.cells.push_back({domain_cell(i).witness, *guard});
  }
  for (std::size_t i = 0; i < probe_masks_.size(); ++i) {
    if (!probe_masks_[i].intersects(g)) {
      out.result = Uncovered{probe_points_[i], {}, {probe_points_[i]}};
      return out;
    }
  }
  out.result = std::move(covered);
  return out;
}

Region2 CoverageAnalysis::unobserved(const GuardPlacement& guards) const {
  const VertexMask g = to_mask(guards);
  Region2 region;
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    if (!masks_[i].intersects(g)) region.faces.push_back(validate_simple(domain_cell(i).corners));
  }
  return region;
}

CoverageVerdict coverage_certify(const SimplePolygon& polygon, const GuardPlacement& guards, Side side,
                                 const CertifyOptions& options) {
  return CoverageAnalysis(polygon, side, options).verdict(guards);
}

Region2 unobserved_region(const SimplePolygon& polygon, const GuardPlacement& guards, Side side,
                          const CertifyOptions& options) {
  return CoverageAnalysis(polygon, side, options).unobserved(guards);
}

std::optional<Point2> falsify_by_sampling(const SimplePolygon& polygon, const GuardPlacement& guards, Side side,
                                          std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw GeometryError(ErrorKind::InvalidParameters, "samples must be positive");
  constexpr long kGrid = 1L << 20;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(0, kGrid);

  struct Source {
    Box2 box;
    const SimplePolygon* accept_inside;  // sample must be Interior of this polygon
    bool reject_polygon_interior;        // sample must be Exterior of the input polygon
  };
  std::vector<Source> sources;
  Region2 pocket_region;
  if (side == Side::Exterior) {
    pocket_region = pockets(polygon);
    for (const auto& pocket : pocket_region.faces) sources.push_back({bounding_box(pocket.vertices()), &pocket, false});
    if (sources.empty()) {
      Box2 b = bounding_box(polygon.vertices());
      const Rational extent = std::max(b.xmax - b.xmin, b.ymax - b.ymin);
      b.xmin -= extent;
      b.ymin -= extent;
      b.xmax += extent;
      b.ymax += extent;
      sources.push_back({b, nullptr, true});
    }
  } else {
    sources.push_back({bounding_box(polygon.vertices()), &polygon, false});
  }

  const PairLineTable table(polygon);
  PairLineTable::Query q;
  const VertexMask g = to_mask(guards);
  std::uniform_int_distribution<std::size_t> pick(0, sources.size() - 1);
  std::size_t accepted = 0;
  for (std::size_t attempt = 0; attempt < 50 * samples && accepted < samples; ++attempt) {
    const Source& src = sources[pick(rng)];
    const Rational u = make_rational(coord(rng), kGrid);
    const Rational v = make_rational(coord(rng), kGrid);
    Point2 p{Rational(src.box.xmin + u * (src.box.xmax - src.box.xmin)),
             Rational(src.box.ymin + v * (src.box.ymax - src.box.ymin))};
    if (src.accept_inside && point_location(*src.accept_inside, p) != Location::Interior) continue;
    if (src.reject_polygon_interior && point_location(polygon, p) != Location::Exterior) continue;
    ++accepted;
    const VertexMask m = point_mask(polygon, table, p, side, q);
    if (m.intersects(g)) continue;
    bool seen = false;
    for (std::size_t guard : guards.indices()) {
      if (visible(polygon, p, polygon[guard], side)) {
        seen = true;
        break;
      }
    }
    if (!seen) return p;
  }
  return std::nullopt;
}

}  // namespace gallery
