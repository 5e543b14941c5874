#pragma once

#include "gallery/arrangement.hpp"
#include "gallery/guard_placement.hpp"
#include "gallery/polygon.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace gallery {

/// Which closed region visibility segments must stay in: the polygon
/// (gallery) or its complement (fortress). The boundary belongs to both.
enum class Side { Interior, Exterior };

const char* to_string(Side side);

/// True iff every point of segment ab lies in the closed region of `side`.
/// Touching or running along the boundary is allowed. Throws
/// GeometryError(Precondition) if an endpoint lies strictly on the wrong
/// side.
bool visible(const SimplePolygon& polygon, const Point2& a, const Point2& b, Side side);

/// Indices of the vertices visible from p.
std::vector<std::size_t> visible_vertex_set(const SimplePolygon& polygon, const Point2& p, Side side);

/// Dynamic bit set over vertex indices.
class VertexMask {
 public:
  VertexMask() = default;
  explicit VertexMask(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool intersects(const VertexMask& other) const;
  /// Smallest index set in both masks.
  std::optional<std::size_t> first_common(const VertexMask& other) const;
  std::vector<std::size_t> indices() const;

 private:
  std::vector<std::uint64_t> words_;
};

VertexMask to_mask(const GuardPlacement& guards);

struct CoveredCell {
  Point2 witness;
  std::size_t guard = 0;  // smallest guard index that sees the witness
};

struct Covered {
  std::vector<CoveredCell> cells;
};

struct Uncovered {
  Point2 witness;
  std::vector<std::size_t> visible_guards;  // always empty; kept for re-checking
  std::vector<Point2> unobserved_cell;      // cell corners, or the lone point for a safety-net hit
};

struct CoverageVerdict {
  std::variant<Covered, Uncovered> result;
  std::size_t cells = 0;  // number of domain cells examined

  bool covered() const { return std::holds_alternative<Covered>(result); }
  const Uncovered* uncovered() const { return std::get_if<Uncovered>(&result); }
};

struct CertifyOptions {
  /// Clip box margin, as a multiple of the extent of all vertex-pair line
  /// intersections.
  Rational margin{1, 2};
};

/// Exact coverage analysis of a polygon side. Builds the vertical
/// decomposition of the arrangement of all lines through vertex pairs;
/// vertex-guard visibility is constant on every open cell, so recording
/// the visible-vertex set of one witness per cell decides coverage for any
/// guard set. Every vertex and edge midpoint is also checked directly.
class CoverageAnalysis {
 public:
  CoverageAnalysis(const SimplePolygon& polygon, Side side, const CertifyOptions& options = {});

  const SimplePolygon& polygon() const noexcept { return polygon_; }
  Side side() const noexcept { return side_; }
  const TrapezoidalMap& map() const noexcept { return map_; }
  std::size_t domain_cell_count() const noexcept { return domain_cells_.size(); }

  CoverageVerdict verdict(const GuardPlacement& guards) const;
  bool covers(const VertexMask& guards) const;
  Region2 unobserved(const GuardPlacement& guards) const;

  /// Visible-vertex mask of each domain cell, in canonical cell order.
  const std::vector<VertexMask>& cell_masks() const noexcept { return masks_; }
  const TrapezoidCell& domain_cell(std::size_t i) const { return map_.cells[domain_cells_[i]]; }

 private:
  SimplePolygon polygon_;
  Side side_;
  TrapezoidalMap map_;
  std::vector<std::size_t> domain_cells_;
  std::vector<VertexMask> masks_;
  std::vector<Point2> probe_points_;
  std::vector<VertexMask> probe_masks_;
};

CoverageVerdict coverage_certify(const SimplePolygon& polygon, const GuardPlacement& guards, Side side,
                                 const CertifyOptions& options = {});

/// Union of the decomposition cells (clipped to the box for Exterior) that
/// no guard sees; empty iff coverage_certify reports Covered.
Region2 unobserved_region(const SimplePolygon& polygon, const GuardPlacement& guards, Side side,
                          const CertifyOptions& options = {});

/// Deterministic randomized search for an unobserved point. Exterior
/// samples come from the pockets (bounding boxes with rejection); if the
/// polygon is convex they come from a ring around it. Interior samples come
/// from the polygon. Any returned point is confirmed with visible().
std::optional<Point2> falsify_by_sampling(const SimplePolygon& polygon, const GuardPlacement& guards, Side side,
                                          std::size_t samples, std::uint64_t seed);

}  // namespace gallery
