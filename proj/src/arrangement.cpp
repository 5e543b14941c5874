#include "gallery/arrangement.hpp"

#include "gallery/error.hpp"
#include "gallery/predicates.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace gallery {

namespace {

struct Canonical {
  std::vector<SweepLine> sweep;
  std::vector<Rational> vertical;
};

Canonical canonicalize(const std::vector<LineSupport>& lines) {
  std::set<std::pair<Rational, Rational>> seen;
  std::set<Rational> vertical;
  Canonical out;
  for (const auto& [p, q] : lines) {
    if (p == q) throw GeometryError(ErrorKind::DegenerateSegment, "line support points coincide");
    if (p.x == q.x) {
      vertical.insert(p.x);
      continue;
    }
    Rational slope = (q.y - p.y) / (q.x - p.x);
    Rational intercept = p.y - slope * p.x;
    if (seen.emplace(slope, intercept).second) out.sweep.push_back({slope, intercept});
  }
  out.vertical.assign(vertical.begin(), vertical.end());
  return out;
}

bool strictly_inside(const Box2& box, const Rational& x, const Rational& y) {
  return box.xmin < x && x < box.xmax && box.ymin < y && y < box.ymax;
}

}  // namespace

int side_of(const LineSupport& line, const Point2& p) { return orient2d(line.first, line.second, p); }

TrapezoidalMap trapezoidal_map(const std::vector<LineSupport>& input, const Box2& clip_box) {
  if (!(clip_box.xmin < clip_box.xmax && clip_box.ymin < clip_box.ymax)) {
    throw GeometryError(ErrorKind::Precondition, "empty clip box");
  }
  TrapezoidalMap map;
  map.box = clip_box;
  Canonical canon = canonicalize(input);
  const std::size_t n_input = canon.sweep.size();
  map.lines = std::move(canon.sweep);
  map.vertical_lines = std::move(canon.vertical);
  const std::size_t bottom = map.lines.size();
  map.lines.push_back({0, clip_box.ymin});
  const std::size_t top = map.lines.size();
  map.lines.push_back({0, clip_box.ymax});
  const std::size_t L = map.lines.size();

  for (const Rational& vx : map.vertical_lines) {
    if (!(clip_box.xmin < vx && vx < clip_box.xmax)) {
      throw GeometryError(ErrorKind::Precondition, "vertical line x=" + to_string(vx) + " outside clip box");
    }
    for (std::size_t i = 0; i < n_input; ++i) {
      if (!strictly_inside(clip_box, vx, map.lines[i].at(vx))) {
        throw GeometryError(ErrorKind::Precondition, "line intersection outside clip box");
      }
    }
  }

  // Events: x -> (y -> lines through the point).
  std::map<Rational, std::map<Rational, std::vector<std::size_t>>> events;
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i + 1; j < L; ++j) {
      const SweepLine& a = map.lines[i];
      const SweepLine& b = map.lines[j];
      if (a.slope == b.slope) continue;
      Rational x = (b.intercept - a.intercept) / (a.slope - b.slope);
      Rational y = a.at(x);
      if (j < n_input) {
        if (!strictly_inside(clip_box, x, y)) {
          throw GeometryError(ErrorKind::Precondition,
                              "line intersection " + to_string(Point2{x, y}) + " not strictly inside clip box");
        }
      } else if (!(clip_box.xmin < x && x < clip_box.xmax)) {
        continue;
      }
      auto& group = events[x][y];
      if (group.empty() || group.back() != i) group.push_back(i);
      group.push_back(j);
    }
  }
  for (auto& [x, column] : events) {
    for (auto& [y, group] : column) {
      std::sort(group.begin(), group.end());
      group.erase(std::unique(group.begin(), group.end()), group.end());
    }
  }
  std::set<Rational> event_x;
  for (const auto& [x, column] : events) event_x.insert(x);
  for (const Rational& vx : map.vertical_lines) event_x.insert(vx);

  // Order of all non-vertical lines just right of xmin.
  const Rational first_x = event_x.empty() ? clip_box.xmax : *event_x.begin();
  const Rational x0 = (clip_box.xmin + first_x) / 2;
  std::vector<std::size_t> order(L);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return map.lines[a].at(x0) < map.lines[b].at(x0); });
  std::vector<std::size_t> pos(L);
  for (std::size_t p = 0; p < L; ++p) pos[order[p]] = p;

  std::vector<std::optional<Rational>> open_since(L);
  auto in_box_range = [&](std::size_t p) { return p >= pos[bottom] && p + 1 <= pos[top] && p + 1 < L; };

  auto close = [&](std::size_t p, const Rational& xr) {
    if (!open_since[p]) return;
    TrapezoidCell cell;
    cell.x_left = *open_since[p];
    cell.x_right = xr;
    cell.lower = order[p];
    cell.upper = order[p + 1];
    const SweepLine& lo = map.lines[cell.lower];
    const SweepLine& hi = map.lines[cell.upper];
    Point2 c0{cell.x_left, lo.at(cell.x_left)};
    Point2 c1{cell.x_right, lo.at(cell.x_right)};
    Point2 c2{cell.x_right, hi.at(cell.x_right)};
    Point2 c3{cell.x_left, hi.at(cell.x_left)};
    cell.corners.push_back(c0);
    cell.corners.push_back(c1);
    if (!(c2 == c1)) cell.corners.push_back(c2);
    if (!(c3 == c0)) cell.corners.push_back(c3);
    Rational sx = 0, sy = 0;
    for (const auto& c : cell.corners) {
      sx += c.x;
      sy += c.y;
    }
    const Rational count(static_cast<long>(cell.corners.size()));
    cell.witness = {Rational(sx / count), Rational(sy / count)};
    map.cells.push_back(std::move(cell));
    open_since[p].reset();
  };

  for (std::size_t p = 0; p + 1 < L; ++p) {
    if (in_box_range(p)) open_since[p] = clip_box.xmin;
  }

  const std::set<Rational> vertical_set(map.vertical_lines.begin(), map.vertical_lines.end());
  for (const Rational& x : event_x) {
    const bool wall = vertical_set.count(x) > 0;
    std::set<std::size_t> affected;
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    if (auto it = events.find(x); it != events.end()) {
      for (const auto& [y, group] : it->second) {
        std::size_t lo = L, hi = 0;
        for (std::size_t id : group) {
          lo = std::min(lo, pos[id]);
          hi = std::max(hi, pos[id]);
        }
        if (hi - lo + 1 != group.size()) {
          throw GeometryError(ErrorKind::Precondition, "non-contiguous line bundle at " + to_string(Point2{x, y}));
        }
        ranges.emplace_back(lo, hi);
        for (std::size_t p = (lo == 0 ? 0 : lo - 1); p <= hi; ++p) affected.insert(p);
      }
    }
    if (wall) {
      for (std::size_t p = 0; p + 1 < L; ++p) close(p, x);
    } else {
      for (std::size_t p : affected) {
        if (p + 1 < L) close(p, x);
      }
    }
    for (const auto& [lo, hi] : ranges) {
      std::reverse(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
      for (std::size_t p = lo; p <= hi; ++p) pos[order[p]] = p;
    }
    if (wall) {
      for (std::size_t p = 0; p + 1 < L; ++p) {
        if (in_box_range(p)) open_since[p] = x;
      }
    } else {
      for (std::size_t p : affected) {
        if (in_box_range(p)) open_since[p] = x;
      }
    }
  }
  for (std::size_t p = 0; p + 1 < L; ++p) close(p, clip_box.xmax);
  return map;
}

}  // namespace gallery
