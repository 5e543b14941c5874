#include "gallery/csg.hpp"

#include "gallery/error.hpp"
#include "gallery/predicates.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>

namespace gallery {

namespace {

struct Plane {
  Point3 n;
  Rational c;  // n . x = c
};

bool is_zero(const Point3& p) { return sign(p.x) == 0 && sign(p.y) == 0 && sign(p.z) == 0; }

// Scales so the first non-zero normal coordinate is 1; the unoriented plane
// then has a unique representation.
Plane canonical(const Halfspace& h) {
  Rational lead = h.normal.x;
  if (sign(lead) == 0) lead = h.normal.y;
  if (sign(lead) == 0) lead = h.normal.z;
  if (sign(lead) == 0) throw GeometryError(ErrorKind::InvalidParameters, "halfspace with zero normal");
  return {(1 / lead) * h.normal, Rational(h.offset / lead)};
}

using Key = std::tuple<Rational, Rational, Rational, Rational>;

// Sign of h(p + e1*o1 + e2*o2) with 1 >> e1 >> e2 > 0.
int lex_sign(const Halfspace& h, const Point3& p, const Point3* o1, const Point3* o2) {
  int s = sign(Rational(dot(h.normal, p) - h.offset));
  if (s != 0) return s;
  if (o1 != nullptr) {
    s = sign(dot(h.normal, *o1));
    if (s != 0) return s;
  }
  if (o2 != nullptr) s = sign(dot(h.normal, *o2));
  return s;
}

struct Evaluator {
  const ConvexSolid& base;
  const std::vector<ConvexSolid>& cutters;

  bool in_base(const Point3& p, const Point3* o1, const Point3* o2) const {
    for (const Halfspace& h : base.halfspaces) {
      if (lex_sign(h, p, o1, o2) > 0) return false;
    }
    return true;
  }

  bool in_cutter(const ConvexSolid& c, const Point3& p, const Point3* o1, const Point3* o2) const {
    for (const Halfspace& h : c.halfspaces) {
      if (lex_sign(h, p, o1, o2) >= 0) return false;
    }
    return true;
  }

  bool in_solid(const Point3& p, const Point3* o1, const Point3* o2) const {
    if (!in_base(p, o1, o2)) return false;
    for (const ConvexSolid& c : cutters) {
      if (in_cutter(c, p, o1, o2)) return false;
    }
    return true;
  }
};

struct DirectedEdge {
  Point3 from;
  Point3 to;
};

}  // namespace

ConvexSolid box_solid(const Point3& lo, const Point3& hi) {
  ConvexSolid s;
  for (int k = 0; k < 3; ++k) {
    if (lo[k] >= hi[k]) throw GeometryError(ErrorKind::InvalidParameters, "box has non-positive extent");
    Point3 n{0, 0, 0};
    n[k] = 1;
    s.halfspaces.push_back({n, hi[k]});
    n[k] = -1;
    s.halfspaces.push_back({n, Rational(-lo[k])});
  }
  return s;
}

bool csg_contains(const ConvexSolid& base, const std::vector<ConvexSolid>& cutters, const Point3& p) {
  // Closure: p is in the result iff points arbitrarily close to it are.
  // Checking the closed base and the open cutters decides every point that
  // is not on a cutter boundary; those are settled by generic nudges.
  const Evaluator ev{base, cutters};
  if (!ev.in_base(p, nullptr, nullptr)) return false;
  static const std::array<Point3, 8> dirs = {
      Point3{1, 2, 3}, Point3{-3, 1, 2}, Point3{2, -3, 1}, Point3{-1, -2, 3},
      Point3{1, 3, -2}, Point3{-2, 1, -3}, Point3{3, -1, -2}, Point3{-1, -3, -2},
  };
  for (const Point3& d : dirs) {
    const Point3 e{Rational(d.z), Rational(d.x), Rational(d.y)};
    if (ev.in_solid(p, &d, &e)) return true;
  }
  return false;
}

Polyhedron subtract(const ConvexSolid& base, const std::vector<ConvexSolid>& cutters) {
  std::map<Key, Plane> unique;
  auto collect = [&](const ConvexSolid& s) {
    for (const Halfspace& h : s.halfspaces) {
      const Plane p = canonical(h);
      unique.emplace(Key{p.n.x, p.n.y, p.n.z, p.c}, p);
    }
  };
  collect(base);
  for (const ConvexSolid& c : cutters) collect(c);
  std::vector<Plane> planes;
  for (auto& [k, p] : unique) planes.push_back(p);

  const Evaluator ev{base, cutters};
  // (plane index, orientation) -> directed boundary edges, face on the left
  // seen from the outward normal
  std::map<std::pair<std::size_t, int>, std::vector<DirectedEdge>> face_edges;

  for (std::size_t a = 0; a < planes.size(); ++a) {
    const Plane& pa = planes[a];
    for (std::size_t b = 0; b < planes.size(); ++b) {
      if (b == a) continue;
      const Plane& pb = planes[b];
      const Point3 d = cross(pa.n, pb.n);
      if (is_zero(d)) continue;
      const Rational aa = dot(pa.n, pa.n), bb = dot(pb.n, pb.n), ab = dot(pa.n, pb.n);
      const Rational det = aa * bb - ab * ab;
      const Point3 p0 = Rational((pa.c * bb - pb.c * ab) / det) * pa.n + Rational((pb.c * aa - pa.c * ab) / det) * pb.n;

      std::vector<Rational> ts;
      for (const Plane& pc : planes) {
        const Rational nd = dot(pc.n, d);
        if (sign(nd) == 0) continue;
        ts.push_back((pc.c - dot(pc.n, p0)) / nd);
      }
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

      const Point3 u = cross(pa.n, d);
      const Point3 neg_u = Rational(-1) * u;
      const Point3 neg_n = Rational(-1) * pa.n;
      for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        const Point3 m = p0 + Rational((ts[i] + ts[i + 1]) / 2) * d;
        if (!ev.in_base(m, nullptr, nullptr)) continue;
        const bool plus_in_below = ev.in_solid(m, &u, &neg_n);
        const bool plus_in_above = ev.in_solid(m, &u, &pa.n);
        const bool minus_in_below = ev.in_solid(m, &neg_u, &neg_n);
        const bool minus_in_above = ev.in_solid(m, &neg_u, &pa.n);
        const Point3 ps = p0 + ts[i] * d;
        const Point3 pe = p0 + ts[i + 1] * d;
        for (int orient : {+1, -1}) {
          // face with outward normal orient*n: inside below, outside above
          const bool face_plus = orient > 0 ? (plus_in_below && !plus_in_above) : (plus_in_above && !plus_in_below);
          const bool face_minus = orient > 0 ? (minus_in_below && !minus_in_above) : (minus_in_above && !minus_in_below);
          if (face_plus == face_minus) continue;
          const int side = face_plus ? 1 : -1;
          auto& edges = face_edges[{a, orient}];
          if (side * orient > 0) {
            edges.push_back({ps, pe});
          } else {
            edges.push_back({pe, ps});
          }
        }
      }
    }
  }

  Polyhedron raw;
  std::map<Point3, std::size_t> index;
  auto id = [&](const Point3& p) {
    auto [it, inserted] = index.emplace(p, raw.vertices.size());
    if (inserted) raw.vertices.push_back(p);
    return it->second;
  };

  for (auto& [key, edges] : face_edges) {
    const Point3 normal = Rational(key.second) * planes[key.first].n;
    std::vector<std::pair<std::size_t, std::size_t>> ids;
    for (const DirectedEdge& e : edges) ids.emplace_back(id(e.from), id(e.to));
    // a line shared by three or more planes is produced once per pair
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    // project for loop classification
    int k = 0;
    for (int j = 1; j < 3; ++j) {
      if (abs(normal[j]) > abs(normal[k])) k = j;
    }
    int pi = (k + 1) % 3, pj = (k + 2) % 3;
    if (sign(normal[k]) < 0) std::swap(pi, pj);
    auto proj = [&](std::size_t v) { return Point2{raw.vertices[v][pi], raw.vertices[v][pj]}; };

    std::multimap<std::size_t, std::size_t> out;
    for (const auto& [u, v] : ids) out.emplace(u, v);
    std::vector<std::vector<std::size_t>> loops;
    while (!out.empty()) {
      auto first = out.begin();
      const std::size_t start = first->first;
      std::size_t prev = start;
      std::size_t cur = first->second;
      out.erase(first);
      std::vector<std::size_t> loop{start};
      while (cur != start) {
        loop.push_back(cur);
        auto [lo, hi] = out.equal_range(cur);
        if (lo == hi) throw GeometryError(ErrorKind::ConstructionFailed, "open face boundary");
        auto pick = lo;
        // several exits: take the first clockwise from the way back
        const Point2 c = proj(cur);
        const Point2 back = proj(prev);
        const Point2 db{Rational(back.x - c.x), Rational(back.y - c.y)};
        auto angle_key = [&](std::size_t w) {
          const Point2 q = proj(w);
          const Point2 dw{Rational(q.x - c.x), Rational(q.y - c.y)};
          const Point2 r{Rational(db.x * dw.x + db.y * dw.y), Rational(db.x * dw.y - db.y * dw.x)};
          const int h = (sign(r.y) > 0 || (sign(r.y) == 0 && sign(r.x) > 0)) ? 0 : 1;
          return std::make_pair(h, r);
        };
        for (auto it = std::next(lo); it != hi; ++it) {
          const auto kp = angle_key(pick->second);
          const auto kw = angle_key(it->second);
          const bool w_later = kp.first != kw.first
                                   ? kw.first > kp.first
                                   : sign(kp.second.x * kw.second.y - kp.second.y * kw.second.x) > 0;
          if (w_later) pick = it;
        }
        prev = cur;
        cur = pick->second;
        out.erase(pick);
      }
      loops.push_back(std::move(loop));
    }

    std::vector<std::pair<Rational, std::size_t>> outers;
    std::vector<std::size_t> holes;
    std::vector<std::vector<Point2>> projected;
    for (std::size_t l = 0; l < loops.size(); ++l) {
      std::vector<Point2> pts;
      for (std::size_t v : loops[l]) pts.push_back(proj(v));
      const Rational a2 = twice_signed_area(pts);
      projected.push_back(std::move(pts));
      if (sign(a2) > 0) {
        outers.emplace_back(a2, l);
      } else {
        holes.push_back(l);
      }
    }
    std::sort(outers.begin(), outers.end());
    std::vector<Face> faces(outers.size());
    for (std::size_t o = 0; o < outers.size(); ++o) faces[o].outer = loops[outers[o].second];
    for (std::size_t h : holes) {
      bool placed = false;
      for (std::size_t o = 0; o < outers.size() && !placed; ++o) {
        const auto& outer = projected[outers[o].second];
        for (const Point2& q : projected[h]) {
          bool on = false;
          bool inside = false;
          for (std::size_t i = 0; i < outer.size(); ++i) {
            const Point2& s = outer[i];
            const Point2& t = outer[(i + 1) % outer.size()];
            if (on_segment(s, t, q)) {
              on = true;
              break;
            }
            if ((s.y > q.y) != (t.y > q.y)) {
              const int or_ = orient2d(s, t, q);
              if (t.y > q.y ? or_ > 0 : or_ < 0) inside = !inside;
            }
          }
          if (on) continue;
          if (inside) {
            faces[o].holes.push_back(loops[h]);
            placed = true;
          }
          break;
        }
      }
      if (!placed) throw GeometryError(ErrorKind::ConstructionFailed, "hole loop without enclosing face");
    }
    for (Face& f : faces) raw.faces.push_back(std::move(f));
  }

  try {
    return normalize(raw);
  } catch (const GeometryError& e) {
    throw GeometryError(ErrorKind::ConstructionFailed, std::string("boundary evaluation produced an invalid mesh: ") + e.what());
  }
}

}  // namespace gallery
