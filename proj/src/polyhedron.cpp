#include "gallery/polyhedron.hpp"

#include "gallery/error.hpp"
#include "gallery/parallel.hpp"
#include "gallery/predicates.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace gallery {

namespace {

using Loop = std::vector<std::size_t>;

std::string edge_name(std::size_t u, std::size_t v) { return "edge " + std::to_string(u) + "-" + std::to_string(v); }

bool is_zero(const Point3& p) { return sign(p.x) == 0 && sign(p.y) == 0 && sign(p.z) == 0; }

// Newell normal: twice the vector area of the loop.
Point3 loop_normal(const std::vector<Point3>& vs, const Loop& loop) {
  Point3 n{0, 0, 0};
  for (std::size_t i = 0; i < loop.size(); ++i) n = n + cross(vs[loop[i]], vs[loop[(i + 1) % loop.size()]]);
  return n;
}

int dominant_axis(const Point3& n) {
  int best = 0;
  for (int k = 1; k < 3; ++k) {
    if (abs(n[k]) > abs(n[best])) best = k;
  }
  return best;
}

struct Projection {
  int i = 0;
  int j = 1;
};

// Drops the dominant normal coordinate; the remaining pair is ordered so
// that counter-clockwise seen from the normal stays counter-clockwise.
Projection projection_for(const Point3& n) {
  const int k = dominant_axis(n);
  Projection p{(k + 1) % 3, (k + 2) % 3};
  if (sign(n[k]) < 0) std::swap(p.i, p.j);
  return p;
}

Point2 apply(const Projection& pr, const Point3& p) { return {p[pr.i], p[pr.j]}; }

std::vector<Point2> project_loop(const std::vector<Point3>& vs, const Loop& loop, const Projection& pr) {
  std::vector<Point2> out;
  out.reserve(loop.size());
  for (std::size_t v : loop) out.push_back(apply(pr, vs[v]));
  return out;
}

// Closed point-in-region test for a face given as projected loops.
Location locate_loops(const std::vector<std::vector<Point2>>& loops, const Point2& q) {
  bool inside = false;
  for (const auto& loop : loops) {
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& a = loop[i];
      const Point2& b = loop[(i + 1) % n];
      if (on_segment(a, b, q)) return Location::Boundary;
      const bool a_above = a.y > q.y;
      const bool b_above = b.y > q.y;
      if (a_above == b_above) continue;
      const int o = orient2d(a, b, q);
      if (b_above ? o > 0 : o < 0) inside = !inside;
    }
  }
  return inside ? Location::Interior : Location::Exterior;
}

// Half-plane index for angular sorting: 0 for angles in [0, pi), 1 otherwise.
int half(const Point2& d) { return (sign(d.y) > 0 || (sign(d.y) == 0 && sign(d.x) > 0)) ? 0 : 1; }

// Counter-clockwise angle order starting at direction `from`.
bool ccw_before(const Point2& from, const Point2& a, const Point2& b) {
  // rotate so `from` is angle zero, then compare
  auto rel = [&](const Point2& d) {
    return Point2{Rational(from.x * d.x + from.y * d.y), Rational(from.x * d.y - from.y * d.x)};
  };
  const Point2 ra = rel(a);
  const Point2 rb = rel(b);
  const int ha = half(ra);
  const int hb = half(rb);
  if (ha != hb) return ha < hb;
  return sign(ra.x * rb.y - ra.y * rb.x) > 0;
}

struct FaceInfo {
  Point3 normal;
  Rational offset;
};

FaceInfo check_face(const Polyhedron& mesh, std::size_t f) {
  const Face& face = mesh.faces[f];
  const auto& vs = mesh.vertices;
  const std::string fname = "face " + std::to_string(f);
  auto check_loop = [&](const Loop& loop) {
    if (loop.size() < 3) throw GeometryError(ErrorKind::NonPlanarFace, fname + " has a loop with fewer than 3 vertices");
    for (std::size_t i = 0; i < loop.size(); ++i) {
      if (loop[i] >= vs.size()) throw GeometryError(ErrorKind::OpenEdge, fname + " references missing vertex " + std::to_string(loop[i]));
      if (loop[i] == loop[(i + 1) % loop.size()]) throw GeometryError(ErrorKind::OpenEdge, fname + " repeats vertex " + std::to_string(loop[i]));
    }
  };
  check_loop(face.outer);
  for (const auto& h : face.holes) check_loop(h);

  const Point3 n = loop_normal(vs, face.outer);
  if (is_zero(n)) throw GeometryError(ErrorKind::NonPlanarFace, fname + " outer loop has zero area");
  const Rational offset = dot(n, vs[face.outer[0]]);
  auto coplanar = [&](const Loop& loop) {
    for (std::size_t v : loop) {
      if (dot(n, vs[v]) != offset) {
        throw GeometryError(ErrorKind::NonPlanarFace, fname + " vertex " + std::to_string(v) + " is off the face plane");
      }
    }
  };
  coplanar(face.outer);
  // A non-planar outer loop can still pass the test above when the Newell
  // normal happens to be orthogonal to the offsets; check every corner turn.
  for (std::size_t i = 0; i < face.outer.size(); ++i) {
    const Point3& a = vs[face.outer[i]];
    const Point3& b = vs[face.outer[(i + 1) % face.outer.size()]];
    const Point3& c = vs[face.outer[(i + 2) % face.outer.size()]];
    const Point3 t = cross(b - a, c - b);
    if (!is_zero(cross(t, n))) {
      throw GeometryError(ErrorKind::NonPlanarFace, fname + " turns out of plane at vertex " + std::to_string(face.outer[(i + 1) % face.outer.size()]));
    }
  }
  for (std::size_t h = 0; h < face.holes.size(); ++h) {
    coplanar(face.holes[h]);
    if (sign(dot(loop_normal(vs, face.holes[h]), n)) >= 0) {
      throw GeometryError(ErrorKind::BadOrientation, fname + " hole " + std::to_string(h) + " is not clockwise");
    }
  }
  return {n, offset};
}

void check_edges(const Polyhedron& mesh) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> directed;
  auto add = [&](const Loop& loop) {
    for (std::size_t i = 0; i < loop.size(); ++i) ++directed[{loop[i], loop[(i + 1) % loop.size()]}];
  };
  for (const Face& f : mesh.faces) {
    add(f.outer);
    for (const auto& h : f.holes) add(h);
  }
  for (const auto& [e, count] : directed) {
    if (count > 1) throw GeometryError(ErrorKind::BadOrientation, edge_name(e.first, e.second) + " is used twice in the same direction");
    if (!directed.contains({e.second, e.first})) {
      throw GeometryError(ErrorKind::OpenEdge, edge_name(e.first, e.second) + " has no opposite half-edge");
    }
  }
}

void check_volume(const Polyhedron& mesh) {
  Rational six_volume = 0;
  for (const Face& f : mesh.faces) {
    Point3 n = loop_normal(mesh.vertices, f.outer);
    for (const auto& h : f.holes) n = n + loop_normal(mesh.vertices, h);
    six_volume += dot(n, mesh.vertices[f.outer[0]]);
  }
  if (sign(six_volume) <= 0) throw GeometryError(ErrorKind::BadOrientation, "faces point inward (signed volume is not positive)");
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Chains directed edges (face on the left) into loops; at a vertex with
// several exits the first one clockwise from the way back is taken.
std::vector<Loop> chain_loops(const std::vector<Point3>& vs, const Projection& pr,
                              std::vector<std::pair<std::size_t, std::size_t>> edges) {
  std::multimap<std::size_t, std::size_t> out;
  for (const auto& [u, v] : edges) out.emplace(u, v);
  std::vector<Loop> loops;
  while (!out.empty()) {
    auto first = out.begin();
    const std::size_t start = first->first;
    std::size_t prev = start;
    std::size_t cur = first->second;
    out.erase(first);
    Loop loop{start};
    while (cur != start) {
      loop.push_back(cur);
      auto [lo, hi] = out.equal_range(cur);
      if (lo == hi) throw GeometryError(ErrorKind::OpenEdge, "boundary chain breaks at vertex " + std::to_string(cur));
      auto pick = lo;
      if (std::next(lo) != hi) {
        const Point2 c = apply(pr, vs[cur]);
        const Point2 back = apply(pr, vs[prev]);
        const Point2 dback{Rational(back.x - c.x), Rational(back.y - c.y)};
        // clockwise-first from dback == counter-clockwise-last
        for (auto it = std::next(lo); it != hi; ++it) {
          const Point2 w = apply(pr, vs[it->second]);
          const Point2 p = apply(pr, vs[pick->second]);
          if (ccw_before(dback, {Rational(p.x - c.x), Rational(p.y - c.y)}, {Rational(w.x - c.x), Rational(w.y - c.y)})) pick = it;
        }
      }
      prev = cur;
      cur = pick->second;
      out.erase(pick);
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

Rational projected_area2(const std::vector<Point3>& vs, const Loop& loop, const Projection& pr) {
  return twice_signed_area(project_loop(vs, loop, pr));
}

std::vector<Face> merge_coplanar(const Polyhedron& mesh, const std::vector<FaceInfo>& info) {
  const std::size_t nf = mesh.faces.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> owner;
  auto visit = [&](std::size_t f, const Loop& loop) {
    for (std::size_t i = 0; i < loop.size(); ++i) owner[{loop[i], loop[(i + 1) % loop.size()]}] = f;
  };
  for (std::size_t f = 0; f < nf; ++f) {
    visit(f, mesh.faces[f].outer);
    for (const auto& h : mesh.faces[f].holes) visit(f, h);
  }
  UnionFind uf(nf);
  for (const auto& [e, f] : owner) {
    const std::size_t g = owner.at({e.second, e.first});
    if (f == g) continue;
    const Point3& a = info[f].normal;
    const Point3& b = info[g].normal;
    if (is_zero(cross(a, b)) && sign(dot(a, b)) > 0) uf.unite(f, g);
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t f = 0; f < nf; ++f) groups[uf.find(f)].push_back(f);

  std::vector<Face> faces;
  for (const auto& [root, members] : groups) {
    if (members.size() == 1) {
      faces.push_back(mesh.faces[members[0]]);
      continue;
    }
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t f : members) {
      auto take = [&](const Loop& loop) {
        for (std::size_t i = 0; i < loop.size(); ++i) edges.insert({loop[i], loop[(i + 1) % loop.size()]});
      };
      take(mesh.faces[f].outer);
      for (const auto& h : mesh.faces[f].holes) take(h);
    }
    std::vector<std::pair<std::size_t, std::size_t>> boundary;
    for (const auto& e : edges) {
      if (!edges.contains({e.second, e.first})) boundary.push_back(e);
    }
    const Projection pr = projection_for(info[root].normal);
    Face merged;
    bool have_outer = false;
    for (Loop& loop : chain_loops(mesh.vertices, pr, boundary)) {
      if (sign(projected_area2(mesh.vertices, loop, pr)) > 0) {
        if (have_outer) throw GeometryError(ErrorKind::NonPlanarFace, "coplanar faces merge into a disconnected patch");
        merged.outer = std::move(loop);
        have_outer = true;
      } else {
        merged.holes.push_back(std::move(loop));
      }
    }
    if (!have_outer) throw GeometryError(ErrorKind::BadOrientation, "merged coplanar patch has no outer loop");
    faces.push_back(std::move(merged));
  }
  return faces;
}

// Removes vertices that merely subdivide a straight edge.
void drop_pass_through(Polyhedron& mesh) {
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::set<std::size_t>> nbr(mesh.vertices.size());
    auto visit = [&](const Loop& loop) {
      for (std::size_t i = 0; i < loop.size(); ++i) {
        const std::size_t a = loop[i];
        const std::size_t b = loop[(i + 1) % loop.size()];
        nbr[a].insert(b);
        nbr[b].insert(a);
      }
    };
    for (const Face& f : mesh.faces) {
      visit(f.outer);
      for (const auto& h : f.holes) visit(h);
    }
    std::vector<char> drop(mesh.vertices.size(), 0);
    for (std::size_t v = 0; v < mesh.vertices.size(); ++v) {
      if (nbr[v].size() != 2) continue;
      const std::size_t a = *nbr[v].begin();
      const std::size_t b = *nbr[v].rbegin();
      if (drop[a] || drop[b]) continue;
      if (is_zero(cross(mesh.vertices[v] - mesh.vertices[a], mesh.vertices[b] - mesh.vertices[v]))) {
        drop[v] = 1;
        changed = true;
      }
    }
    if (!changed) break;
    auto strip = [&](Loop& loop) { std::erase_if(loop, [&](std::size_t v) { return drop[v] != 0; }); };
    for (Face& f : mesh.faces) {
      strip(f.outer);
      for (auto& h : f.holes) strip(h);
    }
  }
}

void compact(Polyhedron& mesh) {
  std::vector<std::size_t> remap(mesh.vertices.size(), SIZE_MAX);
  std::vector<Point3> kept;
  auto visit = [&](Loop& loop) {
    for (std::size_t& v : loop) {
      if (remap[v] == SIZE_MAX) {
        remap[v] = kept.size();
        kept.push_back(mesh.vertices[v]);
      }
      v = remap[v];
    }
  };
  for (Face& f : mesh.faces) {
    visit(f.outer);
    for (auto& h : f.holes) visit(h);
  }
  mesh.vertices = std::move(kept);
}

}  // namespace

Polyhedron normalize(const Polyhedron& input) {
  if (input.faces.empty()) throw GeometryError(ErrorKind::OpenEdge, "mesh has no faces");
  std::vector<FaceInfo> info;
  info.reserve(input.faces.size());
  for (std::size_t f = 0; f < input.faces.size(); ++f) info.push_back(check_face(input, f));
  check_edges(input);
  check_volume(input);

  Polyhedron mesh{input.vertices, merge_coplanar(input, info)};
  drop_pass_through(mesh);
  compact(mesh);
  check_edges(mesh);
  return mesh;
}

FeatureCount count_features(const Polyhedron& mesh) {
  FeatureCount c;
  c.V = mesh.vertices.size();
  c.F = mesh.faces.size();
  std::size_t half_edges = 0;
  for (const Face& f : mesh.faces) {
    half_edges += f.outer.size();
    for (const auto& h : f.holes) half_edges += h.size();
    c.holes += f.holes.size();
  }
  c.E = half_edges / 2;
  return c;
}

FeatureCount validate(const Polyhedron& mesh) { return count_features(normalize(mesh)); }

SolidQuery::SolidQuery(const Polyhedron& mesh) : mesh_(mesh) {
  planes_.reserve(mesh_.faces.size());
  for (const Face& f : mesh_.faces) {
    FacePlane fp;
    fp.normal = loop_normal(mesh_.vertices, f.outer);
    fp.offset = dot(fp.normal, mesh_.vertices[f.outer[0]]);
    const Projection pr = projection_for(fp.normal);
    fp.drop = dominant_axis(fp.normal);
    fp.swap = pr.i != (fp.drop + 1) % 3;
    fp.loops.push_back(project_loop(mesh_.vertices, f.outer, pr));
    for (const auto& h : f.holes) fp.loops.push_back(project_loop(mesh_.vertices, h, pr));
    planes_.push_back(std::move(fp));
  }
}

Point2 SolidQuery::project(const FacePlane& face, const Point3& p) const {
  int i = (face.drop + 1) % 3;
  int j = (face.drop + 2) % 3;
  if (face.swap) std::swap(i, j);
  return {p[i], p[j]};
}

Location SolidQuery::locate_in_face(const FacePlane& face, const Point2& q) const { return locate_loops(face.loops, q); }

Location SolidQuery::locate(const Point3& p) const {
  for (const FacePlane& f : planes_) {
    if (dot(f.normal, p) == f.offset && locate_in_face(f, project(f, p)) != Location::Exterior) return Location::Boundary;
  }
  // Deterministic sequence of ray directions; the first one that meets
  // faces only in their relative interiors decides by crossing parity.
  for (long k = 0;; ++k) {
    const Point3 d{Rational(k + 3), Rational(k * k + 7), Rational(2 * k + 1, 3)};
    bool generic = true;
    bool inside = false;
    for (const FacePlane& f : planes_) {
      const Rational nd = dot(f.normal, d);
      const Rational gap = f.offset - dot(f.normal, p);
      if (sign(nd) == 0) {
        if (sign(gap) == 0) {
          generic = false;
          break;
        }
        continue;
      }
      const Rational t = gap / nd;
      if (sign(t) <= 0) continue;
      const Location hit = locate_in_face(f, project(f, p + t * d));
      if (hit == Location::Boundary) {
        generic = false;
        break;
      }
      if (hit == Location::Interior) inside = !inside;
    }
    if (generic) return inside ? Location::Interior : Location::Exterior;
  }
}

bool SolidQuery::visible(const Point3& a, const Point3& b) const {
  if (locate(a) == Location::Exterior || locate(b) == Location::Exterior) {
    throw GeometryError(ErrorKind::Precondition, "visibility endpoint lies outside the solid");
  }
  if (a == b) return true;
  const Point3 ab = b - a;
  std::vector<Rational> ts{Rational(0), Rational(1)};
  for (const FacePlane& f : planes_) {
    const Rational sa = dot(f.normal, a) - f.offset;
    const Rational sb = dot(f.normal, b) - f.offset;
    if (sign(sa) == 0 && sign(sb) == 0) {
      // segment in the face plane: it enters or leaves the face at loop edges
      const Point2 pa = project(f, a);
      const Point2 pb = project(f, b);
      const Point2 d{Rational(pb.x - pa.x), Rational(pb.y - pa.y)};
      const Rational dd = d.x * d.x + d.y * d.y;
      for (const auto& loop : f.loops) {
        for (std::size_t i = 0; i < loop.size(); ++i) {
          const Point2& p = loop[i];
          const Point2& q = loop[(i + 1) % loop.size()];
          const Point2 e{Rational(q.x - p.x), Rational(q.y - p.y)};
          const Point2 ap{Rational(p.x - pa.x), Rational(p.y - pa.y)};
          const Rational den = d.x * e.y - d.y * e.x;
          if (sign(den) != 0) {
            const Rational t = (ap.x * e.y - ap.y * e.x) / den;
            const Rational s = (ap.x * d.y - ap.y * d.x) / den;
            if (sign(t) >= 0 && t <= 1 && sign(s) >= 0 && s <= 1) ts.push_back(t);
          } else if (sign(ap.x * d.y - ap.y * d.x) == 0) {
            for (const Point2* r : {&p, &q}) {
              const Rational t = ((r->x - pa.x) * d.x + (r->y - pa.y) * d.y) / dd;
              if (sign(t) >= 0 && t <= 1) ts.push_back(t);
            }
          }
        }
      }
      continue;
    }
    if (sign(sa) * sign(sb) > 0) continue;
    const Rational t = sa / (sa - sb);
    if (locate_in_face(f, project(f, a + t * ab)) != Location::Exterior) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const Rational mid = (ts[i] + ts[i + 1]) / 2;
    if (locate(a + mid * ab) == Location::Exterior) return false;
  }
  return true;
}

std::vector<std::size_t> SolidQuery::observers(const Point3& p) const {
  const std::size_t n = mesh_.vertices.size();
  std::vector<char> seen(n, 0);
  parallel_chunks(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t v = begin; v < end; ++v) seen[v] = visible(p, mesh_.vertices[v]) ? 1 : 0;
  });
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

bool SolidQuery::observed_by_any_vertex(const Point3& p) const {
  for (const Point3& v : mesh_.vertices) {
    if (visible(p, v)) return true;
  }
  return false;
}

Location point_in_polyhedron(const Polyhedron& mesh, const Point3& p) { return SolidQuery(mesh).locate(p); }

bool visible3(const Polyhedron& mesh, const Point3& a, const Point3& b) { return SolidQuery(mesh).visible(a, b); }

std::vector<std::size_t> vertex_observers(const Polyhedron& mesh, const Point3& p) {
  return SolidQuery(mesh).observers(p);
}

BlindProbe blind_region_probe(const Polyhedron& mesh, const Point3& center, const Rational& radius,
                              std::size_t samples, std::uint64_t seed) {
  const SolidQuery query(mesh);
  if (query.locate(center) != Location::Interior) {
    throw GeometryError(ErrorKind::Precondition, "probe center is not interior");
  }
  constexpr long kScale = 1L << 20;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-kScale, kScale);
  const Rational r2 = Rational(kScale) * kScale;

  std::vector<Point3> points;
  points.reserve(samples);
  const std::size_t max_attempts = samples * 1000 + 1000;
  for (std::size_t attempt = 0; points.size() < samples && attempt < max_attempts; ++attempt) {
    const long x = coord(rng), y = coord(rng), z = coord(rng);
    if (Rational(x) * x + Rational(y) * y + Rational(z) * z > r2) continue;
    const Rational s = radius / kScale;
    const Point3 p = center + Point3{Rational(s * x), Rational(s * y), Rational(s * z)};
    if (query.locate(p) != Location::Interior) continue;
    points.push_back(p);
  }

  std::vector<char> blind(points.size(), 0);
  parallel_chunks(points.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) blind[i] = query.observed_by_any_vertex(points[i]) ? 0 : 1;
  });
  BlindProbe out;
  out.samples = points.size();
  out.blind = static_cast<std::size_t>(std::count(blind.begin(), blind.end(), 1));
  return out;
}

}  // namespace gallery
