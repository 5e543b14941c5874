#include "gallery/io.hpp"

#include "gallery/error.hpp"
#include "gallery/predicates.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace gallery {

namespace {

GeometryError parse_error(const std::string& what) { return GeometryError(ErrorKind::Parse, what); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  throw parse_error("coordinate must be a rational string");
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::vector<std::size_t> index_list(const Json& j, std::size_t bound) {
  if (!j.is_array()) throw parse_error("face loop must be an array of indices");
  std::vector<std::size_t> out;
  for (const Json& v : j) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
      throw parse_error("face index must be a non-negative integer");
    }
    const auto i = v.get<std::size_t>();
    if (i >= bound) throw parse_error("face index " + std::to_string(i) + " out of range");
    out.push_back(i);
  }
  return out;
}

}  // namespace

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

Json to_json(const Point2& p) { return Json::array({to_string(p.x), to_string(p.y)}); }
Json to_json(const Point3& p) { return Json::array({to_string(p.x), to_string(p.y), to_string(p.z)}); }

Point2 point2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw parse_error("2D point must be [\"x\",\"y\"]");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Point3 point3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw parse_error("3D point must be [\"x\",\"y\",\"z\"]");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
}

Json polygon_to_json(const SimplePolygon& polygon) {
  Json vs = Json::array();
  for (const Point2& p : polygon.vertices()) vs.push_back(to_json(p));
  return Json{{"vertices", vs}};
}

SimplePolygon polygon_from_json(const Json& json) {
  const Json& vs = member(json, "vertices");
  if (!vs.is_array()) throw parse_error("\"vertices\" must be an array");
  std::vector<Point2> points;
  for (const Json& v : vs) points.push_back(point2_from_json(v));
  return validate_simple(std::move(points));
}

Json polyhedron_to_json(const Polyhedron& mesh) {
  Json vs = Json::array();
  for (const Point3& p : mesh.vertices) vs.push_back(to_json(p));
  Json fs = Json::array();
  for (const Face& f : mesh.faces) {
    Json holes = Json::array();
    for (const auto& h : f.holes) holes.push_back(h);
    fs.push_back(Json{{"outer", f.outer}, {"holes", holes}});
  }
  return Json{{"vertices", vs}, {"faces", fs}};
}

Polyhedron polyhedron_from_json(const Json& json) {
  Polyhedron mesh;
  const Json& vs = member(json, "vertices");
  const Json& fs = member(json, "faces");
  if (!vs.is_array() || !fs.is_array()) throw parse_error("\"vertices\" and \"faces\" must be arrays");
  for (const Json& v : vs) mesh.vertices.push_back(point3_from_json(v));
  for (const Json& f : fs) {
    Face face;
    face.outer = index_list(member(f, "outer"), mesh.vertices.size());
    if (f.contains("holes")) {
      if (!f.at("holes").is_array()) throw parse_error("\"holes\" must be an array");
      for (const Json& h : f.at("holes")) face.holes.push_back(index_list(h, mesh.vertices.size()));
    }
    mesh.faces.push_back(std::move(face));
  }
  validate(mesh);
  return mesh;
}

Json verdict_to_json(const CoverageVerdict& verdict) {
  Json j;
  if (const Uncovered* u = verdict.uncovered()) {
    j["verdict"] = "uncovered";
    j["witness"] = to_json(u->witness);
  } else {
    j["verdict"] = "covered";
  }
  j["cells"] = verdict.cells;
  return j;
}

Json report_to_json(const StrategyReport& report) {
  Json starts = Json::array();
  for (const StartVerdict& s : report.starts) {
    Json e;
    e["start"] = s.start;
    e["guards"] = s.guards.indices();
    const Json v = verdict_to_json(s.verdict);
    e["verdict"] = v["verdict"];
    if (v.contains("witness")) e["witness"] = v["witness"];
    starts.push_back(e);
  }
  Json j;
  j["n"] = report.n;
  j["k"] = report.k;
  j["side"] = to_string(report.side);
  j["starts"] = starts;
  j["exists_good_start"] = report.exists_good_start;
  return j;
}

Json search_report_to_json(const SearchReport& report) {
  Json failures = Json::array();
  for (const SearchFailure& f : report.failures) {
    failures.push_back(Json{{"trial", f.trial},
                            {"origin", f.origin},
                            {"polygon", polygon_to_json(f.polygon)},
                            {"report", report_to_json(f.report)}});
  }
  Json j;
  j["kind"] = report.kind;
  j["n"] = report.n;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["polygons_checked"] = report.polygons.size();
  j["uncovered_witnesses"] = report.uncovered_witnesses.size();
  j["failures"] = failures;
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GeometryError(ErrorKind::Precondition, "cannot write " + path);
  out << text;
  if (!out) throw GeometryError(ErrorKind::Precondition, "write failed for " + path);
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

// ---- SVG ----

namespace {

struct LayerStyle {
  const char* colour;
  const char* pattern;  // hatch direction
};

constexpr LayerStyle kStyles[] = {
    {"#d62728", "M0,0 L8,8"},
    {"#1f77b4", "M0,8 L8,0"},
    {"#2ca02c", "M0,4 L8,4"},
    {"#9467bd", "M4,0 L4,8"},
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string path_of(std::span<const Point2> pts) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    d += (i ? " L" : "M") + num(to_double(pts[i].x)) + "," + num(to_double(pts[i].y));
  }
  return d + " Z";
}

}  // namespace

std::string render_svg(const SimplePolygon& polygon, const std::vector<SvgLayer>& layers) {
  std::vector<Region2> regions;
  std::vector<Point2> extent(polygon.vertices().begin(), polygon.vertices().end());
  for (const SvgLayer& l : layers) {
    regions.push_back(unobserved_region(polygon, l.guards, l.side));
    for (const SimplePolygon& f : regions.back().faces) extent.insert(extent.end(), f.vertices().begin(), f.vertices().end());
  }
  const Box2 box = bounding_box(extent);
  const double x0 = to_double(box.xmin), x1 = to_double(box.xmax);
  const double y0 = to_double(box.ymin), y1 = to_double(box.ymax);
  const double pad = 0.05 * std::max({x1 - x0, y1 - y0, 1.0});
  const double w = x1 - x0 + 2 * pad, h = y1 - y0 + 2 * pad;
  const double dot = 0.012 * std::max(w, h), stroke = 0.003 * std::max(w, h);

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(x0 - pad) << " " << num(-y1 - pad) << " "
    << num(w) << " " << num(h) << "\">\n<defs>\n";
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const LayerStyle& st = kStyles[i % std::size(kStyles)];
    s << "  <pattern id=\"hatch" << i << "\" width=\"8\" height=\"8\" patternUnits=\"userSpaceOnUse\">"
      << "<path d=\"" << st.pattern << "\" stroke=\"" << st.colour << "\" stroke-width=\"1\"/></pattern>\n";
  }
  // y axis points up
  s << "</defs>\n<g transform=\"scale(1,-1)\">\n";
  s << "  <path class=\"polygon\" d=\"" << path_of(polygon.vertices()) << "\" fill=\"#f2f2f2\" stroke=\"black\" stroke-width=\""
    << num(stroke) << "\"/>\n";
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const LayerStyle& st = kStyles[i % std::size(kStyles)];
    for (const SimplePolygon& f : regions[i].faces) {
      s << "  <path class=\"unobserved layer" << i << "\" d=\"" << path_of(f.vertices()) << "\" fill=\"" << st.colour
        << "\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";
    }
  }
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const LayerStyle& st = kStyles[i % std::size(kStyles)];
    for (std::size_t g : layers[i].guards.indices()) {
      const Point2& p = polygon[g];
      s << "  <circle class=\"guard layer" << i << "\" cx=\"" << num(to_double(p.x)) << "\" cy=\"" << num(to_double(p.y))
        << "\" r=\"" << num(dot) << "\" fill=\"" << st.colour << "\"/>\n";
    }
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

// ---- triangulation and OBJ ----

namespace {

struct Plane2 {
  int i = 0, j = 1;
};

Plane2 face_projection(const Polyhedron& mesh, const Face& face) {
  Point3 n{0, 0, 0};
  for (std::size_t a = 0; a < face.outer.size(); ++a) {
    n = n + cross(mesh.vertices[face.outer[a]], mesh.vertices[face.outer[(a + 1) % face.outer.size()]]);
  }
  int k = 0;
  for (int c = 1; c < 3; ++c) {
    if (abs(n[c]) > abs(n[k])) k = c;
  }
  Plane2 p{(k + 1) % 3, (k + 2) % 3};
  if (sign(n[k]) < 0) std::swap(p.i, p.j);
  return p;
}

// Direction from v towards m lies strictly inside the region to the left of
// the boundary p -> v -> n.
bool inside_cone(const Point2& p, const Point2& v, const Point2& n, const Point2& m) {
  const bool left_in = orient2d(p, v, m) > 0, left_out = orient2d(v, n, m) > 0;
  return orient2d(p, v, n) > 0 ? (left_in && left_out) : (left_in || left_out);
}

class FaceTriangulator {
 public:
  FaceTriangulator(const Polyhedron& mesh, const Face& face) : mesh_(mesh) {
    const Plane2 pr = face_projection(mesh, face);
    auto at = [&](std::size_t v) { return Point2{mesh.vertices[v][pr.i], mesh.vertices[v][pr.j]}; };
    for (std::size_t v : face.outer) pts_.emplace(v, at(v));
    for (const auto& h : face.holes) {
      for (std::size_t v : h) pts_.emplace(v, at(v));
    }
    ring_ = face.outer;
    holes_ = face.holes;
  }

  std::vector<Triangle> run() {
    // rightmost hole first, so later bridges see earlier ones as ring edges
    std::sort(holes_.begin(), holes_.end(), [&](const auto& a, const auto& b) {
      return pt(rightmost(a)) < pt(rightmost(b));
    });
    while (!holes_.empty()) {
      std::vector<std::size_t> hole = std::move(holes_.back());
      holes_.pop_back();
      bridge(hole);
    }
    return clip();
  }

 private:
  const Point2& pt(std::size_t v) const { return pts_.at(v); }

  std::size_t rightmost(const std::vector<std::size_t>& loop) const {
    return *std::max_element(loop.begin(), loop.end(), [&](std::size_t a, std::size_t b) { return pt(a) < pt(b); });
  }

  bool crosses_any(const Point2& a, const Point2& b, const std::vector<std::size_t>& loop) const {
    for (std::size_t e = 0; e < loop.size(); ++e) {
      const Point2& c = pt(loop[e]);
      const Point2& d = pt(loop[(e + 1) % loop.size()]);
      const SegmentRelation r = classify_segments(a, b, c, d);
      if (r == SegmentRelation::Disjoint) continue;
      // sharing an endpoint is fine; a second contact would be an overlap
      if (r == SegmentRelation::Touch && (c == a || c == b || d == a || d == b)) continue;
      return true;
    }
    return false;
  }

  void bridge(const std::vector<std::size_t>& hole) {
    const std::size_t hm = static_cast<std::size_t>(std::find(hole.begin(), hole.end(), rightmost(hole)) - hole.begin());
    const std::size_t m = hole[hm];
    const Point2& pm = pt(m);
    const Point2& hp = pt(hole[(hm + hole.size() - 1) % hole.size()]);
    const Point2& hn = pt(hole[(hm + 1) % hole.size()]);

    std::size_t best = ring_.size();
    Rational best_d;
    for (std::size_t r = 0; r < ring_.size(); ++r) {
      const Point2& pv = pt(ring_[r]);
      if (pv == pm) continue;
      const Rational dx = pv.x - pm.x, dy = pv.y - pm.y, d = dx * dx + dy * dy;
      if (best < ring_.size() && d >= best_d) continue;
      if (!inside_cone(pt(ring_[(r + ring_.size() - 1) % ring_.size()]), pv, pt(ring_[(r + 1) % ring_.size()]), pm)) continue;
      if (!inside_cone(hp, pm, hn, pv)) continue;
      if (crosses_any(pm, pv, ring_) || crosses_any(pm, pv, hole)) continue;
      bool blocked = false;
      for (const auto& h : holes_) blocked = blocked || crosses_any(pm, pv, h);
      if (blocked) continue;
      best = r;
      best_d = d;
    }
    if (best == ring_.size()) throw GeometryError(ErrorKind::Precondition, "no bridge from a face hole to its outer loop");

    std::vector<std::size_t> out(ring_.begin(), ring_.begin() + static_cast<std::ptrdiff_t>(best) + 1);
    for (std::size_t k = 0; k <= hole.size(); ++k) out.push_back(hole[(hm + k) % hole.size()]);
    out.insert(out.end(), ring_.begin() + static_cast<std::ptrdiff_t>(best), ring_.end());
    ring_ = std::move(out);
  }

  bool is_ear(const std::vector<std::size_t>& ring, std::size_t i) const {
    const std::size_t n = ring.size();
    const Point2& a = pt(ring[(i + n - 1) % n]);
    const Point2& b = pt(ring[i]);
    const Point2& c = pt(ring[(i + 1) % n]);
    if (orient2d(a, b, c) <= 0) return false;
    for (std::size_t k = 0; k < n; ++k) {
      const Point2& p = pt(ring[k]);
      if (p == a || p == b || p == c) continue;
      if (orient2d(a, b, p) >= 0 && orient2d(b, c, p) >= 0 && orient2d(c, a, p) >= 0) return false;
    }
    // a bridge copy of b must not enter the ear either
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || pt(ring[k]) != b) continue;
      const Point2& q = pt(ring[(k + n - 1) % n]);
      const Point2& r = pt(ring[(k + 1) % n]);
      for (const Point2* s : {&q, &r}) {
        if (*s != a && *s != c && orient2d(a, b, *s) > 0 && orient2d(b, c, *s) > 0) return false;
      }
    }
    return true;
  }

  std::vector<Triangle> clip() {
    std::vector<Triangle> out;
    std::vector<std::size_t> ring = ring_;
    while (ring.size() > 3) {
      bool found = false;
      for (std::size_t i = 0; i < ring.size(); ++i) {
        if (!is_ear(ring, i)) continue;
        const std::size_t n = ring.size();
        out.push_back({ring[(i + n - 1) % n], ring[i], ring[(i + 1) % n]});
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        found = true;
        break;
      }
      if (!found) throw GeometryError(ErrorKind::Precondition, "face has no ear left to clip");
    }
    if (orient2d(pt(ring[0]), pt(ring[1]), pt(ring[2])) > 0) out.push_back({ring[0], ring[1], ring[2]});
    return out;
  }

  const Polyhedron& mesh_;
  std::map<std::size_t, Point2> pts_;
  std::vector<std::size_t> ring_;
  std::vector<std::vector<std::size_t>> holes_;
};

}  // namespace

std::vector<Triangle> triangulate(const Polyhedron& mesh) {
  std::vector<Triangle> out;
  for (const Face& f : mesh.faces) {
    const auto t = FaceTriangulator(mesh, f).run();
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

EdgeAudit audit_triangles(const std::vector<Triangle>& triangles) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> directed;
  for (const Triangle& t : triangles) {
    for (std::size_t k = 0; k < 3; ++k) ++directed[{t[k], t[(k + 1) % 3]}];
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> undirected;
  EdgeAudit a;
  a.triangles = triangles.size();
  for (const auto& [e, count] : directed) {
    undirected[{std::min(e.first, e.second), std::max(e.first, e.second)}] += count;
    const auto rev = directed.find({e.second, e.first});
    if (count != 1 || rev == directed.end() || rev->second != 1) ++a.unpaired;
  }
  a.edges = undirected.size();
  for (const auto& [e, count] : undirected) {
    if (count != 2) ++a.bad_edges;
  }
  return a;
}

std::string render_obj(const Polyhedron& mesh) {
  std::ostringstream s;
  s << "# " << mesh.vertices.size() << " vertices, " << mesh.faces.size() << " faces\n";
  for (const Point3& p : mesh.vertices) {
    s << "v " << num(to_double(p.x)) << " " << num(to_double(p.y)) << " " << num(to_double(p.z)) << "\n";
  }
  for (const Triangle& t : triangulate(mesh)) s << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
  return s.str();
}

}  // namespace gallery
