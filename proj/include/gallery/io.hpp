#pragma once

#include "gallery/guards.hpp"
#include "gallery/polygon.hpp"
#include "gallery/polyhedron.hpp"
#include "gallery/search.hpp"
#include "gallery/visibility.hpp"

#include <json.hpp>

#include <array>
#include <string>
#include <vector>

namespace gallery {

using Json = nlohmann::ordered_json;

/// Pretty-printed with a trailing newline; the byte form used everywhere.
std::string dump(const Json& json);

Json to_json(const Point2& p);
Json to_json(const Point3& p);
Point2 point2_from_json(const Json& json);
Point3 point3_from_json(const Json& json);

/// {"vertices": [["x","y"], ...]}
Json polygon_to_json(const SimplePolygon& polygon);
/// Throws GeometryError(Parse) on malformed input; validate_simple errors
/// pass through unchanged.
SimplePolygon polygon_from_json(const Json& json);

/// {"vertices": [["x","y","z"], ...], "faces": [{"outer": [...], "holes": [[...]]}]}
Json polyhedron_to_json(const Polyhedron& mesh);
/// Parses and runs validate(); returns the mesh as written.
Polyhedron polyhedron_from_json(const Json& json);

/// {"verdict": "covered"|"uncovered", "witness": ["x","y"] (uncovered only), "cells": N}
Json verdict_to_json(const CoverageVerdict& verdict);

/// {"n", "k", "side", "starts": [{"start", "guards", "verdict", "witness"?}], "exists_good_start"}
Json report_to_json(const StrategyReport& report);

/// Search run without timings, so reruns compare byte for byte.
Json search_report_to_json(const SearchReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Reads a JSON document; GeometryError(Parse) on I/O or syntax errors.
Json read_json_file(const std::string& path);

// ---- rendering (floats allowed; nothing here feeds back into decisions) ----

/// One guard placement drawn over the polygon. Layers get distinct colours
/// in order (red, blue, then a fixed cycle).
struct SvgLayer {
  GuardPlacement guards;
  Side side = Side::Exterior;
};

/// SVG 1.1 drawing of the polygon, each layer's guards as dots and each
/// layer's unobserved region shaded in that layer's style.
std::string render_svg(const SimplePolygon& polygon, const std::vector<SvgLayer>& layers);

using Triangle = std::array<std::size_t, 3>;

/// Exact triangulation of every face (holes are bridged, then ear-clipped),
/// oriented like the faces. Uses only the mesh vertices.
std::vector<Triangle> triangulate(const Polyhedron& mesh);

struct EdgeAudit {
  std::size_t triangles = 0;
  std::size_t edges = 0;
  std::size_t bad_edges = 0;  // undirected edges not used by exactly two triangles
  std::size_t unpaired = 0;   // directed edges whose reverse is missing
  bool watertight() const { return bad_edges == 0 && unpaired == 0; }
};

EdgeAudit audit_triangles(const std::vector<Triangle>& triangles);

/// Wavefront OBJ with v and f records only.
std::string render_obj(const Polyhedron& mesh);

}  // namespace gallery
