#include "gallery/cli.hpp"

#include "gallery/constructions.hpp"
#include "gallery/error.hpp"
#include "gallery/guards.hpp"
#include "gallery/io.hpp"
#include "gallery/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

namespace gallery {

namespace {

// Thrown for problems with the command line or input files: exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kPolygonNames = {"leszek", "double-leszek", "square"};
const std::vector<std::string> kPolyhedronNames = {"uberoctoplex", "octoplex", "truncated-octoplex", "cube"};

SimplePolygon unit_square() {
  return validate_simple({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(1), Rational(1)}, {Rational(0), Rational(1)}});
}

std::optional<SimplePolygon> polygon_by_name(const std::string& name) {
  if (name == "leszek") return leszek_fortress();
  if (name == "double-leszek") return double_leszek();
  if (name == "square") return unit_square();
  return std::nullopt;
}

std::optional<Polyhedron> polyhedron_by_name(const std::string& name) {
  if (name == "uberoctoplex") return uberoctoplex();
  if (name == "octoplex") return octoplex();
  if (name == "truncated-octoplex") return truncated_octoplex();
  if (name == "cube") return subtract(box_solid({0, 0, 0}, {kCubeSize, kCubeSize, kCubeSize}), {});
  return std::nullopt;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream ss(text);
  while (std::getline(ss, cur, sep)) parts.push_back(cur);
  return parts;
}

Point3 parse_point3(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw InputError("point must be x,y,z");
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

Side parse_side(const std::string& s) {
  if (s == "exterior") return Side::Exterior;
  if (s == "interior") return Side::Interior;
  throw InputError("side must be exterior or interior");
}

std::size_t strategy_step(const std::string& s) {
  if (s == "every-2nd") return 2;
  if (s == "every-3rd") return 3;
  throw InputError("unknown strategy " + s);
}

void print_verdict_line(std::ostream& out, const std::string& label, const CoverageVerdict& v) {
  out << label << ": ";
  if (const Uncovered* u = v.uncovered()) {
    out << "uncovered, witness " << to_string(u->witness);
  } else {
    out << "covered";
  }
  out << " (" << v.cells << " cells)\n";
}

struct CoverageOptions {
  std::string file;
  std::string strategy;
  bool all_starts = false;
  std::optional<std::size_t> start;
  std::string guards;
  std::optional<std::size_t> min_guards;
  std::string json_out;
};

void add_coverage_options(CLI::App* cmd, CoverageOptions& o, const std::string& default_strategy) {
  o.strategy = default_strategy;
  cmd->add_option("file", o.file, "polygon JSON")->required();
  cmd->add_option("--strategy", o.strategy, "every-2nd or every-3rd")->capture_default_str();
  cmd->add_flag("--all-starts", o.all_starts, "check every distinct starting vertex");
  cmd->add_option("--start", o.start, "check one starting vertex");
  cmd->add_option("--guards", o.guards, "comma-separated vertex indices");
  cmd->add_option("--min-guards", o.min_guards, "smallest covering vertex set up to this size");
  cmd->add_option("--json", o.json_out, "write the JSON report here");
}

int run_coverage(const CoverageOptions& o, Side side, std::ostream& out) {
  const int modes = int(o.all_starts) + int(o.start.has_value()) + int(!o.guards.empty()) + int(o.min_guards.has_value());
  if (modes != 1) throw InputError("give exactly one of --all-starts, --start, --guards, --min-guards");
  const std::size_t k = strategy_step(o.strategy);
  const SimplePolygon polygon = polygon_from_json(read_json_file(o.file));
  out << "polygon: " << polygon.size() << " vertices, side " << to_string(side) << "\n";
  const CoverageAnalysis analysis(polygon, side);

  Json report;
  int code = kExitVerified;
  if (o.all_starts) {
    const StrategyReport r = all_starts(analysis, k);
    out << "strategy: every " << (k == 2 ? "2nd" : "3rd") << " vertex, " << r.starts.size() << " distinct starts\n";
    for (const StartVerdict& s : r.starts) print_verdict_line(out, "start " + std::to_string(s.start), s.verdict);
    out << "exists_good_start: " << (r.exists_good_start ? "true" : "false") << "\n";
    report = report_to_json(r);
  } else if (o.min_guards) {
    const auto best = brute_force_min_guards(analysis, *o.min_guards);
    if (best) {
      std::string list;
      for (std::size_t g : best->guards.indices()) list += (list.empty() ? "" : ",") + std::to_string(g);
      out << "min_guards: " << best->size << " {" << list << "}\n";
      print_verdict_line(out, "recheck", best->verdict);
      report = Json{{"size", best->size}, {"guards", best->guards.indices()}, {"verdict", verdict_to_json(best->verdict)}};
    } else {
      out << "min_guards: none with at most " << *o.min_guards << "\n";
      report = Json{{"size", nullptr}};
      code = kExitRefuted;
    }
  } else {
    std::vector<std::size_t> idx;
    if (o.start) {
      if (*o.start >= polygon.size()) throw InputError("start out of range");
      idx = every_kth(polygon.size(), k, *o.start).indices();
    } else {
      for (const std::string& s : split(o.guards, ',')) {
        try {
          idx.push_back(std::stoul(s));
        } catch (const std::exception&) {
          throw InputError("bad guard index '" + s + "'");
        }
      }
    }
    const GuardPlacement guards(polygon.size(), idx);
    const CoverageVerdict v = analysis.verdict(guards);
    print_verdict_line(out, "guards", v);
    report = verdict_to_json(v);
    if (!v.covered()) code = kExitRefuted;
  }
  if (!o.json_out.empty()) write_text_file(o.json_out, dump(report));
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact art gallery and fortress verification", "gallery"};
  app.require_subcommand(1);

  std::string build_name, build_out, build_obj, build_svg;
  auto* build = app.add_subcommand("build", "emit a named construction as JSON");
  build->add_option("name", build_name, "construction name")->required();
  build->add_option("--out", build_out, "JSON output file (stdout if absent)");
  build->add_option("--obj", build_obj, "OBJ rendering of a polyhedron");
  build->add_option("--svg", build_svg, "SVG rendering of a polygon with both every-2nd parities");

  CoverageOptions fortress_opts, gallery_opts;
  auto* vf = app.add_subcommand("verify-fortress", "exterior coverage by vertex guards");
  add_coverage_options(vf, fortress_opts, "every-2nd");
  auto* vg = app.add_subcommand("verify-gallery", "interior coverage by vertex guards");
  add_coverage_options(vg, gallery_opts, "every-3rd");

  std::string poly_file, poly_point = "10,10,10", poly_radius;
  std::size_t poly_samples = 1000;
  std::uint64_t poly_seed = kDefaultSeed;
  auto* vp = app.add_subcommand("verify-polyhedron", "validate a mesh and check which vertices see a point");
  vp->add_option("file", poly_file, "polyhedron JSON")->required();
  vp->add_option("--point", poly_point, "x,y,z")->capture_default_str();
  vp->add_option("--probe-radius", poly_radius, "also sample a ball of this radius around the point");
  vp->add_option("--samples", poly_samples, "probe samples")->capture_default_str();
  vp->add_option("--seed", poly_seed, "probe seed")->capture_default_str();

  std::string search_kind, search_out;
  std::size_t search_n = 11, search_trials = 100;
  std::uint64_t search_seed = kDefaultSeed;
  bool search_inject = false;
  auto* search = app.add_subcommand("search", "random probes: theorem1 or odd-fortress");
  search->add_option("kind", search_kind, "theorem1 or odd-fortress")->required()->check(CLI::IsMember({"theorem1", "odd-fortress"}));
  search->add_option("--n", search_n, "n_max for theorem1, n for odd-fortress")->capture_default_str();
  search->add_option("--trials", search_trials, "number of random polygons")->capture_default_str();
  search->add_option("--seed", search_seed, "seed")->capture_default_str();
  search->add_flag("--inject-known", search_inject, "odd-fortress: check the 21-gon first as a known positive");
  search->add_option("--out", search_out, "write the JSON report here");

  std::string render_file, render_svg_out, render_obj_out, render_side = "exterior", render_strategy = "every-2nd";
  std::vector<std::size_t> render_starts;
  std::vector<std::string> render_guards;
  auto* render = app.add_subcommand("render", "SVG for a polygon file or OBJ for a polyhedron file");
  render->add_option("file", render_file, "polygon or polyhedron JSON")->required();
  render->add_option("--svg", render_svg_out, "SVG output");
  render->add_option("--obj", render_obj_out, "OBJ output");
  render->add_option("--side", render_side, "exterior or interior")->capture_default_str();
  render->add_option("--strategy", render_strategy, "strategy for --start")->capture_default_str();
  render->add_option("--start", render_starts, "one layer per start (repeatable)");
  render->add_option("--guards", render_guards, "one layer per comma-separated guard list (repeatable)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitVerified : kExitInputError;
  }

  try {
    if (*build) {
      if (auto polygon = polygon_by_name(build_name)) {
        const std::string text = dump(polygon_to_json(*polygon));
        if (build_out.empty()) out << text; else write_text_file(build_out, text);
        if (!build_obj.empty()) throw InputError("--obj applies to polyhedra only");
        if (!build_svg.empty()) {
          std::vector<SvgLayer> layers;
          for (std::size_t s : {0u, 1u}) layers.push_back({every_kth(polygon->size(), 2, s), Side::Exterior});
          write_text_file(build_svg, render_svg(*polygon, layers));
        }
        err << build_name << ": " << polygon->size() << " vertices\n";
        return kExitVerified;
      }
      if (auto mesh = polyhedron_by_name(build_name)) {
        const std::string text = dump(polyhedron_to_json(*mesh));
        if (build_out.empty()) out << text; else write_text_file(build_out, text);
        if (!build_svg.empty()) throw InputError("--svg applies to polygons only");
        if (!build_obj.empty()) write_text_file(build_obj, render_obj(*mesh));
        const FeatureCount c = count_features(*mesh);
        err << build_name << ": V=" << c.V << " E=" << c.E << " F=" << c.F << "\n";
        return kExitVerified;
      }
      std::string known;
      for (const auto* list : {&kPolygonNames, &kPolyhedronNames}) {
        for (const auto& n : *list) known += " " + n;
      }
      throw InputError("unknown construction '" + build_name + "'; known:" + known);
    }

    if (*vf) return run_coverage(fortress_opts, Side::Exterior, out);
    if (*vg) return run_coverage(gallery_opts, Side::Interior, out);

    if (*vp) {
      const Polyhedron mesh = polyhedron_from_json(read_json_file(poly_file));
      const FeatureCount c = count_features(mesh);
      const Point3 q = parse_point3(poly_point);
      out << "V=" << c.V << " E=" << c.E << " F=" << c.F << " holes=" << c.holes << " euler=" << c.euler() << "\n";
      const SolidQuery query(mesh);
      const Location where = query.locate(q);
      if (where == Location::Exterior) throw InputError("point " + poly_point + " lies outside the solid");
      const auto obs = query.observers(q);
      out << "point: " << to_string(q) << " (" << to_string(where) << ")\n";
      out << "observers: " << obs.size() << "/" << mesh.vertices.size() << "\n";
      for (std::size_t v : obs) out << "  vertex " << v << " " << to_string(mesh.vertices[v]) << "\n";
      if (!poly_radius.empty()) {
        if (where != Location::Interior) throw InputError("probe needs an interior point");
        const BlindProbe p = blind_region_probe(mesh, q, parse_rational(poly_radius), poly_samples, poly_seed);
        out << "probe radius " << poly_radius << ": blind " << p.blind << "/" << p.samples << "\n";
        if (p.blind != p.samples) return kExitRefuted;
      }
      return obs.empty() ? kExitVerified : kExitRefuted;
    }

    if (*search) {
      SearchReport r;
      if (search_kind == "theorem1") {
        r = probe_theorem1(search_n, search_trials, search_seed);
      } else {
        std::vector<SimplePolygon> injected;
        if (search_inject) injected.push_back(double_leszek());
        r = search_odd_fortress(search_n, search_trials, search_seed, injected);
      }
      out << "search " << r.kind << ": n=" << r.n << " trials=" << r.trials << " seed=" << r.seed
          << " failures=" << r.failures.size() << "\n";
      for (const SearchFailure& f : r.failures) {
        out << "  " << f.origin << " #" << f.trial << ": " << f.polygon.size() << "-gon, all "
            << f.report.starts.size() << " starts uncovered, replay " << (replay_failure(f) ? "ok" : "MISMATCH") << "\n";
      }
      if (!search_out.empty()) write_text_file(search_out, dump(search_report_to_json(r)));
      // only a polygon with no good start refutes the theorem1 probe
      return search_kind == "theorem1" && !r.failures.empty() ? kExitRefuted : kExitVerified;
    }

    if (*render) {
      const Json doc = read_json_file(render_file);
      if (doc.contains("faces")) {
        if (render_obj_out.empty()) throw InputError("polyhedron input needs --obj");
        write_text_file(render_obj_out, render_obj(polyhedron_from_json(doc)));
        return kExitVerified;
      }
      if (render_svg_out.empty()) throw InputError("polygon input needs --svg");
      const SimplePolygon polygon = polygon_from_json(doc);
      const Side side = parse_side(render_side);
      const std::size_t k = strategy_step(render_strategy);
      std::vector<SvgLayer> layers;
      for (std::size_t s : render_starts) {
        if (s >= polygon.size()) throw InputError("start out of range");
        layers.push_back({every_kth(polygon.size(), k, s), side});
      }
      for (const std::string& g : render_guards) {
        std::vector<std::size_t> idx;
        for (const std::string& s : split(g, ',')) idx.push_back(std::stoul(s));
        layers.push_back({GuardPlacement(polygon.size(), idx), side});
      }
      write_text_file(render_svg_out, render_svg(polygon, layers));
      return kExitVerified;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {  // stoul and friends
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace gallery
