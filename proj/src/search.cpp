#include "gallery/search.hpp"

#include "gallery/error.hpp"
#include "gallery/predicates.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace gallery {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined value.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

bool has_collinear_triple(const std::vector<Point2>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (orient2d(pts[i], pts[j], pts[k]) == 0) return true;
      }
    }
  }
  return false;
}

// Reverses sub-paths until no two edges cross. Each move shortens the
// tour, so the loop terminates; the cap only guards against bugs.
bool untangle(std::vector<Point2>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t iter = 0; iter < 100000; ++iter) {
    bool changed = false;
    for (std::size_t i = 0; i < n && !changed; ++i) {
      for (std::size_t j = i + 2; j < n && !changed; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (classify_segments(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n]) == SegmentRelation::ProperCross) {
          std::reverse(pts.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                       pts.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          changed = true;
        }
      }
    }
    if (!changed) return true;
  }
  return false;
}

}  // namespace

SimplePolygon random_simple_polygon(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw GeometryError(ErrorKind::InvalidParameters, "n must be at least 3");
  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    std::mt19937_64 rng(mix_seed(seed, attempt));
    std::uniform_int_distribution<long> coord(0, kRandomGrid);
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back({Rational(coord(rng)), Rational(coord(rng))});
    if (has_collinear_triple(pts)) continue;
    if (!untangle(pts)) continue;
    return validate_simple(std::move(pts));
  }
  throw GeometryError(ErrorKind::ConstructionFailed, "could not generate a simple polygon");
}

namespace {

void record_witnesses(SearchReport& report, std::size_t polygon_index, const StrategyReport& strategy) {
  for (const auto& s : strategy.starts) {
    if (const Uncovered* u = s.verdict.uncovered()) report.uncovered_witnesses.emplace_back(polygon_index, u->witness);
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

SearchReport probe_theorem1(std::size_t n_max, std::size_t trials, std::uint64_t seed) {
  if (n_max < 3 || n_max > 11) throw GeometryError(ErrorKind::InvalidParameters, "n_max must be in [3, 11]");
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport report;
  report.kind = "theorem1";
  report.n = n_max;
  report.trials = trials;
  report.seed = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(mix_seed(seed, t));
    const std::size_t n = 3 + static_cast<std::size_t>(rng() % (n_max - 2));
    SimplePolygon polygon = random_simple_polygon(n, rng());
    StrategyReport strategy = fortress_all_starts(polygon);
    report.polygons.push_back(polygon);
    record_witnesses(report, t, strategy);
    if (!strategy.exists_good_start) report.failures.push_back({t, "random", polygon, std::move(strategy)});
  }
  report.wall_seconds = seconds_since(t0);
  return report;
}

SearchReport search_odd_fortress(std::size_t n, std::size_t trials, std::uint64_t seed,
                                 const std::vector<SimplePolygon>& injected) {
  if (n % 2 == 0 || n < 13 || n > 21) throw GeometryError(ErrorKind::InvalidParameters, "n must be odd, 13..21");
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport report;
  report.kind = "odd-fortress";
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  auto examine = [&](std::size_t index, const std::string& origin, const SimplePolygon& polygon) {
    StrategyReport strategy = fortress_all_starts(polygon);
    report.polygons.push_back(polygon);
    record_witnesses(report, report.polygons.size() - 1, strategy);
    if (!strategy.exists_good_start) report.failures.push_back({index, origin, polygon, std::move(strategy)});
  };
  for (std::size_t i = 0; i < injected.size(); ++i) {
    if (injected[i].size() != n) {
      throw GeometryError(ErrorKind::InvalidParameters, "injected polygon has the wrong vertex count");
    }
    examine(i, "injected", injected[i]);
  }
  for (std::size_t t = 0; t < trials; ++t) examine(t, "random", random_simple_polygon(n, mix_seed(seed, t)));
  // Soundness: every candidate must re-certify.
  for (const auto& f : report.failures) {
    if (!replay_failure(f)) throw GeometryError(ErrorKind::ConstructionFailed, "candidate failed to re-certify");
  }
  report.wall_seconds = seconds_since(t0);
  return report;
}

bool replay_failure(const SearchFailure& failure) {
  const StrategyReport again = fortress_all_starts(failure.polygon);
  if (again.exists_good_start || again.starts.size() != failure.report.starts.size()) return false;
  for (std::size_t i = 0; i < again.starts.size(); ++i) {
    const Uncovered* a = again.starts[i].verdict.uncovered();
    const Uncovered* b = failure.report.starts[i].verdict.uncovered();
    if (!a || !b || !(a->witness == b->witness)) return false;
    for (std::size_t g : again.starts[i].guards.indices()) {
      if (visible(failure.polygon, a->witness, failure.polygon[g], Side::Exterior)) return false;
    }
  }
  return true;
}

}  // namespace gallery
