#pragma once

#include "gallery/guards.hpp"
#include "gallery/polygon.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gallery {

/// Coordinates of random polygons are integers in [0, kRandomGrid].
inline constexpr long kRandomGrid = 1000;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic random simple polygon: n grid points with no three
/// collinear, untangled by repeated 2-opt moves. Re-draws (with a derived
/// seed) when the point set is degenerate or untangling does not settle.
SimplePolygon random_simple_polygon(std::size_t n, std::uint64_t seed);

struct SearchFailure {
  std::size_t trial = 0;  // trial index, or the injection index for injected polygons
  std::string origin;     // "random" or "injected"
  SimplePolygon polygon;
  StrategyReport report;
};

struct SearchReport {
  std::string kind;
  std::size_t n = 0;  // n_max for probe_theorem1
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<SearchFailure> failures;
  /// Every Uncovered witness seen during the run, with the polygon it
  /// belongs to (trial index into `polygons`).
  std::vector<std::pair<std::size_t, Point2>> uncovered_witnesses;
  std::vector<SimplePolygon> polygons;
  double wall_seconds = 0;
};

/// Random polygons with 3 <= n <= n_max; records any polygon for which no
/// every-second-vertex start guards the exterior.
SearchReport probe_theorem1(std::size_t n_max, std::size_t trials, std::uint64_t seed);

/// Random n-gons (n odd, 13..21) for which all n every-second-vertex starts
/// fail. `injected` polygons are checked first and reported the same way.
SearchReport search_odd_fortress(std::size_t n, std::size_t trials, std::uint64_t seed,
                                 const std::vector<SimplePolygon>& injected = {});

/// Re-runs the certifier on a recorded failure; true if every start still
/// fails with identical witnesses.
bool replay_failure(const SearchFailure& failure);

}  // namespace gallery
