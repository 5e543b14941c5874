#pragma once

#include "gallery/guard_placement.hpp"
#include "gallery/polygon.hpp"
#include "gallery/visibility.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gallery {

/// Guards at {(start + k*j) mod n : j = 0 .. ceil(n/k)-1}.
GuardPlacement every_kth(std::size_t n, std::size_t k, std::size_t start);

/// Number of distinct starting vertices for the every-k-th strategy: k
/// when k divides n (the placements repeat with period k), n otherwise.
std::size_t distinct_starts(std::size_t n, std::size_t k);

struct StartVerdict {
  std::size_t start = 0;
  GuardPlacement guards;
  CoverageVerdict verdict;
};

struct StrategyReport {
  std::size_t n = 0;
  std::size_t k = 0;
  Side side = Side::Exterior;
  std::vector<StartVerdict> starts;
  bool exists_good_start = false;
};

/// Every-second-vertex guarding of the exterior, for every distinct start.
StrategyReport fortress_all_starts(const SimplePolygon& polygon);
StrategyReport fortress_all_starts(const CoverageAnalysis& exterior);

/// Every-third-vertex guarding of the interior, for every distinct start.
StrategyReport gallery_all_starts(const SimplePolygon& polygon);

/// Generic form used by both of the above.
StrategyReport all_starts(const CoverageAnalysis& analysis, std::size_t k);

CoverageVerdict verify_guard_set(const SimplePolygon& polygon, const std::vector<std::size_t>& guards, Side side);

struct MinGuardResult {
  std::size_t size = 0;
  GuardPlacement guards;
  CoverageVerdict verdict;
};

/// Smallest covering vertex-guard set, enumerating subsets by increasing
/// size and lexicographically within a size. nullopt means none exists
/// with at most max_size guards.
std::optional<MinGuardResult> brute_force_min_guards(const SimplePolygon& polygon, Side side, std::size_t max_size);
std::optional<MinGuardResult> brute_force_min_guards(const CoverageAnalysis& analysis, std::size_t max_size);

}  // namespace gallery
