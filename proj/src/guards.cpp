#include "gallery/guards.hpp"

#include "gallery/error.hpp"

#include <string>

namespace gallery {

GuardPlacement every_kth(std::size_t n, std::size_t k, std::size_t start) {
  if (n < 3) throw GeometryError(ErrorKind::InvalidParameters, "n must be at least 3");
  if (k < 2) throw GeometryError(ErrorKind::InvalidParameters, "step k must be at least 2");
  if (start >= n) throw GeometryError(ErrorKind::InvalidParameters, "start " + std::to_string(start) + " >= n");
  std::vector<std::size_t> idx;
  const std::size_t count = (n + k - 1) / k;
  for (std::size_t j = 0; j < count; ++j) idx.push_back((start + k * j) % n);
  return GuardPlacement(n, std::move(idx));
}

std::size_t distinct_starts(std::size_t n, std::size_t k) { return n % k == 0 ? k : n; }

StrategyReport all_starts(const CoverageAnalysis& analysis, std::size_t k) {
  StrategyReport report;
  report.n = analysis.polygon().size();
  report.k = k;
  report.side = analysis.side();
  const std::size_t starts = distinct_starts(report.n, k);
  for (std::size_t s = 0; s < starts; ++s) {
    GuardPlacement guards = every_kth(report.n, k, s);
    CoverageVerdict verdict = analysis.verdict(guards);
    report.exists_good_start = report.exists_good_start || verdict.covered();
    report.starts.push_back({s, std::move(guards), std::move(verdict)});
  }
  return report;
}

StrategyReport fortress_all_starts(const CoverageAnalysis& exterior) {
  if (exterior.side() != Side::Exterior) {
    throw GeometryError(ErrorKind::Precondition, "fortress strategy needs an exterior analysis");
  }
  return all_starts(exterior, 2);
}

StrategyReport fortress_all_starts(const SimplePolygon& polygon) {
  return all_starts(CoverageAnalysis(polygon, Side::Exterior), 2);
}

StrategyReport gallery_all_starts(const SimplePolygon& polygon) {
  return all_starts(CoverageAnalysis(polygon, Side::Interior), 3);
}

CoverageVerdict verify_guard_set(const SimplePolygon& polygon, const std::vector<std::size_t>& guards, Side side) {
  return coverage_certify(polygon, GuardPlacement(polygon.size(), guards), side);
}

std::optional<MinGuardResult> brute_force_min_guards(const CoverageAnalysis& analysis, std::size_t max_size) {
  const std::size_t n = analysis.polygon().size();
  if (max_size > n) throw GeometryError(ErrorKind::InvalidParameters, "max_size exceeds vertex count");
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<std::size_t> combo(size);
    for (std::size_t i = 0; i < size; ++i) combo[i] = i;
    while (true) {
      GuardPlacement guards(n, combo);
      if (analysis.covers(to_mask(guards))) {
        CoverageVerdict verdict = analysis.verdict(guards);
        return MinGuardResult{size, std::move(guards), std::move(verdict)};
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && combo[i - 1] == n - size + (i - 1)) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<MinGuardResult> brute_force_min_guards(const SimplePolygon& polygon, Side side, std::size_t max_size) {
  return brute_force_min_guards(CoverageAnalysis(polygon, side), max_size);
}

}  // namespace gallery
