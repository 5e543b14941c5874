#include "gallery/guard_placement.hpp"

#include "gallery/error.hpp"

#include <algorithm>
#include <string>

namespace gallery {

GuardPlacement::GuardPlacement(std::size_t n, std::vector<std::size_t> indices)
    : n_(n), indices_(std::move(indices)) {
  if (indices_.empty()) throw GeometryError(ErrorKind::InvalidParameters, "guard set is empty");
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (indices_.back() >= n_) {
    throw GeometryError(ErrorKind::InvalidParameters,
                        "guard index " + std::to_string(indices_.back()) + " out of range for n=" + std::to_string(n_));
  }
}

bool GuardPlacement::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

}  // namespace gallery
