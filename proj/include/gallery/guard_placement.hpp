#pragma once

#include <cstddef>
#include <vector>

namespace gallery {

/// A set of guarded vertex indices of an n-vertex polygon.
class GuardPlacement {
 public:
  /// Throws GeometryError(InvalidParameters) if empty or out of range.
  GuardPlacement(std::size_t n, std::vector<std::size_t> indices);

  std::size_t polygon_size() const noexcept { return n_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }  // sorted, unique
  std::size_t size() const noexcept { return indices_.size(); }
  bool contains(std::size_t i) const;

  friend bool operator==(const GuardPlacement&, const GuardPlacement&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> indices_;
};

}  // namespace gallery
