#pragma once

#include <stdexcept>
#include <string>

namespace gallery {

enum class ErrorKind {
  Parse,
  DegenerateSegment,
  TooFewVertices,
  DuplicateVertex,
  CollinearRun,
  SelfIntersection,
  Precondition,
  OpenEdge,
  NonPlanarFace,
  BadOrientation,
  InvalidParameters,
  ConstructionFailed,
};

const char* to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gallery
