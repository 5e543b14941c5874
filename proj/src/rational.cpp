#include "gallery/rational.hpp"

#include "gallery/error.hpp"

#include <cctype>

namespace gallery {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw GeometryError(ErrorKind::Parse, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw GeometryError(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw GeometryError(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

int sign(const Rational& value) { return sgn(value); }
int sign(const Integer& value) { return sgn(value); }

Point2 midpoint(const Point2& a, const Point2& b) {
  return {Rational((a.x + b.x) / 2), Rational((a.y + b.y) / 2)};
}

Point3 midpoint(const Point3& a, const Point3& b) {
  return {Rational((a.x + b.x) / 2), Rational((a.y + b.y) / 2), Rational((a.z + b.z) / 2)};
}

Point3 operator+(const Point3& a, const Point3& b) {
  return {Rational(a.x + b.x), Rational(a.y + b.y), Rational(a.z + b.z)};
}

Point3 operator-(const Point3& a, const Point3& b) {
  return {Rational(a.x - b.x), Rational(a.y - b.y), Rational(a.z - b.z)};
}

Point3 operator*(const Rational& s, const Point3& a) {
  return {Rational(s * a.x), Rational(s * a.y), Rational(s * a.z)};
}

Rational dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Point3 cross(const Point3& a, const Point3& b) {
  return {Rational(a.y * b.z - a.z * b.y), Rational(a.z * b.x - a.x * b.z),
          Rational(a.x * b.y - a.y * b.x)};
}

std::string to_string(const Point2& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

std::string to_string(const Point3& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ", " + to_string(p.z) + ")";
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DegenerateSegment: return "DegenerateSegment";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::CollinearRun: return "CollinearRun";
    case ErrorKind::SelfIntersection: return "SelfIntersection";
    case ErrorKind::Precondition: return "PreconditionViolation";
    case ErrorKind::OpenEdge: return "OpenEdge";
    case ErrorKind::NonPlanarFace: return "NonPlanarFace";
    case ErrorKind::BadOrientation: return "BadOrientation";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
  }
  return "Unknown";
}

}  // namespace gallery
