#pragma once

// Exact scalar and point types shared by every module.

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace gallery {

/// Arbitrary-precision rational. mpq_class keeps values canonical (lowest
/// terms, positive denominator) after every arithmetic operation; values
/// built from raw numerator/denominator pairs go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a/b" or "a" (optional leading '-'). Throws ParseError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "a/b", or "a" when the denominator is 1.
std::string to_string(const Rational& value);

/// Lossy conversion used only by renderers.
double to_double(const Rational& value);

int sign(const Rational& value);
int sign(const Integer& value);

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const Point2& a, const Point2& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

struct Point3 {
  Rational x;
  Rational y;
  Rational z;

  friend bool operator==(const Point3& a, const Point3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator<(const Point3& a, const Point3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }

  const Rational& operator[](int axis) const {
    return axis == 0 ? x : (axis == 1 ? y : z);
  }
  Rational& operator[](int axis) { return axis == 0 ? x : (axis == 1 ? y : z); }
};

Point2 midpoint(const Point2& a, const Point2& b);
Point3 midpoint(const Point3& a, const Point3& b);

Point3 operator+(const Point3& a, const Point3& b);
Point3 operator-(const Point3& a, const Point3& b);
Point3 operator*(const Rational& s, const Point3& a);
Rational dot(const Point3& a, const Point3& b);
Point3 cross(const Point3& a, const Point3& b);

std::string to_string(const Point2& p);
std::string to_string(const Point3& p);

}  // namespace gallery
