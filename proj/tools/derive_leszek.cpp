// Rebuilds the frozen leszek_fortress() coordinates.
//
// Core: two ratchet chambers. Around X = (0,0) the tips a_i = r at 0, 120
// and 240 degrees alternate with the barbs b_i at 120+d, 240+d and d
// degrees (radii Rb1, Rb2, Rb3); everything is rounded to integers. The
// second chamber is the half-turn of the first about the midpoint of a1 and
// b3, which maps b1 to the hull vertex HR.
//
// Closure: a triangle HL, H0, HR with a right angle at H0, so that the
// mirror copy across line HL-H0 glues on with H0 becoming collinear. The
// search runs over integer H0 and integer multiples along the perpendicular
// for HL, keeps the first simple placement per H0 whose glued double is also
// simple, and orders the results by largest coordinate. The first one that
// certifies (no good every-2nd start on the 12-gon, all 21 starts failing on
// the double) is printed.
#include "gallery/constructions.hpp"
#include "gallery/error.hpp"
#include "gallery/guards.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <tuple>
#include <vector>

namespace {

struct P {
  long x, y;
  friend bool operator==(const P&, const P&) = default;
  friend auto operator<=>(const P&, const P&) = default;
};

long orient(const P& a, const P& b, const P& c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

bool on_seg(const P& a, const P& b, const P& p) {
  return orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool meet(const P& a, const P& b, const P& c, const P& d) {
  const long d1 = orient(a, b, c), d2 = orient(a, b, d), d3 = orient(c, d, a), d4 = orient(c, d, b);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  return on_seg(a, b, c) || on_seg(a, b, d) || on_seg(c, d, a) || on_seg(c, d, b);
}

// simple, counter-clockwise, no collinear neighbours
bool quick_valid(const std::vector<P>& v) {
  const std::size_t n = v.size();
  long area = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (orient(v[i], v[(i + 1) % n], v[(i + 2) % n]) == 0) return false;
    area += v[i].x * v[(i + 1) % n].y - v[(i + 1) % n].x * v[i].y;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (v[i] == v[j]) return false;
      if ((i + 1) % n == j || (j + 1) % n == i) continue;
      if (meet(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) return false;
    }
  }
  return area > 0;
}

P polar(double radius, double degrees) {
  const double t = degrees * std::acos(-1.0) / 180.0;
  return {std::lround(radius * std::cos(t)), std::lround(radius * std::sin(t))};
}

gallery::SimplePolygon exact(const std::vector<P>& v) {
  std::vector<gallery::Point2> pts;
  for (const P& p : v) pts.push_back({gallery::Rational(p.x), gallery::Rational(p.y)});
  return gallery::validate_simple(std::move(pts));
}

}  // namespace

int main() {
  const double r = 10, rb1 = 40, rb2 = 20, rb3 = 20, delta = 5;
  const P a1 = polar(r, 0), a2 = polar(r, 120), a3 = polar(r, 240);
  const P b1 = polar(rb1, 120 + delta), b2 = polar(rb2, 240 + delta), b3 = polar(rb3, delta);
  auto half_turn = [&](const P& p) { return P{a1.x + b3.x - p.x, a1.y + b3.y - p.y}; };
  const std::vector<P> core = {half_turn(b1), b3, a3, b2, a2, b1, a1, half_turn(a3), half_turn(b2), half_turn(a2)};
  const P hr = core[0];
  std::printf("core:");
  for (const P& p : core) std::printf(" (%ld,%ld)", p.x, p.y);
  std::printf("\n");

  const long range = 60, hmax = 1000;
  std::vector<std::tuple<long, P, P>> found;  // size, HL, H0
  for (long hx = -range; hx <= range; ++hx) {
    for (long hy = -range; hy <= range; ++hy) {
      const P h0{hx, hy};
      if (!std::all_of(core.begin() + 1, core.end(), [&](const P& p) { return orient(h0, hr, p) > 0; })) continue;
      const long wx = hr.x - hx, wy = hr.y - hy, g = std::gcd(std::labs(wx), std::labs(wy));
      P perp{wy / g, -wx / g};
      if (orient(h0, hr, {hx + perp.x, hy + perp.y}) < 0) perp = {-perp.x, -perp.y};
      for (long s = 1;; ++s) {
        const P hl{hx + s * perp.x, hy + s * perp.y};
        if (std::max(std::labs(hl.x), std::labs(hl.y)) > hmax) break;
        if (!std::all_of(core.begin(), core.end(), [&](const P& p) { return orient(hl, h0, p) > 0; })) continue;
        std::vector<P> poly = core;
        poly.push_back(hl);
        poly.push_back(h0);
        if (!quick_valid(poly)) continue;
        try {
          const auto glued = gallery::glue_by_reflection(exact(poly), gallery::kLeszekGlueEdge);
          if (glued.size() != 21) continue;
        } catch (const gallery::GeometryError&) {
          continue;
        }
        long size = 0;
        for (const P& p : poly) size = std::max({size, std::labs(p.x), std::labs(p.y)});
        found.emplace_back(size, hl, h0);
        break;
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::printf("%zu right-angle placements\n", found.size());

  for (const auto& [size, hl, h0] : found) {
    std::vector<P> poly = core;
    poly.push_back(hl);
    poly.push_back(h0);
    const gallery::SimplePolygon f = exact(poly);
    const auto single = gallery::fortress_all_starts(f);
    const auto twice = gallery::fortress_all_starts(gallery::glue_by_reflection(f, gallery::kLeszekGlueEdge));
    const bool ok = !single.exists_good_start && !twice.exists_good_start && twice.starts.size() == 21;
    std::printf("HL=(%ld,%ld) H0=(%ld,%ld): 12-gon good start %s, 21-gon good start %s\n", hl.x, hl.y, h0.x, h0.y,
                single.exists_good_start ? "yes" : "no", twice.exists_good_start ? "yes" : "no");
    if (ok) {
      const bool same = f == gallery::leszek_fortress();
      std::printf("certified; %s leszek_fortress()\n", same ? "matches" : "DIFFERS FROM");
      return same ? 0 : 1;
    }
  }
  std::printf("no certified placement\n");
  return 1;
}
