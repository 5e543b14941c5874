// Searches full-length channel octoplexes with a blind center.
//
// Layout: the x faces carry channels along y, the y faces along z, the z
// faces along x. Opposite faces mirror each other through the center, so
// each axis has two integers: where its channel starts across the face
// (it ends at 20 - start) and its depth. A cheap integer slab test rejects
// most candidates; survivors are rebuilt exactly and must give V=56, F=30
// and no vertex seeing the center. Candidates are tried by increasing
// total depth, then lexicographically; the first exact hit is printed.
#include "gallery/constructions.hpp"
#include "gallery/error.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <vector>

namespace {

using gallery::Cutout;
using gallery::OctoplexParams;

struct Box {
  long lo[3], hi[3];
};

// Does the open segment q -> v pass through the open box?
bool hits(const Box& b, const long q[3], const long v[3]) {
  long tln = 0, tld = 1, thn = 1, thd = 1;
  for (int k = 0; k < 3; ++k) {
    long d = v[k] - q[k];
    if (d == 0) {
      if (!(q[k] > b.lo[k] && q[k] < b.hi[k])) return false;
      continue;
    }
    long a = b.lo[k] - q[k], c = b.hi[k] - q[k];
    if (d < 0) {
      std::swap(a, c);
      a = -a;
      c = -c;
      d = -d;
    }
    if (a * tld > tln * d) {
      tln = a;
      tld = d;
    }
    if (c * thd < thn * d) {
      thn = c;
      thd = d;
    }
  }
  return tln * thd < thn * tld;
}

OctoplexParams params_of(const std::array<long, 6>& s) {
  OctoplexParams p;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const long start = s[2 * axis], depth = s[2 * axis + 1];
    const Cutout c{0, 20, start, 20 - start, depth};
    p.cutouts[2 * axis] = c;
    p.cutouts[2 * axis + 1] = c;
  }
  return p;
}

bool quick_blind(const OctoplexParams& p) {
  std::vector<Box> boxes;
  for (std::size_t f = 0; f < 6; ++f) {
    const auto cb = gallery::cutout_box(f, p.cutouts[f]);
    Box b;
    for (int k = 0; k < 3; ++k) {
      b.lo[k] = cb.lo[k].get_num().get_si();
      b.hi[k] = cb.hi[k].get_num().get_si();
    }
    boxes.push_back(b);
  }
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      bool apart = false;
      // strict gap: touching cutouts would merge faces
      for (int k = 0; k < 3; ++k) apart = apart || std::min(boxes[i].hi[k], boxes[j].hi[k]) < std::max(boxes[i].lo[k], boxes[j].lo[k]);
      if (!apart) return false;
    }
  }
  const long q[3] = {10, 10, 10};
  std::vector<std::array<long, 3>> candidates;
  for (const Box& b : boxes) {
    for (int m = 0; m < 8; ++m) candidates.push_back({m & 1 ? b.hi[0] : b.lo[0], m & 2 ? b.hi[1] : b.lo[1], m & 4 ? b.hi[2] : b.lo[2]});
  }
  for (int m = 0; m < 8; ++m) candidates.push_back({m & 1 ? 20L : 0L, m & 2 ? 20L : 0L, m & 4 ? 20L : 0L});
  for (const auto& c : candidates) {
    const long v[3] = {c[0], c[1], c[2]};
    bool blocked = false;
    for (const Box& b : boxes) blocked = blocked || hits(b, q, v);
    if (!blocked) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<std::array<long, 6>> order;
  for (long xs = 1; xs < 10; ++xs)
    for (long xd = 1; xd < 10; ++xd)
      for (long ys = 1; ys < 10; ++ys)
        for (long yd = 1; yd < 10; ++yd)
          for (long zs = 1; zs < 10; ++zs)
            for (long zd = 1; zd < 10; ++zd) order.push_back({xs, xd, ys, yd, zs, zd});
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a[1] + a[3] + a[5] < b[1] + b[3] + b[5];
  });

  std::size_t quick = 0;
  for (const auto& s : order) {
    const OctoplexParams p = params_of(s);
    if (!quick_blind(p)) continue;
    ++quick;
    try {
      const gallery::Polyhedron mesh = gallery::octoplex(p);
      const auto c = gallery::count_features(mesh);
      const auto obs = gallery::vertex_observers(mesh, {10, 10, 10});
      std::printf("candidate x(%ld,%ld) y(%ld,%ld) z(%ld,%ld): V=%zu F=%zu observers=%zu\n", s[0], s[1], s[2], s[3],
                  s[4], s[5], c.V, c.F, obs.size());
      if (c.V == 56 && c.F == 30 && obs.empty()) {
        std::printf("found after %zu quick survivors\n", quick);
        for (std::size_t f = 0; f < 6; ++f) {
          const Cutout& k = p.cutouts[f];
          std::printf("  face %zu: u [%s,%s] v [%s,%s] depth %s\n", f, gallery::to_string(k.u0).c_str(),
                      gallery::to_string(k.u1).c_str(), gallery::to_string(k.v0).c_str(),
                      gallery::to_string(k.v1).c_str(), gallery::to_string(k.depth).c_str());
        }
        return 0;
      }
    } catch (const gallery::GeometryError& e) {
      std::printf("candidate rejected: %s\n", e.what());
    }
  }
  std::printf("no parameters found\n");
  return 1;
}
