#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hourglass {

// Planar points in triangular-lattice basis coordinates, scaled so that every
// construction in this project (triangle centroids, edge midpoints, hourglass
// strand control points, pendant tips, cut crossings and their midpoints) is
// integral.  The basis vectors are A = (sqrt3/2, -1/2) and B = (sqrt3/2, 1/2)
// in real space; the map (u,v) -> u*A + v*B has positive determinant, so
// orientation signs agree between basis coordinates and the drawing plane.
struct Pt {
  long long x = 0, y = 0;
  friend Pt operator+(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }
  friend Pt operator-(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
  friend Pt operator*(long long k, Pt a) { return {k * a.x, k * a.y}; }
  friend bool operator==(Pt a, Pt b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(Pt a, Pt b) { return !(a == b); }
  friend bool operator<(Pt a, Pt b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

// Every vertex position is a multiple of kScale/48; see web.cpp for the menu
// of constructions that motivated 48.
inline constexpr long long kScale = 48;

using i128 = __int128;

inline i128 cross(Pt o, Pt a, Pt b) {
  return (i128)(a.x - o.x) * (b.y - o.y) - (i128)(a.y - o.y) * (b.x - o.x);
}
inline i128 cross(Pt a, Pt b) { return (i128)a.x * b.y - (i128)a.y * b.x; }

inline int sgn(i128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

// Real-plane y sign of a basis direction: real_y = (v - u)/2.
inline int real_y_sign(Pt d) { return sgn((i128)d.y - d.x); }
// Real-plane x sign: real_x = sqrt3/2 (u + v).
inline int real_x_sign(Pt d) { return sgn((i128)d.x + d.y); }

// Counterclockwise angular order of direction vectors in the drawing plane.
// Angles measured in real space; ties are impossible for the distinct edge
// directions that occur at a web vertex.
inline bool ccw_less(Pt d1, Pt d2) {
  auto half = [](Pt d) {
    int ys = real_y_sign(d);
    if (ys != 0) return ys > 0 ? 0 : 1;
    return real_x_sign(d) > 0 ? 0 : 1;
  };
  int h1 = half(d1), h2 = half(d2);
  if (h1 != h2) return h1 < h2;
  return cross(d1, d2) > 0;
}

inline bool on_segment(Pt p, Pt a, Pt b) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Proper (interior) crossing of segments ab and cd.
inline bool segments_cross(Pt a, Pt b, Pt c, Pt d) {
  i128 d1 = cross(a, b, c), d2 = cross(a, b, d);
  i128 d3 = cross(c, d, a), d4 = cross(c, d, b);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

// A closed polyline (pts.back() connects to pts.front()); may self-intersect.
struct ClosedCurve {
  std::vector<Pt> pts;
};

// Even-odd test of p against a closed curve.  The ray target is chosen
// deterministically so that no curve vertex is collinear with (p, target);
// all segment crossings are then transversal and the parity is exact.
bool point_inside_even_odd(Pt p, const ClosedCurve& curve);

}  // namespace hourglass
