#include "hourglass/geom.hpp"

namespace hourglass {

bool point_inside_even_odd(Pt p, const ClosedCurve& curve) {
  const auto& v = curve.pts;
  if (v.size() < 2) return false;
  // Far ray target, perturbed until generic with respect to every curve
  // vertex.  Coordinates here stay far below the int128 overflow threshold.
  Pt far{};
  for (long long k = 1;; ++k) {
    far = Pt{(long long)1e9 + 137 * k, (long long)2e9 + k * k * 101 + 11 * k};
    bool generic = true;
    for (const Pt& q : v) {
      if (q == p) throw std::logic_error("degenerate geometry: face representative on curve vertex");
      if (cross(p, far, q) == 0) {
        generic = false;
        break;
      }
    }
    if (generic) break;
    if (k > 64) throw std::logic_error("degenerate geometry: no generic ray found");
  }
  long long crossings = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Pt a = v[i], b = v[(i + 1) % v.size()];
    if (a == b) continue;
    if (on_segment(p, a, b)) throw std::logic_error("degenerate geometry: face representative on curve");
    if (segments_cross(p, far, a, b)) ++crossings;
  }
  return crossings % 2 == 1;
}

}  // namespace hourglass
