#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hourglass/geom.hpp"
#include "hourglass/plane_partition.hpp"

namespace hourglass {

// Lattice points in unscaled triangular-basis coordinates.
struct LatticePt {
  int u = 0, v = 0;
  friend bool operator==(const LatticePt&, const LatticePt&) = default;
  friend auto operator<=>(const LatticePt&, const LatticePt&) = default;
};

inline Pt scaled(LatticePt p) { return {kScale * p.u, kScale * p.v}; }

// Unit triangles: L(u,v) has corners (u,v),(u+1,v),(u,v+1) and is black;
// R(u,v) has corners (u+1,v),(u,v+1),(u+1,v+1) and is white.
struct Triangle {
  int u = 0, v = 0;
  bool left = true;
  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

// Static scaffolding for the hexagon H(a,b,c): the triangular grid inside the
// hexagon with corners T=(0,0), (a,0), (a+c,-c), (a+c,-b-c), (c,-b-c), (0,-b),
// its dual (honeycomb) edges, and the pendant boundary edges.  The web of a
// plane partition is this honeycomb with the lozenge dual edges doubled into
// hourglasses.
class HexLattice {
 public:
  explicit HexLattice(Box3 box);

  const Box3& box() const { return box_; }

  int tri_count() const { return (int)tris_.size(); }
  const Triangle& tri(int idx) const { return tris_[idx]; }
  int tri_index(Triangle t) const;  // -1 if not inside the hexagon
  Pt centroid(int idx) const;       // scale-48 position
  bool tri_black(int idx) const { return tris_[idx].left; }

  // Dual edge between adjacent triangles, crossing the lattice edge (ep,eq).
  // family: 'N' horizontal lozenge (north cube face), 'E' (east face),
  // 'W' (west face).
  struct Dual {
    int black_tri, white_tri;
    LatticePt ep, eq;
    char family;
  };
  const std::vector<Dual>& duals() const { return duals_; }
  int dual_between(int t1, int t2) const;

  struct Pendant {
    int tri;
    LatticePt ep, eq;  // boundary lattice segment, clockwise order (ep first)
    int side;          // 0..5 = NE,E,SE,SW,W,NW
    int offset;        // 1-based position along the side, clockwise
  };
  // Sorted clockwise starting with the NE side segment nearest T.
  const std::vector<Pendant>& pendants() const { return pendants_; }

  // Lozenges of the tiling of p as a sorted list of matched dual edge ids.
  // Asserts the result is a perfect matching on the triangles.
  std::vector<int> matching_of(const PlanePartition& p) const;

  // Lattice points strictly inside the hexagon (the internal faces).
  const std::vector<LatticePt>& interior_points() const { return interior_; }
  // The six dual edges around an interior lattice point, in cyclic order.
  std::array<int, 6> duals_around(LatticePt q) const;

  // Projection of the box corner grid: cube coordinates (x,y,z) with
  // 0 <= x <= a etc.; V(0,0,c) = T.
  LatticePt project(int x, int y, int z) const {
    return {x - z + box_.c, -y + z - box_.c};
  }

  bool point_in_hexagon(LatticePt p) const;

 private:
  Box3 box_;
  std::vector<Triangle> tris_;
  std::map<Triangle, int> tri_index_;
  std::vector<Dual> duals_;
  std::map<std::pair<int, int>, int> dual_index_;
  std::vector<Pendant> pendants_;
  std::vector<LatticePt> interior_;
};

// The fundamental-domain wedge of a symmetry class: each class keeps the
// region swept clockwise from the ray O->T.  Vertices exactly on a cut line
// count as discarded; all under/overflow-free side tests are exact.
struct Wedge {
  struct Line {
    Pt origin, dir;  // scale-48
    int keep_sign;   // keep iff sgn(cross(dir, x - origin)) == keep_sign
  };
  // lines[0] is the T-diagonal (∂180 for SPP, its upper half otherwise);
  // lines[1], when present, is the class cut ray ending at the hexagon.
  std::vector<Line> lines;
  SymmetryClass cls = SymmetryClass::SPP;
  bool keeps(Pt x) const {
    for (const Line& l : lines)
      if (sgn(cross(l.dir, x - l.origin)) != l.keep_sign) return false;
    return true;
  }
};

Wedge fundamental_wedge(SymmetryClass cls, const Box3& box);

struct HourglassWeb {
  struct EndRef {
    int edge = -1, strand = 0, end = 0;  // end 0 = at the edge's v0
    friend bool operator==(const EndRef&, const EndRef&) = default;
  };
  struct Vertex {
    Pt pos;
    bool black = false;
    bool boundary = false;
    std::vector<EndRef> rot;  // counterclockwise cyclic order of edge ends
  };
  struct Edge {
    int v0 = -1, v1 = -1;
    bool hourglass = false;
    bool boundary_edge = false;         // pendant or cut stub
    int dual_id = -1;                   // underlying honeycomb dual id
    int split_partner = -1;             // other stub of a split hourglass
    Pt rep0{}, rep1{};                  // adjacent-face representatives
    bool has_mid_rep = false;
    Pt mid_rep{};                       // the face between a split pair
    std::vector<std::vector<Pt>> strands;  // control polylines, v0 -> v1

    int other(int v) const { return v == v0 ? v1 : v0; }
    int vend(int e) const { return e == 0 ? v0 : v1; }
  };

  Box3 box;
  std::optional<SymmetryClass> domain;
  std::vector<Vertex> verts;
  std::vector<Edge> edges;
  std::vector<int> boundary;  // vertex ids b1..bn clockwise; F0 sits between
                              // boundary.back() and boundary.front()
  std::vector<int> matched;   // sorted dual ids of the dimer state
  // Disk-boundary geometry: rim_chunks[i] is the polyline of the disk rim
  // from the tip of boundary vertex i (exclusive) to the tip of boundary
  // vertex i+1 (exclusive); concatenating chunks e, e+1, ..., s-1 realizes
  // the clockwise boundary arc from tip(b_e) to tip(b_s).
  std::vector<std::vector<Pt>> rim_chunks;
  Pt base_rep{};              // representative point of F0

  int n() const { return (int)boundary.size(); }
  int boundary_edge_at(int pos) const;  // pos 0-based
  // sorted matched ids, the canonical form for deduplication
  const std::vector<int>& dimer_key() const { return matched; }
};

HourglassWeb web_from_plane_partition(const PlanePartition& p);
HourglassWeb web_from_matching(const Box3& box, const std::vector<int>& matched);
// Builds the full web of p, then cuts it down to the fundamental domain of
// the class.  p must have the symmetry.
HourglassWeb restrict_to_fundamental_domain(const PlanePartition& p,
                                            SymmetryClass cls);

// Structural invariants: bicoloring, degrees, one hourglass (or one split
// stub pair) per internal vertex, face-rep consistency around the boundary,
// rim geometry clear of the web.  Throws std::logic_error on violation.
void validate_web(const HourglassWeb& w);

struct Face {
  int id = 0;
  bool internal = false;
  bool is_base = false;
  Pt rep{};                // exact interior representative point
  std::vector<int> edges;  // bounding edge ids, cyclic
  std::optional<LatticePt> center;
};

// (right, left) face representatives of a simple edge relative to v0 -> v1.
std::pair<Pt, Pt> edge_flank_reps(const HourglassWeb& w, int edge_id);

std::vector<Face> faces(const HourglassWeb& w);
// Internal faces whose six bounding edges alternate hourglass/simple.
std::vector<Face> benzene_faces(const HourglassWeb& w);
HourglassWeb apply_benzene(const HourglassWeb& w, const Face& f);
// Closure of w under benzene moves, BFS order, deduplicated by dimer state.
std::vector<HourglassWeb> benzene_class(const HourglassWeb& w);

}  // namespace hourglass
