#pragma once

#include <set>
#include <vector>

#include "hourglass/lattice_word.hpp"
#include "hourglass/web.hpp"

namespace hourglass {

// One directed traversal of a strand: from vend(from_end) to the other end.
struct TripStep {
  int edge = -1, strand = 0, from_end = 0;
};

struct TripPath {
  int index = 0;                 // a in {1,2,3}
  int start_pos = -1, end_pos = -1;  // positions in w.boundary (0-based)
  std::vector<TripStep> steps;
  std::vector<Pt> polyline;      // start tip ... end tip
};

// Walk from boundary position `pos` under the rules of the road: the a-th
// counterclockwise successor of the entry end at black vertices, the a-th
// predecessor at white ones.
TripPath trip_path(const HourglassWeb& w, int pos, int a);

// sigma[i] = j (0-based boundary positions) where trip_a(b_{i+1}) = b_{j+1}.
std::vector<int> trip_permutation(const HourglassWeb& w, int a);

// Separation labels.  Labels of simple edges are computed from the three
// black-to-white trips through the edge by the even-odd separation test;
// hourglass labels by complementation at both endpoints (which must agree).
class SeparationLabeler {
 public:
  explicit SeparationLabeler(const HourglassWeb& w);

  int label_simple(int edge_id);
  std::set<int> label_hourglass(int edge_id);
  // Incident labels partition {1,2,3,4} at every internal vertex.
  void check_proper();

  // The trip through `edge_id` traversing it black to white under rule a,
  // extended to the boundary in both directions.
  TripPath trip_through(int edge_id, int a) const;

 private:
  const HourglassWeb& w_;
  std::vector<int> simple_cache_;
  bool separates(const TripPath& t, Pt f_rep) const;
  Pt right_rep_black_to_white(int edge_id) const;
};

int separation_label_simple(const HourglassWeb& w, int edge_id);
std::set<int> separation_label_hourglass(const HourglassWeb& w, int edge_id);

// Boundary-edge labels read clockwise from b1, negated at white boundary
// vertices; the two stubs of a split hourglass are grouped as a pair token.
LatticeWord boundary_word(const HourglassWeb& w);

}  // namespace hourglass
