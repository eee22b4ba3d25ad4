#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hourglass/lattice_word.hpp"
#include "hourglass/symmetry_words.hpp"

namespace hourglass {

// A marked non-crossing perfect matching of labeled points on a line: the
// rank-2 web produced by the growth rules.  Labels are the tableau rows
// (half-edge labels 1/2); barred letters give white points.
struct MarkedNonCrossingMatching {
  enum class Mark { plain, white_mid, black_mid };
  struct Point {
    bool black = true;
    int label = 1;
    friend bool operator==(const Point&, const Point&) = default;
  };
  struct Arc {
    int a = 0, b = 0;  // 0-based point indices, a < b
    Mark mark = Mark::plain;
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
  };
  std::vector<Point> points;
  std::vector<Arc> arcs;  // sorted by left endpoint

  std::string to_string() const;
  friend bool operator==(const MarkedNonCrossingMatching&,
                         const MarkedNonCrossingMatching&) = default;
};

// Removes the class's fixed letters (keeping the barred 4s) and shifts the
// survivors down by the number of deleted top rows: two for SPP and TSSCPP,
// one for TSPP.  CSPP is rejected; the projection is undefined there.
LatticeWord project_word(const ClassWordSpec& spec, const LatticeWord& w);

// Growth rules for rank-2 words: plain 1s and barred 2s open arcs, plain 2s
// and barred 1s close the most recent open arc; marks follow the endpoint
// labels (1,2 on black gives a white-mid arc, 2,1 on white a black-mid arc).
MarkedNonCrossingMatching sl2_growth(const LatticeWord& reduced);

bool matching_validate(const MarkedNonCrossingMatching& m);

struct ProjectionResult {
  LatticeWord source;
  LatticeWord reduced;
  std::optional<MarkedNonCrossingMatching> matching;  // rank 2 only
};

// restrict -> boundary word -> project -> (rank 2) grow.
ProjectionResult project_plane_partition(const PlanePartition& p, SymmetryClass cls);

}  // namespace hourglass
