#pragma once

#include <random>
#include <vector>

#include "hourglass/lattice_word.hpp"

namespace hourglass {

// An r-row oscillating tableau: the shape sequence lambda^0..lambda^n of
// generalized partitions together with the filled diagram.  Boxes to the
// left of the lambda^0 line carry negative positions.
struct OscillatingTableau {
  struct Box {
    int pos = 0;                // 1,2,... right of the line; -1,-2,... left
    std::vector<int> entries;   // one or two of i / -i (bars are negative)
  };
  int rank = 4;
  std::vector<std::vector<int>> shapes;     // n+1 shapes, each of length rank
  std::vector<std::vector<Box>> filling;    // one list per row, by creation

  friend bool operator==(const OscillatingTableau&, const OscillatingTableau&) = default;
};

// The growth of the word's diagram: shapes follow lambda^i = lambda^{i-1} +-
// e_row; entries are placed by the two insertion cases (a barred letter goes
// into the rightmost open positive box, a plain letter into the leftmost open
// barred box, with new boxes opened right resp. left of the lambda^0 line).
// Throws std::invalid_argument when the word is not Yamanouchi.
OscillatingTableau word_to_tableau(const LatticeWord& w);

// Inverse reading of the shape sequence.
LatticeWord tableau_to_word(const OscillatingTableau& t);

// Uniform-at-each-step random Yamanouchi word, for round-trip property tests.
LatticeWord random_yamanouchi_word(std::mt19937& rng, int rank, int length);

}  // namespace hourglass
