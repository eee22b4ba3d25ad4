#pragma once

#include <functional>
#include <vector>

#include "hourglass/web.hpp"

namespace hourglass {

// Number of position pairs i < j with w_i <= w_j.
long long coinv(const std::vector<int>& w);

// A proper edge coloring: one color per simple edge, a 2-set per hourglass,
// pairwise disjoint around every vertex.  Colors are bitmasks over {1,2,3,4}.
struct ProperColoring {
  std::vector<unsigned> edge_colors;  // per edge id, bits 1<<c for c in 1..4

  std::vector<int> colors_of(int edge) const {
    std::vector<int> out;
    for (int c = 1; c <= 4; ++c)
      if (edge_colors[edge] & (1u << c)) out.push_back(c);
    return out;
  }
};

// Backtracking over the edges in a fixed breadth-first order; the callback
// sees each proper coloring exactly once, in deterministic order.
void for_each_coloring(const HourglassWeb& w,
                       const std::function<void(const ProperColoring&)>& fn);

std::vector<ProperColoring> enumerate_colorings(const HourglassWeb& w);
long long count_colorings(const HourglassWeb& w);

struct InvariantMonomial {
  struct Factor {
    int pos = 0;               // boundary position, 1-based
    char family = 'x';         // 'x' at black boundary vertices, 'y' at white
    std::vector<int> colors;   // the color set of the boundary edge
  };
  int sign = 1;                // (-1)^coinv of the boundary color sequence
  std::vector<Factor> factors;
};

// The q = 1 expansion: one monomial per proper coloring.
std::vector<InvariantMonomial> invariant_at_q1(const HourglassWeb& w);

}  // namespace hourglass
