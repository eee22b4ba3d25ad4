#include "coloring_oracle.hpp"
#include "doctest.h"
#include "hourglass/invariants.hpp"
#include "hourglass/trips.hpp"

#include <set>

using namespace hourglass;

TEST_CASE("coinv") {
  CHECK(coinv({1, 2, 3, 1, 2, 3}) == 12);
  CHECK(coinv({}) == 0);
  CHECK(coinv({1, 1}) == 1);
  CHECK(coinv({5, 4, 3, 2, 1}) == 0);
  for (int k = 0; k <= 6; ++k)
    CHECK(coinv(std::vector<int>(k, 7)) == k * (k - 1) / 2);
}

TEST_CASE("colorings of the single-box web") {
  auto w = web_from_plane_partition(PlanePartition({1, 1, 1}, {{1}}));
  auto all = enumerate_colorings(w);
  CHECK((long long)all.size() == count_colorings(w));
  // every coloring proper, with full unions at internal vertices
  for (const auto& c : all)
    for (int v = 0; v < (int)w.verts.size(); ++v) {
      if (w.verts[v].boundary) continue;
      unsigned used = 0;
      std::set<int> eids;
      for (const auto& r : w.verts[v].rot) eids.insert(r.edge);
      for (int e : eids) {
        CHECK((used & c.edge_colors[e]) == 0u);
        used |= c.edge_colors[e];
      }
      CHECK(used == 0b11110u);
    }
  // the paper's example coloring: boundary (1,2,3,1,2,3), spokes (3,2,1),
  // hourglasses ({2,4},{1,4},{3,4})
  HexLattice lat({1, 1, 1});
  auto edge_with = [&](char family, LatticePt ep) {
    for (int e = 0; e < (int)w.edges.size(); ++e) {
      if (w.edges[e].dual_id < 0 || w.edges[e].boundary_edge) continue;
      const auto& d = lat.duals()[w.edges[e].dual_id];
      if (d.family == family && d.ep == ep) return e;
    }
    return -1;
  };
  bool found = false;
  for (const auto& c : all) {
    std::vector<int> boundary;
    for (int i = 0; i < w.n(); ++i) {
      auto cols = c.colors_of(w.boundary_edge_at(i));
      boundary.push_back(cols[0]);
    }
    if (boundary != std::vector<int>{1, 2, 3, 1, 2, 3}) continue;
    if (c.colors_of(edge_with('W', {1, -1})) != std::vector<int>{3}) continue;  // NE spoke
    if (c.colors_of(edge_with('N', {1, -1})) != std::vector<int>{2}) continue;  // S spoke
    if (c.colors_of(edge_with('E', {0, -1})) != std::vector<int>{1}) continue;  // NW spoke
    if (c.colors_of(edge_with('N', {0, 0})) != std::vector<int>{2, 4}) continue;
    if (c.colors_of(edge_with('E', {1, -1})) != std::vector<int>{1, 4}) continue;
    if (c.colors_of(edge_with('W', {1, -2})) != std::vector<int>{3, 4}) continue;
    found = true;
  }
  CHECK(found);
}

TEST_CASE("the invariant monomial of the example coloring has sign +1") {
  auto w = web_from_plane_partition(PlanePartition({1, 1, 1}, {{1}}));
  bool found = false;
  for (const auto& m : invariant_at_q1(w)) {
    std::vector<int> boundary;
    for (const auto& f : m.factors) boundary.push_back(f.colors[0]);
    if (boundary == std::vector<int>{1, 2, 3, 1, 2, 3}) {
      found = true;
      CHECK(m.sign == 1);  // coinv = 12 is even
      CHECK(m.factors.size() == 6);
      // families follow the boundary colors: b1 black, b2 white, ...
      for (int i = 0; i < 6; ++i)
        CHECK(m.factors[i].family == (i % 2 == 0 ? 'x' : 'y'));
    }
  }
  CHECK(found);
}

TEST_CASE("the separation labeling is itself a proper coloring") {
  auto w = web_from_plane_partition(PlanePartition({1, 1, 1}, {{1}}));
  SeparationLabeler labeler(w);
  std::vector<unsigned> label_coloring(w.edges.size(), 0);
  for (int e = 0; e < (int)w.edges.size(); ++e) {
    if (w.edges[e].hourglass)
      for (int c : labeler.label_hourglass(e)) label_coloring[e] |= 1u << c;
    else
      label_coloring[e] = 1u << labeler.label_simple(e);
  }
  bool present = false;
  for_each_coloring(w, [&](const ProperColoring& c) {
    if (c.edge_colors == label_coloring) present = true;
  });
  CHECK(present);
}

TEST_CASE("brute-force oracle agrees on the 1x1x1 webs") {
  for (const auto& p : enumerate_box({1, 1, 1})) {
    auto w = web_from_plane_partition(p);
    long long brute = oracle::brute_force_colorings(w);
    CHECK(brute == count_colorings(w));
    CHECK(brute == oracle::transfer_colorings(w));
  }
}

TEST_CASE("transfer oracle agrees on small boxes") {
  for (Box3 box : {Box3{1, 1, 2}, Box3{1, 2, 1}, Box3{2, 1, 1}, Box3{1, 2, 2}}) {
    for (const auto& p : enumerate_box(box)) {
      auto w = web_from_plane_partition(p);
      CHECK(oracle::transfer_colorings(w) == count_colorings(w));
    }
  }
}

TEST_CASE("monomials have one factor per boundary vertex") {
  auto w = web_from_plane_partition(PlanePartition({1, 1, 1}, {{0}}));
  auto monos = invariant_at_q1(w);
  CHECK((long long)monos.size() == count_colorings(w));
  for (const auto& m : monos) CHECK(m.factors.size() == 6);
}
