#include "doctest.h"
#include "hourglass/symmetry_words.hpp"
#include "hourglass/trips.hpp"
#include "hourglass/web.hpp"

#include <map>
#include <set>

using namespace hourglass;

namespace {

// full-web edge key -> separation label, for comparing against restrictions
struct FullLabels {
  std::map<int, int> simple;               // dual id -> label
  std::map<int, std::set<int>> hourglass;  // dual id -> label set
  std::map<Pt, int> pendant;               // tip position -> label
};

FullLabels label_everything(const HourglassWeb& w) {
  FullLabels out;
  SeparationLabeler labeler(w);
  for (int e = 0; e < (int)w.edges.size(); ++e) {
    const auto& edge = w.edges[e];
    if (edge.hourglass)
      out.hourglass[edge.dual_id] = labeler.label_hourglass(e);
    else if (edge.boundary_edge)
      out.pendant[w.verts[edge.v1].pos] = labeler.label_simple(e);
    else
      out.simple[edge.dual_id] = labeler.label_simple(e);
  }
  labeler.check_proper();
  return out;
}

}  // namespace

TEST_CASE("boundary words are Yamanouchi on all small full webs") {
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b)
      for (int c = 1; c <= 2; ++c)
        for (const auto& p : enumerate_box({a, b, c}))
          CHECK(is_yamanouchi(boundary_word(web_from_plane_partition(p))));
}

TEST_CASE("labels are proper on restricted webs") {
  for (const auto& p : enumerate_class(SymmetryClass::SPP, {2, 2, 2})) {
    auto w = restrict_to_fundamental_domain(p, SymmetryClass::SPP);
    SeparationLabeler labeler(w);
    CHECK_NOTHROW(labeler.check_proper());
  }
  for (const auto& p : enumerate_class(SymmetryClass::TSSCPP, {4, 4, 4})) {
    auto w = restrict_to_fundamental_domain(p, SymmetryClass::TSSCPP);
    SeparationLabeler labeler(w);
    CHECK_NOTHROW(labeler.check_proper());
  }
}

TEST_CASE("restriction preserves separation labels (small boxes)") {
  auto run = [&](SymmetryClass cls, Box3 box) {
    for (const auto& p : enumerate_class(cls, box)) {
      auto full = label_everything(web_from_plane_partition(p));
      auto r = restrict_to_fundamental_domain(p, cls);
      SeparationLabeler labeler(r);
      for (int e = 0; e < (int)r.edges.size(); ++e) {
        const auto& edge = r.edges[e];
        if (edge.hourglass) {
          CHECK(labeler.label_hourglass(e) == full.hourglass.at(edge.dual_id));
        } else if (edge.split_partner >= 0) {
          std::set<int> pair{labeler.label_simple(e),
                             labeler.label_simple(edge.split_partner)};
          CHECK(pair == full.hourglass.at(edge.dual_id));
        } else if (edge.dual_id >= 0) {
          CHECK(labeler.label_simple(e) == full.simple.at(edge.dual_id));
        } else {
          CHECK(labeler.label_simple(e) == full.pendant.at(r.verts[edge.v1].pos));
        }
      }
    }
  };
  run(SymmetryClass::SPP, {2, 2, 2});
  run(SymmetryClass::CSPP, {2, 2, 2});
  run(SymmetryClass::TSPP, {2, 2, 2});
  run(SymmetryClass::TSSCPP, {2, 2, 2});
  run(SymmetryClass::SPP, {2, 2, 1});
}

TEST_CASE("benzene moves keep labels outside the flipped face and trip1/trip3 ends") {
  PlanePartition p({2, 2, 2}, {{2, 1}, {1, 0}});
  auto w = web_from_plane_partition(p);
  auto labels = label_everything(w);
  auto t1 = trip_permutation(w, 1);
  for (const auto& f : benzene_faces(w)) {
    auto w2 = apply_benzene(w, f);
    auto labels2 = label_everything(w2);
    CHECK(trip_permutation(w2, 1) == t1);
    std::set<int> flipped(f.edges.begin(), f.edges.end());
    std::set<int> flipped_duals;
    for (int e : f.edges) flipped_duals.insert(w.edges[e].dual_id);
    for (auto& [dual, lab] : labels.simple)
      if (!flipped_duals.count(dual)) {
        REQUIRE(labels2.simple.count(dual));
        CHECK(labels2.simple.at(dual) == lab);
      }
    for (auto& [tip, lab] : labels.pendant) CHECK(labels2.pendant.at(tip) == lab);
  }
}

TEST_CASE("three trips pass through each simple edge black to white") {
  auto w = web_from_plane_partition(PlanePartition({1, 1, 1}, {{1}}));
  SeparationLabeler labeler(w);
  for (int e = 0; e < (int)w.edges.size(); ++e) {
    if (w.edges[e].hourglass) continue;
    std::set<std::pair<int, int>> endpoints;
    for (int a = 1; a <= 3; ++a) {
      auto t = labeler.trip_through(e, a);
      CHECK(t.index == a);
      endpoints.insert({t.start_pos, t.end_pos});
    }
    CHECK(endpoints.size() >= 2);  // trip1 and trip3 reverse each other
  }
}

TEST_CASE("trip paths report start, end and a polyline") {
  auto w = web_from_plane_partition(PlanePartition({2, 1, 1}, {{1}, {0}}));
  for (int i = 0; i < w.n(); ++i)
    for (int a = 1; a <= 3; ++a) {
      auto t = trip_path(w, i, a);
      CHECK(t.start_pos == i);
      CHECK(t.polyline.front() == w.verts[w.boundary[i]].pos);
      CHECK(t.polyline.back() == w.verts[w.boundary[t.end_pos]].pos);
      CHECK(t.steps.size() >= 1);
    }
}

TEST_CASE("split pairs are marked as pair tokens") {
  PlanePartition p({2, 2, 2}, {{2, 1}, {1, 0}});
  auto r = restrict_to_fundamental_domain(p, SymmetryClass::TSSCPP);
  auto word = boundary_word(r);
  CHECK(word.to_string() == "1 2 (3,4)");
  CHECK(word.pair_marks == std::set<std::size_t>{2});
}
