#include "doctest.h"
#include "hourglass/json_io.hpp"
#include "hourglass/render_svg.hpp"
#include "hourglass/trips.hpp"

using namespace hourglass;

TEST_CASE("plane partition JSON round trip") {
  PlanePartition p({2, 2, 2}, {{2, 1}, {1, 0}});
  auto j = to_json(p);
  CHECK(plane_partition_from_json(j) == p);
  CHECK(j["box"] == json({2, 2, 2}));
}

TEST_CASE("full web JSON reconstructs the same dimer state") {
  PlanePartition p({2, 1, 2}, {{2}, {1}});
  auto w = web_from_plane_partition(p);
  auto j = to_json(w);
  auto w2 = web_from_json(j);
  CHECK(w2.dimer_key() == w.dimer_key());
  CHECK(boundary_word(w2) == boundary_word(w));
}

TEST_CASE("restricted web JSON reconstructs via the source partition") {
  PlanePartition p({2, 2, 2}, {{2, 1}, {1, 0}});
  auto w = restrict_to_fundamental_domain(p, SymmetryClass::TSSCPP);
  auto j = to_json(w);
  j["pp"] = to_json(p);
  auto w2 = web_from_json(j);
  CHECK(boundary_word(w2).to_string() == "1 2 (3,4)");
}

TEST_CASE("SVG output is a well-formed document") {
  auto w = web_from_plane_partition(PlanePartition({1, 1, 1}, {{1}}));
  auto svg = render_svg(w);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  // every element closed
  CHECK(svg.find("<circle") != std::string::npos);
}

TEST_CASE("tableau and matching JSON shapes") {
  auto t = word_to_tableau(LatticeWord::parse("1 -4 2 -2 4 -1", 4));
  auto tj = to_json(t);
  CHECK(tj["r"] == 4);
  CHECK(tj["shapes"].size() == 7);
  auto m = sl2_growth(LatticeWord::parse("-2 -2 (1,2) 2 2 (1,2)", 2));
  auto mj = to_json(m);
  CHECK(mj["points"].size() == 8);
  CHECK(mj["edges"].size() == 4);
  CHECK(mj["points"][0]["color"] == "white");
}
