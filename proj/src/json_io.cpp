#include "hourglass/json_io.hpp"

#include <cmath>

namespace hourglass {

std::pair<double, double> real_coords(Pt p) {
  double u = (double)p.x / kScale, v = (double)p.y / kScale;
  return {std::sqrt(3.0) / 2.0 * (u + v), (v - u) / 2.0};
}

json to_json(const PlanePartition& p) {
  return json{{"box", {p.box().a, p.box().b, p.box().c}}, {"heights", p.heights()}};
}

PlanePartition plane_partition_from_json(const json& j) {
  Box3 box{j.at("box").at(0).get<int>(), j.at("box").at(1).get<int>(),
           j.at("box").at(2).get<int>()};
  return PlanePartition(box, j.at("heights").get<std::vector<std::vector<int>>>());
}

json to_json(const HourglassWeb& w) {
  json verts = json::array();
  for (const auto& v : w.verts) {
    auto [x, y] = real_coords(v.pos);
    verts.push_back({{"color", v.black ? "black" : "white"},
                     {"kind", v.boundary ? "boundary" : "internal"},
                     {"pos", {x, y}}});
  }
  json edges = json::array();
  for (const auto& e : w.edges) {
    json strands = json::array();
    for (const auto& s : e.strands) {
      json pts = json::array();
      for (Pt p : s) {
        auto [x, y] = real_coords(p);
        pts.push_back({x, y});
      }
      strands.push_back(pts);
    }
    edges.push_back({{"ends", {e.v0, e.v1}},
                     {"kind", e.hourglass ? "hourglass" : "simple"},
                     {"boundary", e.boundary_edge},
                     {"dual", e.dual_id},
                     {"strands", strands}});
  }
  json j{{"box", {w.box.a, w.box.b, w.box.c}},
         {"class", w.domain ? json(to_string(*w.domain)) : json(nullptr)},
         {"matched", w.matched},
         {"boundary", w.boundary},
         {"vertices", verts},
         {"edges", edges}};
  return j;
}

HourglassWeb web_from_json(const json& j) {
  Box3 box{j.at("box").at(0).get<int>(), j.at("box").at(1).get<int>(),
           j.at("box").at(2).get<int>()};
  std::optional<SymmetryClass> cls;
  if (j.contains("class") && !j.at("class").is_null()) {
    cls = symmetry_class_from_string(j.at("class").get<std::string>());
    if (!cls) throw std::invalid_argument("unknown symmetry class in web file");
  }
  if (cls) {
    if (!j.contains("pp"))
      throw std::invalid_argument("restricted web files need the source partition under \"pp\"");
    PlanePartition p = plane_partition_from_json(j.at("pp"));
    return restrict_to_fundamental_domain(p, *cls);
  }
  return web_from_matching(box, j.at("matched").get<std::vector<int>>());
}

json to_json(const LatticeWord& w) {
  return json{{"rank", w.rank}, {"tokens", w.to_string()}, {"letters", w.letters}};
}

json to_json(const OscillatingTableau& t) {
  json filling = json::array();
  for (const auto& row : t.filling) {
    json cells = json::array();
    for (const auto& box : row) cells.push_back({{"pos", box.pos}, {"entries", box.entries}});
    filling.push_back(cells);
  }
  return json{{"r", t.rank}, {"shapes", t.shapes}, {"filling", filling}};
}

json to_json(const MarkedNonCrossingMatching& m) {
  json points = json::array();
  for (const auto& p : m.points)
    points.push_back({{"color", p.black ? "black" : "white"}, {"label", p.label}});
  json arcs = json::array();
  for (const auto& a : m.arcs) {
    const char* mark = a.mark == MarkedNonCrossingMatching::Mark::plain ? "plain"
                       : a.mark == MarkedNonCrossingMatching::Mark::white_mid ? "white"
                                                                              : "black";
    arcs.push_back({{"ends", {a.a + 1, a.b + 1}}, {"mark", mark}});
  }
  return json{{"points", points}, {"edges", arcs}};
}

json to_json(const InvariantMonomial& m) {
  json factors = json::array();
  for (const auto& f : m.factors)
    factors.push_back({{"pos", f.pos}, {"family", std::string(1, f.family)}, {"colors", f.colors}});
  return json{{"sign", m.sign}, {"factors", factors}};
}

}  // namespace hourglass
