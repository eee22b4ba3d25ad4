#pragma once

#include "json.hpp"

#include "hourglass/invariants.hpp"
#include "hourglass/plane_partition.hpp"
#include "hourglass/projection.hpp"
#include "hourglass/tableau.hpp"
#include "hourglass/web.hpp"

namespace hourglass {

using nlohmann::json;

json to_json(const PlanePartition& p);
PlanePartition plane_partition_from_json(const json& j);

// {"box", "class", "matched", "boundary", "vertices", "edges", "pp"};
// positions are real plane coordinates for rendering.
json to_json(const HourglassWeb& w);
// Rebuilds the web from box + matched (full webs) or pp + class (restricted).
HourglassWeb web_from_json(const json& j);

json to_json(const LatticeWord& w);
json to_json(const OscillatingTableau& t);
json to_json(const MarkedNonCrossingMatching& m);
json to_json(const InvariantMonomial& m);

// Real drawing-plane coordinates of a scaled basis point.
std::pair<double, double> real_coords(Pt p);

}  // namespace hourglass
