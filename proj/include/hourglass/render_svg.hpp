#pragma once

#include <string>

#include "hourglass/web.hpp"

namespace hourglass {

// SVG 1.1 drawing of a web: strands, bicolored vertices, boundary labels.
std::string render_svg(const HourglassWeb& w);

}  // namespace hourglass
