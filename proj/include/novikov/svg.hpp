#pragma once

#include "novikov/barcode.hpp"

#include <string>

namespace nov {

// Static SVG of a barcode: one horizontal segment per bar (multiplicities
// expanded), births on the x axis, infinite bars running to the right edge.
std::string barcode_svg(const Barcode& b, const std::string& title = "");

} // namespace nov
