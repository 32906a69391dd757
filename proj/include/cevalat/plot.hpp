#pragma once

// SVG rendering of the 2-simplex section: triangle, cevians through
// the three boundary points, thick U-segments, and shaded C regions.
// Coordinates are computed in rationals and emitted as decimal text.

#include <string>
#include <utility>

#include "cevalat/ratioset.hpp"

namespace cevalat {

// Decimal rendering of a rational: exact when the denominator is
// 2^a 5^b, otherwise 12 significant digits with the approximate flag.
std::pair<std::string, bool> rat_decimal(const Rat& r);

std::string ceva_svg(const Rat& x, const Rat& y, const RatioSet& u12,
                     const RatioSet& u23, const RatioSet& u13);

}  // namespace cevalat
