#pragma once

#include <string>

#include "vsb/poly.hpp"

namespace vsb {

/*
 * SVG picture of the Newton polytope of a two-variable map: the hull
 * of the exponent vectors and the origin, the same hull contracted by
 * n/d, every positive lattice point in view classified by which of the
 * two regions contains it, and the minimal-dilation witness target.
 * All geometry is exact (integer hull, rational contraction, rational
 * point-in-polygon tests) and the output is byte-stable for a fixed
 * input. Throws NotTwoDimensionalError unless nvars == 2.
 */
std::string polytope_svg(const PolyMap& f);

} // namespace vsb
