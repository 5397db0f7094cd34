#pragma once

#include <cstdint>

#include "vsb/poly.hpp"

namespace vsb {

// x1^7 + a*x1 over F_19, a reduced mod 19. Hits exactly 13 of the 19
// values unless a mod 19 lands in {0, 4, 5, 8, 16, 17}.
PolyMap zan_cao(std::uint64_t a);

/*
 * (x1, ..., x_{n-1}, N(x1,...,x_{n-1})^a * xn) over F_q, where N is the
 * norm form of F_{q^{n-1}} over F_q expanded symbolically: the product
 * of the Frobenius conjugates of x1*e1 + ... + x_{n-1}*e_{n-1} in the
 * power basis, with every coefficient pushed back down to F_q. N
 * vanishes only at the origin, so the map misses exactly q - 1 points.
 * Requires n >= 2, a >= 1, q a prime power, q^{n-1} <= 2^16.
 */
PolyMap norm_map(std::uint64_t q, int n, std::uint64_t a);

// x1^q + x1^(q-1) over F_{q^k}. Requires q a prime power, k >= 1,
// q^k <= 2^16. The image misses ceil((q^k - 1) / q) points.
PolyMap cusick_muller(std::uint64_t q, int k);

} // namespace vsb
