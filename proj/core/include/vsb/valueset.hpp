#pragma once

#include <cstdint>

#include "vsb/poly.hpp"

namespace vsb {

struct ValueSetResult {
    std::uint64_t cardinality = 0;
    bool is_permutation = false;
    std::uint64_t missed_count = 0; // q^n - cardinality
};

// Exact image size of f over F_q^n by exhaustive evaluation into a
// bitset indexed by the mixed-radix rank of the output tuple. The
// domain is split into disjoint rank ranges evaluated concurrently and
// merged by bitwise OR. Throws DomainTooLargeError when q^n > 2^24,
// UnusedVariablesError never (unused variables are fine here).
ValueSetResult value_set(const PolyMap& f);

// Image size of the combined polynomial g over tuples of base-field
// points embedded in the top field. Equals value_set of the map g was
// combined from.
ValueSetResult value_set_of_univariate(const SparsePoly& g, const ExtensionCtx& ctx);

} // namespace vsb
