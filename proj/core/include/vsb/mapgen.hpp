#pragma once

#include <random>

#include "vsb/poly.hpp"

namespace vsb {

struct MapGenParams {
    int max_terms = 3;         // per component, uniform in [1, max_terms]
    std::uint32_t max_exp = 3; // per variable per term, uniform in [0, max_exp]
};

// One sparse map with nonzero coefficients; may still be constant or
// miss variables. Draws from the engine directly (modulo, not
// uniform_int_distribution, whose output differs across standard
// library implementations), so a seed pins the corpus everywhere.
PolyMap random_sparse_map(const FieldPtr& f, int n, std::mt19937_64& rng,
                          const MapGenParams& params = {});

// Resamples until the map is nonconstant and every variable appears,
// which is what the dilation factors require.
PolyMap random_analyzable_map(const FieldPtr& f, int n, std::mt19937_64& rng,
                              const MapGenParams& params = {});

} // namespace vsb
