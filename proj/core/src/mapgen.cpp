#include "vsb/mapgen.hpp"

#include "vsb/gf.hpp"

namespace vsb {

PolyMap random_sparse_map(const FieldPtr& f, int n, std::mt19937_64& rng,
                          const MapGenParams& params) {
    std::vector<SparsePoly> comps;
    for (int i = 0; i < n; ++i) {
        SparsePoly p(f, n);
        int t = 1 + static_cast<int>(rng() % params.max_terms);
        for (int j = 0; j < t; ++j) {
            ExponentVec e(static_cast<std::size_t>(n));
            for (auto& v : e)
                v = static_cast<std::uint32_t>(rng() % (params.max_exp + 1));
            p.add_term(e, f->from_rank(1 + rng() % (f->q() - 1)));
        }
        comps.push_back(std::move(p));
    }
    return PolyMap(f, std::move(comps));
}

PolyMap random_analyzable_map(const FieldPtr& f, int n, std::mt19937_64& rng,
                              const MapGenParams& params) {
    for (;;) {
        auto m = random_sparse_map(f, n, rng, params);
        bool constant = true;
        for (const auto& c : m.components())
            if (!c.is_constant()) constant = false;
        if (constant) continue;
        if (!m.unused_variables().empty()) continue;
        return m;
    }
}

} // namespace vsb
