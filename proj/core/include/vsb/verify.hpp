#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vsb/dilation.hpp"
#include "vsb/poly.hpp"

namespace vsb {

struct VerifySpec {
    std::vector<std::uint64_t> qs;
    std::vector<int> ns;
    std::uint64_t count = 0; // maps per (q, n) pair; ignored when exhaustive
    std::uint64_t seed = 0;
    // Enumerate every map whose components combine the monomials of
    // total degree <= 2 instead of sampling. Feasible only for tiny
    // (q, n); guarded by q^(monomials * n) <= 2^16.
    bool exhaustive = false;
};

struct Violation {
    std::string bound_name;
    std::uint64_t q = 0;
    int n = 0;
    std::uint64_t value_set_size = 0;
    Rational bound;
    std::string map_text; // render() output, enough to reproduce
};

struct VerifySummary {
    std::uint64_t maps_tested = 0;
    std::vector<Violation> violations;
};

/*
 * Checks every cardinality bound against the brute-forced value set
 * over a seeded corpus (or the exhaustive degree <= 2 family). Maps
 * that are constant or skip a variable are excluded: the bounds'
 * hypotheses fail for them. A nonempty violations list means a bound
 * claimed |V| <= q^n - b and brute force found otherwise; there is no
 * legitimate data state with one.
 */
VerifySummary run_verify(const VerifySpec& spec);

// Fixed-key-order JSON mirror of the summary.
std::string verify_json(const VerifySummary& s);

} // namespace vsb
