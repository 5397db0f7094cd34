#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vsb/dilation.hpp"
#include "vsb/poly.hpp"

namespace vsb {

// One cardinality bound of the form |V_f| <= q^n - bound, evaluated
// against the brute-forced value set size.
struct TheoremCheck {
    std::string name;
    Rational bound;
    bool satisfied = false;
};

struct AnalyzeOptions {
    // Skip over-envelope stages with a note instead of throwing.
    bool skip_heavy = false;
    // Search for the first k with a nonvanishing power sum S_k. Off by
    // default: the search costs up to q^n evaluations per candidate k.
    bool with_u = false;
    // Upper end of the u search; defaults to q^n - 1, the value taken
    // by every permutation map.
    std::optional<std::uint64_t> u_cap;
};

/*
 * Aggregated invariants of one map. Fields after `mu_times_qminus1`
 * are optional because the stages that produce them are gated: the
 * value set needs q^n <= 2^24 and the u search needs q^n <= 2^12 plus
 * an explicit request. `notes` records exactly which stages were
 * skipped and why, so a report is interpretable on its own.
 */
struct InvariantReport {
    std::uint64_t q = 0;
    int n = 0;
    std::uint64_t degree = 0;
    Rational mu;
    std::uint64_t omega = 0;
    Rational n_qminus1_over_d;
    Rational mu_times_qminus1;
    std::optional<std::uint64_t> value_set_size;
    std::optional<bool> is_permutation;
    bool u_searched = false;
    std::optional<std::uint64_t> u;
    std::optional<std::uint64_t> u_cap;
    std::vector<TheoremCheck> theorem_checks;
    std::vector<std::string> notes;
};

/*
 * Runs the full pipeline on one map: degree, dilation factors, the
 * exact lower chain omega >= mu(q-1) >= n(q-1)/d, the brute-forced
 * value set, and the four cardinality bounds. Bounds are only checked
 * when the map is not a permutation; each theorem's hypothesis is
 * |V_f| < q^n. Throws UnusedVariablesError when a variable appears in
 * no component (the dilation factors are undefined) and
 * DomainTooLargeError when an envelope is exceeded without skip_heavy.
 */
InvariantReport analyze(const PolyMap& f, const AnalyzeOptions& opts = {});

// Fixed-key-order JSON, rationals as {"num": ..., "den": ...}, never
// floats. Byte-identical for equal reports.
std::string report_json(const InvariantReport& r);

} // namespace vsb
