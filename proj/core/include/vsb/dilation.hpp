#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vsb/poly.hpp"

namespace vsb {

// Exact arithmetic throughout this module: all comparisons of dilation
// factors and bound values are rational, never floating point.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Convex hull data for plots: the degree-matrix columns plus the origin.
struct NewtonPolytope {
    int nvars = 0;
    std::vector<ExponentVec> generators; // origin first, then columns
};

NewtonPolytope newton_polytope(const PolyMap& f);

struct LpSolution {
    Rational value;                 // min sum of coefficients
    std::vector<Rational> coeffs;   // one per degree-matrix column
};

/*
 * minimize   sum_j alpha_j
 * subject to sum_j alpha_j D_j = target,  alpha_j >= 0 rational
 *
 * Dense two-phase simplex over exact rationals with Bland's rule, so
 * cycling is impossible. Infeasible targets return nullopt rather than
 * throwing: the caller iterates many targets and most boxes contain
 * infeasible ones.
 */
std::optional<LpSolution> lp_min_combination(const DegreeMatrix& D,
                                             const ExponentVec& target);

struct MuResult {
    Rational mu;
    ExponentVec witness_target;         // all entries >= 1
    std::vector<Rational> witness_coeffs; // aligned with D.columns
};

/*
 * Minimal dilation factor of the Newton polytope: the least k > 0 such
 * that k * hull(D columns, origin) meets a lattice point with all
 * coordinates >= 1. Equivalently the min over integer targets W in
 * [1, n*d]^n of the LP above; the box suffices because any optimal
 * combination has value <= n, so its target has coordinates <= n*d.
 */
MuResult mu_from_matrix(const DegreeMatrix& D);
// Map-level wrapper; throws UnusedVariablesError when some variable
// appears in no component (the polytope never meets the positive
// orthant in that direction).
MuResult mu(const PolyMap& f);

struct OmegaResult {
    std::uint64_t omega = 0;
    std::vector<std::uint32_t> witness_k; // aligned with D.columns, in [0, q-1]
};

/*
 * Minimal total multiplicity sum k_j in {0..q-1} with sum k_j D_j
 * having every coordinate a positive multiple of q-1. Computed as a
 * shortest path by BFS over states (residues mod q-1, positivity mask);
 * edges add one column, explored in column order so witnesses are
 * deterministic. Path multiplicities are normalized into [0, q-1]
 * afterwards; the normalization never fires on a shortest path (a
 * reduced witness would be shorter), it is kept as a guard.
 */
OmegaResult omega_from_matrix(const DegreeMatrix& D, std::uint64_t q);
OmegaResult omega(const PolyMap& f);

/*
 * Minimal size of a subset of the given vectors whose sum has all
 * coordinates >= 1. Throws UncoverableCoordinateError when some
 * coordinate is zero in every vector. Subsets are enumerated by size
 * then lexicographic index order, so the first hit is canonical.
 */
int gamma(const std::vector<ExponentVec>& vectors, int nvars);

struct ChainCheck {
    std::uint64_t omega = 0;
    Rational mu_times_qminus1;
    Rational n_qminus1_over_d;
    bool holds = false;       // omega >= mu(q-1) >= n(q-1)/d, exact
    bool degree_below_nvars = false; // d < n: reported, not asserted
};

ChainCheck chain_check(const PolyMap& f);

} // namespace vsb
