#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vsb/gf.hpp"
#include "vsb/poly.hpp"

namespace vsb {

// Coefficient vector of length ctx.degree(), entries in [0, p^N).
using PadicElement = std::vector<std::uint64_t>;

/*
 * Arithmetic in (Z/p^N)[t]/(m(t)) where m is the monic lift of the
 * given field's modulus: a finite-precision window into the unramified
 * extension whose residue field is that field. The window p^N is
 * capped at 2^31 so coefficient products fit in 64 bits.
 */
class PadicCtx {
public:
    PadicCtx(FieldPtr field, int precision);

    const FieldPtr& field() const { return field_; }
    std::uint64_t p() const { return p_; }
    int precision() const { return precision_; }
    int degree() const { return degree_; }
    std::uint64_t pn() const { return pn_; }

    PadicElement zero() const;
    PadicElement one() const;
    PadicElement add(const PadicElement& x, const PadicElement& y) const;
    PadicElement mul(const PadicElement& x, const PadicElement& y) const;
    PadicElement pow(PadicElement x, std::uint64_t e) const;

    // Reduction mod p back down to the residue field.
    FieldElement reduce(const PadicElement& x) const;

private:
    FieldPtr field_;
    std::uint64_t p_ = 0;
    int precision_ = 0;
    int degree_ = 0;
    std::uint64_t pn_ = 0;
    std::vector<std::uint64_t> modulus_;
};

/*
 * The multiplicative lift: the unique y with y^q = y mod p^N reducing
 * to x mod p, reached from the naive lift by N-1 rounds of y <- y^q
 * (each round fixes one more p-digit).
 */
PadicElement teichmuller_lift(const PadicCtx& ctx, const FieldElement& x);

/*
 * S_k: the sum over all tuples x in L_q^n of base Teichmueller points
 * of (sum_i lift(f_i)(x) * lift(e_i))^k, where lift(f_i) carries
 * Teichmueller-lifted coefficients and e_1..e_n is the extension
 * basis. Computed modulo p^N with N = v_p(k) + 1, which decides the
 * congruence mod pk exactly. Requires q^n <= 2^12.
 */
PadicElement power_sum(const PolyMap& f, const ExtensionCtx& ctx,
                       std::uint64_t k);

struct USearchResult {
    std::optional<std::uint64_t> u; // empty: every S_k vanished up to cap
    std::uint64_t cap = 0;
    // v_p of S_u when found; always < v_p(pk) by the search condition.
    std::optional<int> nonzero_sum_valuation;
};

// Smallest k <= cap with S_k(f) not congruent 0 mod pk, searching
// k = 1, 2, ... with a fresh precision window per k. Functionally
// constant maps never produce one; the search then reports the cap.
USearchResult u_invariant(const PolyMap& f, const ExtensionCtx& ctx,
                          std::uint64_t cap);

/*
 * Sum of x^k over the Teichmueller points of the field, as a plain
 * integer: q for k = 0, q-1 when (q-1) | k and k > 0, otherwise 0.
 * Evaluated at precision a+1 so the three outcomes stay distinct.
 * Requires q <= 2^12.
 */
std::int64_t char_sum(const FieldPtr& field, std::uint64_t k);

struct MultinomialCheck {
    int t = 0;         // e minus the smallest v_p over the parts
    int valuation = 0; // v_p of the exact multinomial coefficient
    bool holds = false; // valuation >= t
};

/*
 * Checks p^t | multinomial(p^e; parts) where p^{e-t} is the largest
 * power of p dividing every part. The coefficient is computed exactly
 * from big-integer factorials. Parts must be positive, sum to p^e,
 * and number at least two.
 */
MultinomialCheck multinomial_valuation_check(
    std::uint64_t p, int e, const std::vector<std::uint64_t>& parts);

} // namespace vsb
