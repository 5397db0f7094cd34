#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vsb/errors.hpp"

namespace vsb {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/*
 * F_q with q = p^a, realized as F_p[t]/(m) for a monic irreducible m of
 * degree a. Elements are coefficient vectors c_0 + c_1 t + ... + c_{a-1}
 * t^{a-1} with entries in [0, p). When no modulus is supplied, the
 * lexicographically smallest monic irreducible is chosen, comparing
 * coefficient sequences low degree first; for a = 1 this is t itself,
 * i.e. plain arithmetic mod p.
 *
 * Fields are immutable and handed out as shared_ptr. Two fields are
 * compatible when p, a and modulus agree, so elements created against
 * separately constructed but identical fields interoperate.
 */
class Field : public std::enable_shared_from_this<Field> {
public:
    // Throws NotPrimeError, ReducibleModulusError (modulus not monic,
    // wrong degree, or reducible), DomainTooLargeError for q > 2^16.
    static FieldPtr make(std::uint64_t p, int a,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint64_t p() const { return p_; }
    int a() const { return a_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool compatible(const Field& other) const;

    FieldElement zero() const;
    FieldElement one() const;
    // Residue class of t. For a = 1 the modulus is t, so this is zero;
    // prime fields should use from_int instead.
    FieldElement generator() const;
    FieldElement from_coeffs(std::vector<std::uint32_t> coeffs) const;
    // Constant embedding of an integer (reduced mod p).
    FieldElement from_int(std::uint64_t v) const;
    // Mixed-radix rank in [0, q): sum c_i p^i. Inverse of element_from_rank.
    std::uint64_t rank(const FieldElement& x) const;
    FieldElement from_rank(std::uint64_t r) const;

    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement neg(const FieldElement& x) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    // Throws DivisionByZeroError on zero input.
    FieldElement inv(const FieldElement& x) const;
    FieldElement pow(const FieldElement& x, std::uint64_t e) const;

    std::string describe() const; // e.g. "F_9 = F_3[t]/(1 + t^2)"

private:
    Field(std::uint64_t p, int a, std::vector<std::uint32_t> modulus);

    std::uint64_t p_;
    int a_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_; // length a+1, monic

    friend class FieldElement;
};

class FieldElement {
public:
    FieldElement() = default; // empty element; unusable until assigned

    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    const FieldPtr& field() const { return field_; }
    bool is_zero() const;
    std::uint64_t rank() const { return field_->rank(*this); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inv() const { return field_->inv(*this); }
    FieldElement pow(std::uint64_t e) const { return field_->pow(*this, e); }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // "2" for constants, "(1 + t^2)"-style for proper extension elements.
    std::string to_string() const;

private:
    FieldElement(FieldPtr f, std::vector<std::uint32_t> c)
        : field_(std::move(f)), c_(std::move(c)) {}

    FieldPtr field_;
    std::vector<std::uint32_t> c_;

    friend class Field;
};

/*
 * The degree-n extension F_{q^n}/F_q, realized concretely: the top field
 * is F_{p^{a n}} with its own default modulus, embed() sends the base
 * generator to a root of the base modulus found by exhaustive scan, and
 * basis() is the power basis 1, beta, ..., beta^{n-1} of the top field's
 * canonical generator, checked to be F_q-linearly independent at
 * construction. coords() inverts the basis: it writes a top element as an
 * F_q-coordinate tuple, which is what lets images downstairs be compared
 * with images upstairs.
 */
class ExtensionCtx {
public:
    // Throws DomainTooLargeError when q^n > 2^16.
    static ExtensionCtx make(FieldPtr base, int n);

    const FieldPtr& base() const { return base_; }
    const FieldPtr& top() const { return top_; }
    int degree() const { return n_; }
    const std::vector<FieldElement>& basis() const { return basis_; }

    FieldElement embed(const FieldElement& x) const;
    // F_q-coordinates of y in basis(); length n.
    std::vector<FieldElement> coords(const FieldElement& y) const;
    FieldElement from_coords(const std::vector<FieldElement>& cs) const;

private:
    ExtensionCtx() = default;

    FieldPtr base_;
    FieldPtr top_;
    int n_ = 0;
    std::vector<FieldElement> embed_powers_; // images of t^j, j < a
    std::vector<FieldElement> basis_;        // e_1 = 1, e_2 = beta, ...
    // Inverse of the F_p matrix whose columns are embed(t^j) * e_i,
    // giving the coordinate solve as one matrix-vector product.
    std::vector<std::vector<std::uint32_t>> coord_inv_;
};

// x^{(q^n-1)/(q-1)} for x in the top field, coerced into the base field.
// Throws NotInBaseFieldError if the power fails to land in the embedded
// copy of F_q (cannot happen for actual norms; the check is kept).
FieldElement norm_value(const ExtensionCtx& ctx, const FieldElement& x);

} // namespace vsb
