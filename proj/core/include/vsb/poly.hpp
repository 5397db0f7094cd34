#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vsb/gf.hpp"

namespace vsb {

// Exponent vector of a monomial: entry i is the power of x_{i+1}.
using ExponentVec = std::vector<std::uint32_t>;

std::uint64_t total_degree(const ExponentVec& e);
int nonzero_count(const ExponentVec& e);

// Graded lexicographic, highest total degree first, ties broken by
// lexicographically larger exponent vector first. This is the canonical
// print order of terms, of map components, and of degree-matrix columns.
struct GrlexDescLess {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const;
};

/*
 * Sparse multivariate polynomial over a fixed field: a term map from
 * exponent vector to nonzero coefficient. Zero coefficients are never
 * stored, so equality is structural.
 */
class SparsePoly {
public:
    SparsePoly(FieldPtr field, int nvars);

    const FieldPtr& field() const { return field_; }
    int nvars() const { return nvars_; }
    const std::map<ExponentVec, FieldElement, GrlexDescLess>& terms() const {
        return terms_;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Max total degree over terms; 0 for constants and the zero polynomial.
    std::uint64_t degree() const;

    // Accumulating insert: adds coeff to the existing coefficient of the
    // monomial, dropping the term if the sum vanishes.
    void add_term(const ExponentVec& exps, const FieldElement& coeff);

    FieldElement eval(const std::vector<FieldElement>& point) const;

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly pow(std::uint32_t e) const;

    bool operator==(const SparsePoly& o) const;
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    std::string render() const; // "x1^7 + x1" style; "0" for the zero poly

private:
    FieldPtr field_;
    int nvars_;
    std::map<ExponentVec, FieldElement, GrlexDescLess> terms_;
};

/*
 * Degree matrix: the distinct nonzero exponent vectors appearing across
 * all components of a map, one column each, sorted in the canonical
 * order. Constant terms contribute no column.
 */
struct DegreeMatrix {
    int nvars = 0;
    std::vector<ExponentVec> columns;

    std::size_t cols() const { return columns.size(); }
};

/*
 * Polynomial self-map of F_q^n: exactly n components f1..fn in n
 * variables. The text form is
 *
 *   file      := header sep component+
 *   header    := "vars:" INT
 *   component := "f<i>" "=" expr          (i = 1..n, in order)
 *   expr      := term (("+"|"-") term)*
 *   term      := coef ("*" powprod)? | powprod
 *   powprod   := factor ("*" factor)*
 *   factor    := VAR ("^" INT)?           (VAR = "x<i>", i = 1..n)
 *   coef      := INT | "(" tpoly ")"      (tpoly: polynomial in t)
 *
 * where sep is a newline or ';', whitespace is insignificant and all
 * integers are reduced mod p. Coefficients of proper extension fields
 * are written in the parenthesized form, e.g. "(1 + t)*x1^2".
 */
class PolyMap {
public:
    PolyMap(FieldPtr field, std::vector<SparsePoly> components);

    // Throws ParseError / UnknownVariableError / ComponentCountError.
    static PolyMap parse(const std::string& text, FieldPtr field);

    const FieldPtr& field() const { return field_; }
    int nvars() const { return nvars_; }
    const std::vector<SparsePoly>& components() const { return comps_; }

    std::vector<FieldElement> eval(const std::vector<FieldElement>& point) const;

    // Max total degree across components. Throws ConstantMapError when
    // every component is constant.
    std::uint64_t degree() const;

    DegreeMatrix degree_matrix() const;

    // 1-based indices of variables appearing in no component.
    std::set<int> unused_variables() const;

    std::string render() const;

    bool operator==(const PolyMap& o) const;

private:
    FieldPtr field_;
    int nvars_;
    std::vector<SparsePoly> comps_;
};

// The single polynomial g = f_1 e_1 + ... + f_n e_n over the top field of
// ctx, in the same n variables. Its image over base-field points equals
// the image of f, which is what makes the univariate route work.
SparsePoly combine(const PolyMap& f, const ExtensionCtx& ctx);

} // namespace vsb
