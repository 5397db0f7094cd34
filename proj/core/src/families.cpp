#include "vsb/families.hpp"

#include <utility>

#include "vsb/errors.hpp"
#include "vsb/gf.hpp"

namespace vsb {

namespace {

// q = p^e with p prime, or BadParamsError.
std::pair<std::uint64_t, int> factor_prime_power(std::uint64_t q) {
    if (q < 2) throw BadParamsError("q must be a prime power, got " +
                                    std::to_string(q));
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1)
        throw BadParamsError("q must be a prime power, got " +
                             std::to_string(q));
    return {p, e};
}

SparsePoly variable(const FieldPtr& f, int nvars, int index) {
    SparsePoly x(f, nvars);
    ExponentVec e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    x.add_term(e, f->one());
    return x;
}

} // namespace

PolyMap zan_cao(std::uint64_t a) {
    auto f19 = Field::make(19, 1);
    SparsePoly p(f19, 1);
    p.add_term(ExponentVec{7}, f19->one());
    if (a % 19 != 0) p.add_term(ExponentVec{1}, f19->from_int(a));
    std::vector<SparsePoly> comps;
    comps.push_back(std::move(p));
    return PolyMap(f19, std::move(comps));
}

PolyMap norm_map(std::uint64_t q, int n, std::uint64_t a) {
    if (n < 2) throw BadParamsError("norm map needs n >= 2");
    if (a < 1) throw BadParamsError("norm map needs a >= 1");
    auto [p, e] = factor_prime_power(q);
    auto base = Field::make(p, e);
    int nu = n - 1;
    auto ext = ExtensionCtx::make(base, nu);
    const auto& top = ext.top();

    // Product of Frobenius conjugates of x1*e1 + ... + x_nu*e_nu,
    // computed over the top field in all n variables so the final
    // multiplication by xn needs no reindexing.
    SparsePoly prod(top, n);
    prod.add_term(ExponentVec(static_cast<std::size_t>(n), 0), top->one());
    std::uint64_t qi = 1;
    for (int i = 0; i < nu; ++i) {
        SparsePoly conj(top, n);
        for (int j = 0; j < nu; ++j) {
            ExponentVec ev(static_cast<std::size_t>(n), 0);
            ev[static_cast<std::size_t>(j)] = 1;
            conj.add_term(ev, ext.basis()[static_cast<std::size_t>(j)].pow(qi));
        }
        prod = prod * conj;
        qi *= q;
    }

    // Every coefficient of a norm form lies in the base field; pull it
    // down through the basis coordinates.
    SparsePoly norm(base, n);
    for (const auto& [ev, c] : prod.terms()) {
        auto cs = ext.coords(c);
        for (std::size_t i = 1; i < cs.size(); ++i)
            if (!cs[i].is_zero())
                throw NotInBaseFieldError(
                    "norm form coefficient left the base field");
        norm.add_term(ev, cs[0]);
    }

    std::vector<SparsePoly> comps;
    for (int i = 0; i < n - 1; ++i) comps.push_back(variable(base, n, i));
    comps.push_back(norm.pow(static_cast<std::uint32_t>(a)) *
                    variable(base, n, n - 1));
    return PolyMap(base, std::move(comps));
}

PolyMap cusick_muller(std::uint64_t q, int k) {
    if (k < 1) throw BadParamsError("cusick-muller needs k >= 1");
    auto [p, e] = factor_prime_power(q);
    auto field = Field::make(p, e * k);
    SparsePoly f1(field, 1);
    f1.add_term(ExponentVec{static_cast<std::uint32_t>(q)}, field->one());
    f1.add_term(ExponentVec{static_cast<std::uint32_t>(q - 1)}, field->one());
    std::vector<SparsePoly> comps;
    comps.push_back(std::move(f1));
    return PolyMap(field, std::move(comps));
}

} // namespace vsb
