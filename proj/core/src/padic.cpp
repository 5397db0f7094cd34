#include "vsb/padic.hpp"

#include <algorithm>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vsb {

namespace {

bool small_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int valuation(std::uint64_t n, std::uint64_t p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

} // namespace

PadicCtx::PadicCtx(FieldPtr field, int precision) : field_(std::move(field)) {
    if (precision < 1) throw BadParamsError("precision must be at least 1");
    p_ = field_->p();
    precision_ = precision;
    degree_ = field_->a();
    pn_ = 1;
    for (int i = 0; i < precision_; ++i) {
        if (pn_ > (1ull << 31) / p_)
            throw DomainTooLargeError("precision window exceeds 2^31");
        pn_ *= p_;
    }
    const auto& m = field_->modulus();
    modulus_.assign(m.begin(), m.end());
}

PadicElement PadicCtx::zero() const {
    return PadicElement(static_cast<std::size_t>(degree_), 0);
}

PadicElement PadicCtx::one() const {
    auto r = zero();
    r[0] = 1;
    return r;
}

PadicElement PadicCtx::add(const PadicElement& x, const PadicElement& y) const {
    auto r = zero();
    for (int i = 0; i < degree_; ++i)
        r[static_cast<std::size_t>(i)] =
            (x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)]) % pn_;
    return r;
}

PadicElement PadicCtx::mul(const PadicElement& x, const PadicElement& y) const {
    std::size_t d = static_cast<std::size_t>(degree_);
    std::vector<std::uint64_t> acc(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            acc[i + j] = (acc[i + j] + x[i] * y[j] % pn_) % pn_;
    }
    for (std::size_t idx = acc.size(); idx-- > d;) {
        std::uint64_t c = acc[idx];
        if (c == 0) continue;
        acc[idx] = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (modulus_[j] == 0) continue;
            acc[idx - d + j] =
                (acc[idx - d + j] + c * (pn_ - modulus_[j]) % pn_) % pn_;
        }
    }
    acc.resize(d);
    return acc;
}

PadicElement PadicCtx::pow(PadicElement x, std::uint64_t e) const {
    auto r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, x);
        e >>= 1;
        if (e) x = mul(x, x);
    }
    return r;
}

FieldElement PadicCtx::reduce(const PadicElement& x) const {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(degree_));
    for (int i = 0; i < degree_; ++i)
        c[static_cast<std::size_t>(i)] =
            static_cast<std::uint32_t>(x[static_cast<std::size_t>(i)] % p_);
    return field_->from_coeffs(c);
}

PadicElement teichmuller_lift(const PadicCtx& ctx, const FieldElement& x) {
    if (!ctx.field()->compatible(*x.field()))
        throw FieldMismatchError("element does not belong to the lifted field");
    PadicElement y(static_cast<std::size_t>(ctx.degree()), 0);
    const auto& c = x.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) y[i] = c[i];
    std::uint64_t q = ctx.field()->q();
    for (int i = 1; i < ctx.precision(); ++i) y = ctx.pow(std::move(y), q);
    return y;
}

PadicElement power_sum(const PolyMap& f, const ExtensionCtx& ctx,
                       std::uint64_t k) {
    if (k < 1) throw BadParamsError("power sums start at k = 1");
    if (!ctx.base()->compatible(*f.field()))
        throw FieldMismatchError("power sum expects the map's field as extension base");
    if (ctx.degree() != f.nvars())
        throw BadParamsError("extension degree must equal the number of variables");
    std::uint64_t q = f.field()->q();
    int n = f.nvars();
    std::uint64_t domain = 1;
    for (int i = 0; i < n; ++i) {
        domain *= q;
        if (domain > (1ull << 12))
            throw DomainTooLargeError("power sum domain exceeds 2^12 points");
    }

    std::uint64_t kk = k;
    int prec = 1;
    while (kk % ctx.base()->p() == 0) {
        kk /= ctx.base()->p();
        ++prec;
    }
    PadicCtx ring(ctx.top(), prec);

    // Lifts of every base element (used for both coefficients and
    // evaluation points) and of the basis.
    const auto& base = ctx.base();
    std::vector<PadicElement> lift_of(q);
    for (std::uint64_t r = 0; r < q; ++r)
        lift_of[r] = teichmuller_lift(ring, ctx.embed(base->from_rank(r)));
    std::vector<PadicElement> basis_lift;
    for (int i = 0; i < n; ++i)
        basis_lift.push_back(teichmuller_lift(ring, ctx.basis()[static_cast<std::size_t>(i)]));

    // Distinct exponents across all term slots, then a rank-by-exponent
    // power table so each tuple evaluation is lookups and products.
    std::map<std::uint32_t, std::size_t> exp_index;
    for (const auto& comp : f.components())
        for (const auto& [e, c] : comp.terms())
            for (auto v : e) exp_index.emplace(v, 0);
    std::size_t nexp = 0;
    for (auto& [e, idx] : exp_index) idx = nexp++;
    std::vector<PadicElement> powers(q * nexp);
    for (std::uint64_t r = 0; r < q; ++r)
        for (const auto& [e, idx] : exp_index)
            powers[r * nexp + idx] = ring.pow(lift_of[r], e);

    PadicElement acc = ring.zero();
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(n), 0);
    for (std::uint64_t tuple = 0; tuple < domain; ++tuple) {
        PadicElement summand = ring.zero();
        for (int i = 0; i < n; ++i) {
            PadicElement comp_val = ring.zero();
            for (const auto& [e, c] : f.components()[static_cast<std::size_t>(i)].terms()) {
                PadicElement term = lift_of[f.field()->rank(c)];
                for (int j = 0; j < n; ++j) {
                    std::uint32_t ex = e[static_cast<std::size_t>(j)];
                    if (ex == 0) continue;
                    term = ring.mul(term, powers[digits[static_cast<std::size_t>(j)] * nexp +
                                                 exp_index.at(ex)]);
                }
                comp_val = ring.add(comp_val, term);
            }
            summand = ring.add(summand, ring.mul(comp_val, basis_lift[static_cast<std::size_t>(i)]));
        }
        acc = ring.add(acc, ring.pow(std::move(summand), k));
        std::size_t i = 0;
        while (i < digits.size()) {
            if (++digits[i] < q) break;
            digits[i] = 0;
            ++i;
        }
    }
    return acc;
}

USearchResult u_invariant(const PolyMap& f, const ExtensionCtx& ctx,
                          std::uint64_t cap) {
    USearchResult res;
    res.cap = cap;
    std::uint64_t p = f.field()->p();
    for (std::uint64_t k = 1; k <= cap; ++k) {
        PadicElement s = power_sum(f, ctx, k);
        int best = -1;
        for (auto c : s) {
            if (c == 0) continue;
            int v = valuation(c, p);
            if (best < 0 || v < best) best = v;
        }
        if (best >= 0) {
            res.u = k;
            res.nonzero_sum_valuation = best;
            return res;
        }
    }
    return res;
}

std::int64_t char_sum(const FieldPtr& field, std::uint64_t k) {
    if (field->q() > (1ull << 12))
        throw DomainTooLargeError("character sum domain exceeds 2^12 points");
    PadicCtx ring(field, field->a() + 1);
    PadicElement acc = ring.zero();
    for (std::uint64_t r = 0; r < field->q(); ++r)
        acc = ring.add(acc, ring.pow(teichmuller_lift(ring, field->from_rank(r)), k));
    for (std::size_t i = 1; i < acc.size(); ++i)
        if (acc[i] != 0)
            throw Error("character sum left the prime subring");
    return static_cast<std::int64_t>(acc[0]);
}

MultinomialCheck multinomial_valuation_check(
    std::uint64_t p, int e, const std::vector<std::uint64_t>& parts) {
    namespace mp = boost::multiprecision;
    if (!small_prime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
    if (e < 0) throw BadParamsError("exponent must be nonnegative");
    std::uint64_t total = 1;
    for (int i = 0; i < e; ++i) {
        if (total > (1ull << 20) / p)
            throw DomainTooLargeError("p^e exceeds 2^20");
        total *= p;
    }
    if (parts.size() < 2)
        throw BadParamsError("need at least two parts");
    std::uint64_t sum = 0;
    for (auto a : parts) {
        if (a == 0) throw BadParamsError("parts must be positive");
        sum += a;
    }
    if (sum != total)
        throw PartsSumMismatchError("parts sum to " + std::to_string(sum) +
                                    ", expected " + std::to_string(total));

    int minv = -1;
    for (auto a : parts) {
        int v = valuation(a, p);
        if (minv < 0 || v < minv) minv = v;
    }

    auto factorial = [](std::uint64_t n) {
        mp::cpp_int r = 1;
        for (std::uint64_t i = 2; i <= n; ++i) r *= i;
        return r;
    };
    mp::cpp_int coeff = factorial(total);
    for (auto a : parts) coeff /= factorial(a);

    MultinomialCheck out;
    out.t = e - minv;
    while (coeff % p == 0) {
        coeff /= p;
        ++out.valuation;
    }
    out.holds = out.valuation >= out.t;
    return out;
}

} // namespace vsb
