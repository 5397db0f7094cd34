#include "vsb/verify.hpp"

#include <algorithm>

#include <json.hpp>

#include "vsb/errors.hpp"
#include "vsb/gf.hpp"
#include "vsb/mapgen.hpp"
#include "vsb/valueset.hpp"

namespace vsb {

namespace {

std::pair<std::uint64_t, int> factor_prime_power_q(std::uint64_t q) {
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

// All exponent vectors in n variables with total degree <= 2, in a
// fixed order so exhaustive corpora are stable.
std::vector<ExponentVec> quadratic_monomials(int n) {
    std::vector<ExponentVec> out;
    ExponentVec e(static_cast<std::size_t>(n), 0);
    for (;;) {
        std::uint32_t total = 0;
        for (auto v : e) total += v;
        if (total <= 2) out.push_back(e);
        std::size_t i = 0;
        while (i < e.size() && e[i] == 2) e[i++] = 0;
        if (i == e.size()) break;
        ++e[i];
    }
    return out;
}

void check_map(const PolyMap& f, std::uint64_t q, int n,
               VerifySummary& out) {
    auto vs = value_set(f);
    std::uint64_t domain = 1;
    for (int i = 0; i < n; ++i) domain *= q;

    auto m = mu(f);
    auto o = omega(f);
    std::uint64_t d = f.degree();
    Rational mu_q1 = m.mu * Rational(q - 1);
    Rational deg_bound(static_cast<std::uint64_t>(n) * (q - 1), d);

    ++out.maps_tested;

    auto violate = [&](const char* name, const Rational& bound) {
        out.violations.push_back(
            {name, q, n, vs.cardinality, bound, f.render()});
    };

    // The chain holds for every map the hypotheses admit; a break here
    // means the dilation computations disagree with each other.
    if (!(Rational(o.omega) >= mu_q1 && mu_q1 >= deg_bound))
        violate("lower-chain", mu_q1);

    if (vs.is_permutation) return;
    Rational card(vs.cardinality);
    Rational qn(domain);
    if (!(card <= qn - deg_bound)) violate("degree-bound", deg_bound);
    Rational capped = std::min(Rational(q), mu_q1);
    if (!(card <= qn - capped)) violate("capped-dilation-bound", capped);
    if (!(card <= qn - mu_q1)) violate("dilation-bound", mu_q1);
    if (!(card <= qn - Rational(o.omega)))
        violate("integral-dilation-bound", Rational(o.omega));
}

void run_exhaustive(const FieldPtr& f, std::uint64_t q, int n,
                    VerifySummary& out) {
    auto monomials = quadratic_monomials(n);
    std::size_t slots = monomials.size() * static_cast<std::size_t>(n);
    double total = 1;
    for (std::size_t i = 0; i < slots; ++i) total *= static_cast<double>(q);
    if (total > static_cast<double>(1 << 16))
        throw DomainTooLargeError(
            "exhaustive verification needs q^(monomials*n) <= 2^16");

    std::vector<std::uint64_t> ranks(slots, 0);
    for (;;) {
        std::vector<SparsePoly> comps;
        for (int c = 0; c < n; ++c) {
            SparsePoly p(f, n);
            for (std::size_t j = 0; j < monomials.size(); ++j) {
                std::uint64_t r =
                    ranks[static_cast<std::size_t>(c) * monomials.size() + j];
                if (r != 0) p.add_term(monomials[j], f->from_rank(r));
            }
            comps.push_back(std::move(p));
        }
        PolyMap map(f, std::move(comps));
        bool constant = true;
        for (const auto& c : map.components())
            if (!c.is_constant()) constant = false;
        if (!constant && map.unused_variables().empty())
            check_map(map, q, n, out);

        std::size_t i = 0;
        while (i < slots && ranks[i] == q - 1) ranks[i++] = 0;
        if (i == slots) break;
        ++ranks[i];
    }
}

} // namespace

VerifySummary run_verify(const VerifySpec& spec) {
    VerifySummary out;
    std::mt19937_64 rng(spec.seed);
    for (std::uint64_t q : spec.qs) {
        auto [p, a] = factor_prime_power_q(q);
        auto f = Field::make(p, a);
        for (int n : spec.ns) {
            if (spec.exhaustive) {
                run_exhaustive(f, q, n, out);
                continue;
            }
            for (std::uint64_t i = 0; i < spec.count; ++i)
                check_map(random_analyzable_map(f, n, rng), q, n, out);
        }
    }
    return out;
}

std::string verify_json(const VerifySummary& s) {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["maps_tested"] = s.maps_tested;
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : s.violations) {
        nlohmann::ordered_json b;
        b["num"] =
            boost::multiprecision::numerator(v.bound).convert_to<std::int64_t>();
        b["den"] = boost::multiprecision::denominator(v.bound)
                       .convert_to<std::int64_t>();
        j["violations"].push_back({{"bound_name", v.bound_name},
                                   {"q", v.q},
                                   {"n", v.n},
                                   {"value_set_size", v.value_set_size},
                                   {"bound", b},
                                   {"map", v.map_text}});
    }
    return j.dump(2);
}

} // namespace vsb
