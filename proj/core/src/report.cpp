#include "vsb/report.hpp"

#include <json.hpp>

#include "vsb/errors.hpp"
#include "vsb/gf.hpp"
#include "vsb/padic.hpp"
#include "vsb/valueset.hpp"

namespace vsb {

namespace {

constexpr std::uint64_t kValueSetCap = 1ull << 24;
constexpr std::uint64_t kPowerSumCap = 1ull << 12;

// q^n, saturating above 2^32 which is past every envelope anyway.
std::uint64_t domain_size(std::uint64_t q, int n) {
    std::uint64_t d = 1;
    for (int i = 0; i < n; ++i) {
        if (d > (1ull << 32) / q) return 1ull << 33;
        d *= q;
    }
    return d;
}

nlohmann::ordered_json rat_json(const Rational& r) {
    nlohmann::ordered_json j;
    j["num"] = boost::multiprecision::numerator(r).convert_to<std::int64_t>();
    j["den"] = boost::multiprecision::denominator(r).convert_to<std::int64_t>();
    return j;
}

} // namespace

InvariantReport analyze(const PolyMap& f, const AnalyzeOptions& opts) {
    InvariantReport r;
    r.q = f.field()->q();
    r.n = f.nvars();
    r.degree = f.degree();

    auto m = mu(f);
    auto o = omega(f);
    r.mu = m.mu;
    r.omega = o.omega;
    r.mu_times_qminus1 = m.mu * Rational(r.q - 1);
    r.n_qminus1_over_d = Rational(static_cast<std::uint64_t>(r.n) * (r.q - 1),
                                  r.degree);

    std::uint64_t domain = domain_size(r.q, r.n);

    if (domain <= kValueSetCap) {
        auto vs = value_set(f);
        r.value_set_size = vs.cardinality;
        r.is_permutation = vs.is_permutation;
        if (!vs.is_permutation) {
            Rational qn(domain);
            Rational card(vs.cardinality);
            auto check = [&](const char* name, Rational bound) {
                r.theorem_checks.push_back(
                    {name, bound, card <= qn - bound});
            };
            check("degree-bound", r.n_qminus1_over_d);
            check("capped-dilation-bound",
                  std::min(Rational(r.q), r.mu_times_qminus1));
            check("dilation-bound", r.mu_times_qminus1);
            check("integral-dilation-bound", Rational(r.omega));
            r.notes.push_back(
                "degree-bound is checked as |V| <= q^n - n(q-1)/d; the "
                "original statement reads q - n(q-1)/d, and the q^n form "
                "is the one its proof supports");
        }
    } else if (opts.skip_heavy) {
        r.notes.push_back("value set skipped: q^n exceeds 2^24");
    } else {
        throw DomainTooLargeError(
            "value set needs q^n <= 2^24; rerun with skip_heavy to omit it");
    }

    if (opts.with_u) {
        if (domain > kPowerSumCap) {
            if (!opts.skip_heavy)
                throw DomainTooLargeError(
                    "power sums need q^n <= 2^12; rerun with skip_heavy "
                    "to omit the u search");
            r.notes.push_back("u search skipped: q^n exceeds 2^12");
        } else {
            std::uint64_t cap = opts.u_cap.value_or(domain - 1);
            auto ext = ExtensionCtx::make(f.field(), r.n);
            auto res = u_invariant(f, ext, cap);
            r.u_searched = true;
            r.u = res.u;
            r.u_cap = res.cap;
            if (!res.u)
                r.notes.push_back(
                    "no nonvanishing power sum found at or below k = " +
                    std::to_string(res.cap));
        }
    }
    return r;
}

std::string report_json(const InvariantReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["q"] = r.q;
    j["n"] = r.n;
    j["degree"] = r.degree;
    j["mu"] = rat_json(r.mu);
    j["omega"] = r.omega;
    j["lower_chain"] = {
        {"n_qminus1_over_d", rat_json(r.n_qminus1_over_d)},
        {"mu_times_qminus1", rat_json(r.mu_times_qminus1)},
        {"omega", r.omega},
    };
    if (r.value_set_size) j["value_set_size"] = *r.value_set_size;
    if (r.is_permutation) j["is_permutation"] = *r.is_permutation;
    if (r.u_searched) {
        if (r.u)
            j["u"] = *r.u;
        else
            j["u"] = nullptr;
        j["u_cap"] = *r.u_cap;
    }
    j["theorem_checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.theorem_checks)
        j["theorem_checks"].push_back({{"name", c.name},
                                       {"bound", rat_json(c.bound)},
                                       {"satisfied", c.satisfied}});
    j["notes"] = r.notes;
    return j.dump(2);
}

} // namespace vsb
