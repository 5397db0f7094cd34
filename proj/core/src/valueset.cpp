#include "vsb/valueset.hpp"

#include <bit>
#include <thread>
#include <vector>

namespace vsb {

namespace {

constexpr std::uint64_t kDomainCap = 1ull << 24;

// Walks ranks [lo, hi) of the domain F_q^n, decoding each rank into a
// point, and ORs the rank of eval(point) into bits.
template <typename Eval>
void sweep_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t q, int n,
                 const Field& field, std::vector<std::uint64_t>& bits, Eval&& ev) {
    std::vector<FieldElement> point(static_cast<std::size_t>(n), field.zero());
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(n), 0);
    std::uint64_t r = lo;
    for (int i = 0; i < n; ++i) {
        digits[static_cast<std::size_t>(i)] = r % q;
        point[static_cast<std::size_t>(i)] = field.from_rank(r % q);
        r /= q;
    }
    for (std::uint64_t cur = lo; cur < hi; ++cur) {
        std::uint64_t out = ev(point);
        bits[out >> 6] |= 1ull << (out & 63);
        // mixed-radix increment, low digit first
        for (int i = 0; i < n; ++i) {
            auto& d = digits[static_cast<std::size_t>(i)];
            if (++d < q) {
                point[static_cast<std::size_t>(i)] = field.from_rank(d);
                break;
            }
            d = 0;
            point[static_cast<std::size_t>(i)] = field.from_rank(0);
        }
    }
}

template <typename Eval>
ValueSetResult sweep(std::uint64_t domain, std::uint64_t q, int n,
                     const Field& field, Eval&& ev) {
    std::size_t words = static_cast<std::size_t>((domain + 63) / 64);
    std::vector<std::uint64_t> bits(words, 0);
    unsigned hw = std::thread::hardware_concurrency();
    if (domain >= (1u << 16) && hw > 1) {
        unsigned nthreads = hw;
        std::vector<std::vector<std::uint64_t>> parts(
            nthreads, std::vector<std::uint64_t>(words, 0));
        std::vector<std::thread> threads;
        std::uint64_t chunk = (domain + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            std::uint64_t lo = t * chunk;
            std::uint64_t hi = std::min(domain, lo + chunk);
            if (lo >= hi) break;
            threads.emplace_back([&, lo, hi, t] {
                auto local_ev = ev; // per-thread copy: evaluators may carry scratch
                sweep_range(lo, hi, q, n, field, parts[t], local_ev);
            });
        }
        for (auto& th : threads) th.join();
        for (const auto& part : parts)
            for (std::size_t w = 0; w < words; ++w) bits[w] |= part[w];
    } else {
        sweep_range(0, domain, q, n, field, bits, ev);
    }
    std::uint64_t count = 0;
    for (auto w : bits) count += static_cast<std::uint64_t>(std::popcount(w));
    ValueSetResult res;
    res.cardinality = count;
    res.is_permutation = count == domain;
    res.missed_count = domain - count;
    return res;
}

} // namespace

ValueSetResult value_set(const PolyMap& f) {
    const Field& field = *f.field();
    std::uint64_t q = field.q();
    int n = f.nvars();
    std::uint64_t domain = 1;
    for (int i = 0; i < n; ++i) {
        domain *= q;
        if (domain > kDomainCap)
            throw DomainTooLargeError("value set domain exceeds 2^24 points");
    }
    return sweep(domain, q, n, field, [&](const std::vector<FieldElement>& pt) {
        auto out = f.eval(pt);
        std::uint64_t r = 0;
        for (std::size_t i = out.size(); i-- > 0;) r = r * q + out[i].rank();
        return r;
    });
}

ValueSetResult value_set_of_univariate(const SparsePoly& g, const ExtensionCtx& ctx) {
    if (!ctx.top()->compatible(*g.field()))
        throw FieldMismatchError("polynomial must live over the extension top field");
    if (ctx.degree() != g.nvars())
        throw BadParamsError("extension degree must equal the number of variables");
    const Field& base = *ctx.base();
    std::uint64_t q = base.q();
    int n = g.nvars();
    std::uint64_t domain = 1;
    for (int i = 0; i < n; ++i) {
        domain *= q;
        if (domain > kDomainCap)
            throw DomainTooLargeError("value set domain exceeds 2^24 points");
    }
    // Embeddings of base points are precomputed once; the sweep decodes
    // base ranks and looks images up.
    std::vector<FieldElement> embedded;
    embedded.reserve(static_cast<std::size_t>(q));
    for (std::uint64_t r = 0; r < q; ++r)
        embedded.push_back(ctx.embed(base.from_rank(r)));
    std::vector<FieldElement> top_point(static_cast<std::size_t>(n),
                                        ctx.top()->zero());
    return sweep(domain, q, n, base,
                 [&, top_point](const std::vector<FieldElement>& pt) mutable {
                     for (std::size_t i = 0; i < pt.size(); ++i)
                         top_point[i] = embedded[pt[i].rank()];
                     return g.eval(top_point).rank();
                 });
}

} // namespace vsb
