#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "vsb/errors.hpp"
#include "vsb/gf.hpp"
#include "vsb/poly.hpp"
#include "vsb/valueset.hpp"

using namespace vsb;

namespace {

// Independent oracle for univariate maps over prime fields: plain
// integer arithmetic, no field machinery.
std::uint64_t univariate_image_size(const std::vector<std::uint64_t>& coeffs,
                                    std::uint64_t p) {
    std::set<std::uint64_t> image;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t y = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) y = (y * x + coeffs[i]) % p;
        image.insert(y);
    }
    return image.size();
}

PolyMap random_map(const FieldPtr& f, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<std::uint32_t> expd(0, 3);
    std::uniform_int_distribution<std::uint64_t> coeffd(1, f->q() - 1);
    std::vector<SparsePoly> comps;
    for (int i = 0; i < n; ++i) {
        SparsePoly p(f, n);
        int t = nterms(rng);
        for (int j = 0; j < t; ++j) {
            ExponentVec e(static_cast<std::size_t>(n));
            for (auto& v : e) v = expd(rng);
            p.add_term(e, f->from_rank(coeffd(rng)));
        }
        comps.push_back(std::move(p));
    }
    return PolyMap(f, std::move(comps));
}

} // namespace

TEST_CASE("x^7 + x over F_19 hits exactly 13 values") {
    auto f19 = Field::make(19, 1);
    auto m = PolyMap::parse("vars:1; f1 = x1^7 + x1", f19);
    auto r = value_set(m);
    CHECK(r.cardinality == 13);
    CHECK_FALSE(r.is_permutation);
    CHECK(r.missed_count == 6);
    CHECK(univariate_image_size({0, 1, 0, 0, 0, 0, 0, 1}, 19) == 13);
}

TEST_CASE("the identity on F_3^2 is a permutation") {
    auto f3 = Field::make(3, 1);
    auto m = PolyMap::parse("vars:2; f1 = x1; f2 = x2", f3);
    auto r = value_set(m);
    CHECK(r.cardinality == 9);
    CHECK(r.is_permutation);
    CHECK(r.missed_count == 0);
}

TEST_CASE("x^2 over F_3 hits 2 values") {
    auto f3 = Field::make(3, 1);
    auto r = value_set(PolyMap::parse("vars:1; f1 = x1^2", f3));
    CHECK(r.cardinality == 2);
    CHECK(r.missed_count == 1);
}

TEST_CASE("(x1, x1*x2) over F_2 hits 3 of 4 points") {
    auto f2 = Field::make(2, 1);
    auto r = value_set(PolyMap::parse("vars:2; f1 = x1; f2 = x1*x2", f2));
    CHECK(r.cardinality == 3);
}

TEST_CASE("prime-field univariate maps agree with the integer oracle") {
    std::mt19937_64 rng(411);
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        auto f = Field::make(p, 1);
        std::uniform_int_distribution<std::uint64_t> cd(0, p - 1);
        for (int rep = 0; rep < 20; ++rep) {
            std::vector<std::uint64_t> coeffs(1 + rep % 6);
            for (auto& c : coeffs) c = cd(rng);
            SparsePoly poly(f, 1);
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                poly.add_term(ExponentVec{static_cast<std::uint32_t>(i)},
                              f->from_int(coeffs[i]));
            if (poly.is_zero())
                poly.add_term(ExponentVec{1}, f->one());
            std::vector<std::uint64_t> cv(coeffs);
            if (std::all_of(coeffs.begin(), coeffs.end(),
                            [](std::uint64_t c) { return c == 0; }))
                cv = {0, 1};
            auto r = value_set(PolyMap(f, {poly}));
            CHECK(r.cardinality == univariate_image_size(cv, p));
        }
    }
}

TEST_CASE("composition with a coordinate permutation preserves the image size") {
    auto f3 = Field::make(3, 1);
    auto m = PolyMap::parse("vars:2; f1 = x1^2 + x2; f2 = x1*x2", f3);
    // swap output coordinates
    auto swapped = PolyMap::parse("vars:2; f1 = x1*x2; f2 = x1^2 + x2", f3);
    CHECK(value_set(m).cardinality == value_set(swapped).cardinality);
    // precompose with the input swap x1 <-> x2
    auto pre = PolyMap::parse("vars:2; f1 = x2^2 + x1; f2 = x2*x1", f3);
    CHECK(value_set(m).cardinality == value_set(pre).cardinality);
}

TEST_CASE("the combined polynomial has the same image size as the map") {
    struct Case { std::uint64_t p; int a; int n; };
    std::mt19937_64 rng(5150);
    for (auto c : {Case{2, 1, 2}, Case{3, 1, 2}, Case{2, 2, 2}, Case{2, 1, 3},
                   Case{3, 1, 3}, Case{5, 1, 2}, Case{3, 2, 2}}) {
        auto base = Field::make(c.p, c.a);
        auto ctx = ExtensionCtx::make(base, c.n);
        for (int rep = 0; rep < 5; ++rep) {
            auto f = random_map(base, c.n, rng);
            auto g = combine(f, ctx);
            auto direct = value_set(f);
            auto lifted = value_set_of_univariate(g, ctx);
            CHECK(direct.cardinality == lifted.cardinality);
            CHECK(direct.is_permutation == lifted.is_permutation);
        }
    }
}

TEST_CASE("domains beyond 2^24 are rejected") {
    auto f = Field::make(2, 13); // q = 8192, q^2 = 2^26
    auto m = PolyMap::parse("vars:2; f1 = x1; f2 = x2", f);
    CHECK_THROWS_AS(value_set(m), DomainTooLargeError);
}

TEST_CASE("a domain large enough to engage the parallel path stays exact") {
    // q^n = 3^11 = 177147 > 2^16 forces the threaded sweep; the map
    // (x1...x11) -> (x1^2, x2, ..., x11) has image 2 * 3^10.
    auto f3 = Field::make(3, 1);
    std::vector<SparsePoly> comps;
    for (int i = 0; i < 11; ++i) {
        SparsePoly p(f3, 11);
        ExponentVec e(11, 0);
        e[static_cast<std::size_t>(i)] = i == 0 ? 2 : 1;
        p.add_term(e, f3->one());
        comps.push_back(std::move(p));
    }
    auto r = value_set(PolyMap(f3, std::move(comps)));
    CHECK(r.cardinality == 2ull * 59049);
    CHECK_FALSE(r.is_permutation);
}
