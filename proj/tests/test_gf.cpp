#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "vsb/errors.hpp"
#include "vsb/gf.hpp"

using namespace vsb;

namespace {

// Independent scalar oracle for prime fields: plain integer arithmetic
// mod p, no library code involved.
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::vector<FieldPtr> small_fields() {
    return {
        Field::make(2, 1),  Field::make(3, 1), Field::make(2, 2),
        Field::make(5, 1),  Field::make(7, 1), Field::make(2, 3),
        Field::make(3, 2),  Field::make(13, 1), Field::make(2, 4),
    };
}

} // namespace

TEST_CASE("construction rejects composite characteristic") {
    CHECK_THROWS_AS(Field::make(4, 1), NotPrimeError);
    CHECK_THROWS_AS(Field::make(1, 1), NotPrimeError);
    CHECK_THROWS_AS(Field::make(15, 2), NotPrimeError);
}

TEST_CASE("construction rejects reducible or malformed moduli") {
    // t^2 + 1 factors over F_2 as (t+1)^2
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}),
                    ReducibleModulusError);
    // not monic
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 2}),
                    ReducibleModulusError);
    // wrong length
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<std::uint32_t>{1, 1}),
                    ReducibleModulusError);
    // coefficient out of range
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<std::uint32_t>{4, 0, 1}),
                    ReducibleModulusError);
}

TEST_CASE("default moduli are the lexicographically smallest irreducibles") {
    auto f4 = Field::make(2, 2);
    CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1}); // 1 + t + t^2
    auto f9 = Field::make(3, 2);
    CHECK(f9->modulus() == std::vector<std::uint32_t>{1, 0, 1}); // 1 + t^2
    auto f8 = Field::make(2, 3);
    CHECK(f8->modulus() == std::vector<std::uint32_t>{1, 0, 1, 1}); // 1 + t^2 + t^3
    auto f19 = Field::make(19, 1);
    CHECK(f19->modulus() == std::vector<std::uint32_t>{0, 1}); // t
}

TEST_CASE("field order too large is rejected") {
    CHECK_THROWS_AS(Field::make(2, 17), DomainTooLargeError);
    CHECK_THROWS_AS(Field::make(65537, 1), DomainTooLargeError);
}

TEST_CASE("prime field arithmetic matches integer arithmetic mod p") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull}) {
        auto f = Field::make(p, 1);
        for (std::uint64_t x = 0; x < p; ++x)
            for (std::uint64_t y = 0; y < p; ++y) {
                auto ex = f->from_int(x), ey = f->from_int(y);
                CHECK((ex + ey).rank() == (x + y) % p);
                CHECK((ex * ey).rank() == x * y % p);
                CHECK((ex - ey).rank() == (x + p - y) % p);
            }
    }
}

TEST_CASE("inverse of 7 in F_19 is 11") {
    auto f = Field::make(19, 1);
    CHECK(f->from_int(7).inv() == f->from_int(11));
    CHECK_THROWS_AS(f->zero().inv(), DivisionByZeroError);
}

TEST_CASE("alpha squared reduces to alpha+1 in F_4") {
    auto f4 = Field::make(2, 2);
    auto alpha = f4->generator();
    CHECK(alpha * alpha == alpha + f4->one());
    CHECK(alpha * alpha * alpha == f4->one()); // alpha^3 = 1
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
    for (const auto& f : small_fields()) {
        std::uint64_t q = f->q();
        REQUIRE(q <= 16);
        // group/ring laws over all pairs, associativity over all triples
        for (std::uint64_t i = 0; i < q; ++i) {
            auto x = f->from_rank(i);
            CHECK(x + f->zero() == x);
            CHECK(x * f->one() == x);
            CHECK(x + (-x) == f->zero());
            if (!x.is_zero()) {
                CHECK(x * x.inv() == f->one());
                CHECK(x.pow(q - 1) == f->one());
            }
            for (std::uint64_t j = 0; j < q; ++j) {
                auto y = f->from_rank(j);
                CHECK(x + y == y + x);
                CHECK(x * y == y * x);
                for (std::uint64_t k = 0; k < q; ++k) {
                    auto z = f->from_rank(k);
                    CHECK((x + y) + z == x + (y + z));
                    CHECK((x * y) * z == x * (y * z));
                    CHECK(x * (y + z) == x * y + x * z);
                }
            }
        }
    }
}

TEST_CASE("pow agrees with the scalar oracle on prime fields") {
    auto f = Field::make(19, 1);
    for (std::uint64_t x = 0; x < 19; ++x)
        for (std::uint64_t e : {0ull, 1ull, 2ull, 7ull, 18ull, 19ull, 360ull})
            CHECK(f->from_int(x).pow(e).rank() == mod_pow(x, e, 19));
}

TEST_CASE("rank round-trips") {
    for (const auto& f : small_fields())
        for (std::uint64_t r = 0; r < f->q(); ++r)
            CHECK(f->from_rank(r).rank() == r);
}

TEST_CASE("elements of separately constructed identical fields interoperate") {
    auto f1 = Field::make(19, 1);
    auto f2 = Field::make(19, 1);
    CHECK(f1->from_int(4) + f2->from_int(5) == f1->from_int(9));
}

TEST_CASE("mixing distinct fields throws") {
    auto f3 = Field::make(3, 1);
    auto f5 = Field::make(5, 1);
    CHECK_THROWS_AS(f3->one() + f5->one(), FieldMismatchError);
}

TEST_CASE("extension of F_2 by degree 2 exposes the power basis {1, alpha}") {
    auto ctx = ExtensionCtx::make(Field::make(2, 1), 2);
    CHECK(ctx.top()->q() == 4);
    REQUIRE(ctx.basis().size() == 2);
    CHECK(ctx.basis()[0] == ctx.top()->one());
    CHECK(ctx.basis()[1] == ctx.top()->generator());
}

TEST_CASE("degree-1 extension is the identity embedding") {
    auto base = Field::make(3, 2);
    auto ctx = ExtensionCtx::make(base, 1);
    CHECK(ctx.top().get() == base.get());
    for (std::uint64_t r = 0; r < base->q(); ++r) {
        auto x = base->from_rank(r);
        CHECK(ctx.embed(x) == x);
        auto cs = ctx.coords(x);
        REQUIRE(cs.size() == 1);
        CHECK(cs[0] == x);
    }
}

TEST_CASE("embedding is a field homomorphism, exhaustively for small bases") {
    struct Case { std::uint64_t p; int a; int n; };
    for (auto c : {Case{2, 1, 2}, Case{2, 1, 4}, Case{3, 1, 2}, Case{2, 2, 2},
                   Case{5, 1, 2}, Case{2, 3, 2}, Case{3, 2, 2}}) {
        auto base = Field::make(c.p, c.a);
        auto ctx = ExtensionCtx::make(base, c.n);
        CHECK(ctx.embed(base->one()) == ctx.top()->one());
        CHECK(ctx.embed(base->zero()) == ctx.top()->zero());
        for (std::uint64_t i = 0; i < base->q(); ++i)
            for (std::uint64_t j = 0; j < base->q(); ++j) {
                auto x = base->from_rank(i), y = base->from_rank(j);
                CHECK(ctx.embed(x + y) == ctx.embed(x) + ctx.embed(y));
                CHECK(ctx.embed(x * y) == ctx.embed(x) * ctx.embed(y));
                // injectivity
                if (i != j) CHECK(ctx.embed(x) != ctx.embed(y));
            }
    }
}

TEST_CASE("coords inverts the basis expansion") {
    for (auto [p, a, n] : {std::tuple{2, 1, 3}, {3, 1, 2}, {2, 2, 2}}) {
        auto ctx = ExtensionCtx::make(Field::make(p, a), n);
        for (std::uint64_t r = 0; r < ctx.top()->q(); ++r) {
            auto y = ctx.top()->from_rank(r);
            CHECK(ctx.from_coords(ctx.coords(y)) == y);
        }
    }
}

TEST_CASE("norm of alpha over F_4/F_2 is 1") {
    auto ctx = ExtensionCtx::make(Field::make(2, 1), 2);
    auto alpha = ctx.top()->generator();
    CHECK(norm_value(ctx, alpha) == ctx.base()->one());
}

TEST_CASE("norm is multiplicative and surjective onto the base field") {
    struct Case { std::uint64_t p; int a; int n; };
    for (auto c : {Case{2, 1, 2}, Case{2, 1, 3}, Case{2, 1, 6}, Case{3, 1, 3},
                   Case{2, 2, 3}, Case{5, 1, 2}, Case{2, 3, 2}, Case{7, 1, 2}}) {
        auto base = Field::make(c.p, c.a);
        auto ctx = ExtensionCtx::make(base, c.n);
        REQUIRE(ctx.top()->q() <= 64);
        CHECK(norm_value(ctx, ctx.top()->zero()) == base->zero());
        CHECK(norm_value(ctx, ctx.top()->one()) == base->one());
        std::set<std::uint64_t> images;
        for (std::uint64_t i = 0; i < ctx.top()->q(); ++i) {
            auto x = ctx.top()->from_rank(i);
            images.insert(norm_value(ctx, x).rank());
            for (std::uint64_t j = i; j < ctx.top()->q(); ++j) {
                auto y = ctx.top()->from_rank(j);
                CHECK(norm_value(ctx, x * y) ==
                      norm_value(ctx, x) * norm_value(ctx, y));
            }
            // norms of embedded base elements are plain (q^n-1)/(q-1) powers
            // of base elements: embed then norm returns x^{(q^n-1)/(q-1)}
        }
        CHECK(images.size() == base->q()); // norm map is onto
    }
}

TEST_CASE("extension order beyond 2^16 is rejected") {
    CHECK_THROWS_AS(ExtensionCtx::make(Field::make(2, 9), 2), DomainTooLargeError);
}
