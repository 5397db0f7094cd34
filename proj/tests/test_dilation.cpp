#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "vsb/dilation.hpp"
#include "vsb/errors.hpp"
#include "vsb/gf.hpp"
#include "vsb/poly.hpp"

using namespace vsb;

namespace {

// Exhaustive minimizer over k in [0, q-1]^m: the straightforward
// reading of the definition, no graph search involved.
std::optional<std::uint64_t> omega_oracle(const DegreeMatrix& D, std::uint64_t q) {
    std::size_t m = D.columns.size();
    std::vector<std::uint32_t> k(m, 0);
    std::optional<std::uint64_t> best;
    for (;;) {
        std::uint64_t total = 0;
        for (auto v : k) total += v;
        bool ok = total > 0;
        for (int i = 0; ok && i < D.nvars; ++i) {
            std::uint64_t s = 0;
            for (std::size_t j = 0; j < m; ++j)
                s += static_cast<std::uint64_t>(k[j]) *
                     D.columns[j][static_cast<std::size_t>(i)];
            ok = s >= 1 && s % (q - 1) == 0;
        }
        if (ok && (!best || total < *best)) best = total;
        std::size_t i = 0;
        while (i < m) {
            if (++k[i] <= q - 1) break;
            k[i] = 0;
            ++i;
        }
        if (i == m) break;
    }
    return best;
}

// Solves sum_{j in S} a_j * col_{S_j} = W exactly. Returns nothing when
// the chosen columns are dependent or the system is inconsistent.
std::optional<std::vector<Rational>> solve_support(
    const std::vector<ExponentVec>& cols, const std::vector<std::size_t>& S,
    const ExponentVec& W) {
    std::size_t n = W.size();
    std::size_t k = S.size();
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(k + 1, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) A[i][j] = Rational(cols[S[j]][i]);
        A[i][k] = Rational(W[i]);
    }
    std::vector<std::size_t> pivot_row(k);
    std::size_t row = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t pr = row;
        while (pr < n && A[pr][c] == 0) ++pr;
        if (pr == n) return std::nullopt;
        std::swap(A[pr], A[row]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || A[r][c] == 0) continue;
            Rational f = A[r][c] / A[row][c];
            for (std::size_t cc = c; cc <= k; ++cc) A[r][cc] -= f * A[row][cc];
        }
        pivot_row[c] = row;
        ++row;
    }
    for (std::size_t r = row; r < n; ++r)
        if (A[r][k] != 0) return std::nullopt;
    std::vector<Rational> a(k);
    for (std::size_t c = 0; c < k; ++c)
        a[c] = A[pivot_row[c]][k] / A[pivot_row[c]][c];
    return a;
}

// Independent minimizer built on basic solutions: every vertex of
// {a >= 0 : D a = W} has support on at most n independent columns, so
// enumerating supports of size <= n and solving exactly finds the LP
// optimum with determinant-bounded denominators.
std::optional<Rational> mu_oracle(const DegreeMatrix& D) {
    int n = D.nvars;
    std::size_t m = D.columns.size();
    std::uint64_t d = 0;
    for (const auto& c : D.columns) d = std::max(d, total_degree(c));
    std::uint64_t hi = static_cast<std::uint64_t>(n) * d;
    std::optional<Rational> best;
    ExponentVec W(static_cast<std::size_t>(n), 1);
    for (;;) {
        int cap = std::min<int>(n, static_cast<int>(m));
        for (int size = 1; size <= cap; ++size) {
            std::vector<std::size_t> S(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i) S[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
            for (;;) {
                auto a = solve_support(D.columns, S, W);
                if (a) {
                    bool nonneg = true;
                    Rational total = 0;
                    for (const auto& v : *a) {
                        if (v < 0) nonneg = false;
                        total += v;
                    }
                    if (nonneg && (!best || total < *best)) best = total;
                }
                int i = size - 1;
                while (i >= 0 && S[static_cast<std::size_t>(i)] ==
                                     m - static_cast<std::size_t>(size - i)) --i;
                if (i < 0) break;
                ++S[static_cast<std::size_t>(i)];
                for (int t = i + 1; t < size; ++t)
                    S[static_cast<std::size_t>(t)] = S[static_cast<std::size_t>(t - 1)] + 1;
            }
        }
        std::size_t i = 0;
        while (i < W.size()) {
            if (++W[i] <= hi) break;
            W[i] = 1;
            ++i;
        }
        if (i == W.size()) break;
    }
    return best;
}

DegreeMatrix random_covering_matrix(std::mt19937_64& rng, int max_n, int max_m,
                                    std::uint32_t max_entry) {
    std::uniform_int_distribution<int> nd(1, max_n);
    std::uniform_int_distribution<int> md(1, max_m);
    for (;;) {
        DegreeMatrix D;
        D.nvars = nd(rng);
        int m = md(rng);
        std::uniform_int_distribution<std::uint32_t> ed(0, max_entry);
        bool ok = true;
        for (int j = 0; j < m; ++j) {
            ExponentVec c(static_cast<std::size_t>(D.nvars));
            std::uint64_t t = 0;
            for (auto& v : c) {
                v = ed(rng);
                t += v;
            }
            if (t == 0) {
                ok = false;
                break;
            }
            D.columns.push_back(std::move(c));
        }
        if (!ok) continue;
        for (int i = 0; ok && i < D.nvars; ++i) {
            bool covered = false;
            for (const auto& c : D.columns)
                covered = covered || c[static_cast<std::size_t>(i)] > 0;
            ok = covered;
        }
        if (ok) return D;
    }
}

void replay_omega(const DegreeMatrix& D, std::uint64_t q, const OmegaResult& r) {
    REQUIRE(r.witness_k.size() == D.columns.size());
    std::uint64_t total = 0;
    for (auto k : r.witness_k) {
        CHECK(k <= q - 1);
        total += k;
    }
    CHECK(total == r.omega);
    for (int i = 0; i < D.nvars; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < D.columns.size(); ++j)
            s += static_cast<std::uint64_t>(r.witness_k[j]) *
                 D.columns[j][static_cast<std::size_t>(i)];
        CHECK(s >= 1);
        CHECK(s % (q - 1) == 0);
    }
}

void replay_mu(const DegreeMatrix& D, const MuResult& r) {
    REQUIRE(r.witness_coeffs.size() == D.columns.size());
    REQUIRE(r.witness_target.size() == static_cast<std::size_t>(D.nvars));
    Rational total = 0;
    for (const auto& a : r.witness_coeffs) {
        CHECK(a >= 0);
        total += a;
    }
    CHECK(total == r.mu);
    for (int i = 0; i < D.nvars; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < D.columns.size(); ++j)
            s += r.witness_coeffs[j] *
                 Rational(D.columns[j][static_cast<std::size_t>(i)]);
        CHECK(s == Rational(r.witness_target[static_cast<std::size_t>(i)]));
        CHECK(r.witness_target[static_cast<std::size_t>(i)] >= 1);
    }
}

} // namespace

TEST_CASE("newton polytope includes origin and all columns") {
    auto f19 = Field::make(19, 1);
    auto f = PolyMap::parse("vars:1; f1 = x1^7 + x1", f19);
    auto np = newton_polytope(f);
    CHECK(np.nvars == 1);
    REQUIRE(np.generators.size() == 3);
    CHECK(np.generators[0] == ExponentVec{0});
    CHECK(np.generators[1] == ExponentVec{7});
    CHECK(np.generators[2] == ExponentVec{1});
}

TEST_CASE("minimal combination cost for fixed targets") {
    DegreeMatrix zc{1, {{7}, {1}}};
    auto r = lp_min_combination(zc, {7});
    REQUIRE(r.has_value());
    CHECK(r->value == 1);
    CHECK(r->coeffs == std::vector<Rational>{1, 0});

    r = lp_min_combination(zc, {1});
    REQUIRE(r.has_value());
    CHECK(r->value == Rational(1, 7));
    CHECK(r->coeffs == std::vector<Rational>{Rational(1, 7), 0});

    DegreeMatrix diag{2, {{4, 0}, {0, 4}}};
    r = lp_min_combination(diag, {1, 1});
    REQUIRE(r.has_value());
    CHECK(r->value == Rational(1, 2));
    CHECK(r->coeffs == std::vector<Rational>{Rational(1, 4), Rational(1, 4)});

    DegreeMatrix fig{2, {{1, 0}, {3, 1}}};
    CHECK_FALSE(lp_min_combination(fig, {1, 2}).has_value());

    CHECK_THROWS_AS(lp_min_combination(fig, {1}), BadParamsError);
}

TEST_CASE("simplex drops redundant rows instead of stalling") {
    DegreeMatrix dep{2, {{1, 1}, {2, 2}}};
    auto r = lp_min_combination(dep, {2, 2});
    REQUIRE(r.has_value());
    CHECK(r->value == 1);
    CHECK(r->coeffs == std::vector<Rational>{0, 1});
}

TEST_CASE("dilation factor of fixed matrices") {
    auto r = mu_from_matrix({2, {{1, 0}, {3, 1}}});
    CHECK(r.mu == 1);
    CHECK(r.witness_target == ExponentVec{3, 1});
    CHECK(r.witness_coeffs == std::vector<Rational>{0, 1});

    r = mu_from_matrix({2, {{4, 0}, {0, 4}}});
    CHECK(r.mu == Rational(1, 2));
    CHECK(r.witness_target == ExponentVec{1, 1});
    CHECK(r.witness_coeffs == std::vector<Rational>{Rational(1, 4), Rational(1, 4)});

    r = mu_from_matrix({2, {{1, 0}, {0, 1}}});
    CHECK(r.mu == 2);
    CHECK(r.witness_target == ExponentVec{1, 1});
}

TEST_CASE("dilation factor straight from a parsed map") {
    auto f19 = Field::make(19, 1);
    auto f = PolyMap::parse("vars:1; f1 = x1^7 + x1", f19);
    auto r = mu(f);
    CHECK(r.mu == Rational(1, 7));
    CHECK(r.witness_target == ExponentVec{1});
    CHECK(r.witness_coeffs == std::vector<Rational>{Rational(1, 7), 0});
}

TEST_CASE("maps with unused variables have no dilation factor") {
    auto f3 = Field::make(3, 1);
    auto f = PolyMap::parse("vars:2; f1 = x1; f2 = x1", f3);
    CHECK_THROWS_AS(mu(f), UnusedVariablesError);
    CHECK_THROWS_AS(omega(f), UnusedVariablesError);
}

TEST_CASE("uncoverable coordinates are rejected") {
    CHECK_THROWS_AS(mu_from_matrix({2, {{1, 0}}}), UncoverableCoordinateError);
    CHECK_THROWS_AS(omega_from_matrix({2, {{1, 0}}}, 3), UncoverableCoordinateError);
}

TEST_CASE("multiplicity minimum of fixed matrices") {
    auto r = omega_from_matrix({1, {{7}, {1}}}, 19);
    CHECK(r.omega == 6);
    CHECK(r.witness_k == std::vector<std::uint32_t>{2, 4});

    r = omega_from_matrix({2, {{4, 0}, {0, 4}}}, 5);
    CHECK(r.omega == 2);
    CHECK(r.witness_k == std::vector<std::uint32_t>{1, 1});

    r = omega_from_matrix({2, {{1, 0}, {2, 1}}}, 3);
    CHECK(r.omega == 2);
    CHECK(r.witness_k == std::vector<std::uint32_t>{0, 2});

    r = omega_from_matrix({2, {{1, 0}, {2, 1}}}, 9);
    CHECK(r.omega == 8);
    CHECK(r.witness_k == std::vector<std::uint32_t>{0, 8});

    r = omega_from_matrix({2, {{1, 0}, {0, 1}}}, 3);
    CHECK(r.omega == 4);
    CHECK(r.witness_k == std::vector<std::uint32_t>{2, 2});
}

TEST_CASE("multiplicity search rejects oversized state spaces") {
    CHECK_THROWS_AS(omega_from_matrix({3, {{1, 1, 1}}}, 65537),
                    DomainTooLargeError);
}

TEST_CASE("covering number of fixed sets") {
    CHECK(gamma({{3, 1}}, 2) == 1);
    CHECK(gamma({{2, 0}, {0, 2}}, 2) == 2);
    CHECK(gamma({{1, 0}, {2, 1}}, 2) == 1);
    CHECK_THROWS_AS(gamma({{1, 0}}, 2), UncoverableCoordinateError);
    CHECK_THROWS_AS(gamma({}, 1), UncoverableCoordinateError);
}

TEST_CASE("inequality chain on fixed maps") {
    auto f19 = Field::make(19, 1);
    auto cc = chain_check(PolyMap::parse("vars:1; f1 = x1^7 + x1", f19));
    CHECK(cc.omega == 6);
    CHECK(cc.mu_times_qminus1 == Rational(18, 7));
    CHECK(cc.n_qminus1_over_d == Rational(18, 7));
    CHECK(cc.holds);
    CHECK_FALSE(cc.degree_below_nvars);

    auto f5 = Field::make(5, 1);
    cc = chain_check(PolyMap::parse("vars:2; f1 = x1^4; f2 = x2^4", f5));
    CHECK(cc.omega == 2);
    CHECK(cc.mu_times_qminus1 == 2);
    CHECK(cc.n_qminus1_over_d == 2);
    CHECK(cc.holds);
    CHECK_FALSE(cc.degree_below_nvars);

    auto f3 = Field::make(3, 1);
    cc = chain_check(PolyMap::parse("vars:2; f1 = x1; f2 = x2", f3));
    CHECK(cc.omega == 4);
    CHECK(cc.mu_times_qminus1 == 4);
    CHECK(cc.n_qminus1_over_d == 4);
    CHECK(cc.holds);
    CHECK(cc.degree_below_nvars);
}

TEST_CASE("multiplicity search agrees with exhaustive minimization") {
    std::mt19937_64 rng(0x0d11a710);
    const std::uint64_t qs[] = {2, 3, 4, 5, 7};
    for (int trial = 0; trial < 100; ++trial) {
        auto D = random_covering_matrix(rng, 3, 4, 4);
        std::uint64_t q = qs[trial % 5];
        auto r = omega_from_matrix(D, q);
        auto expect = omega_oracle(D, q);
        REQUIRE(expect.has_value());
        CHECK(r.omega == *expect);
        CHECK(r.omega <= static_cast<std::uint64_t>(D.nvars) * (q - 1));
        replay_omega(D, q, r);
    }
}

TEST_CASE("multiplicity witnesses are reproducible") {
    std::mt19937_64 rng(0x3717);
    auto D = random_covering_matrix(rng, 3, 4, 4);
    auto a = omega_from_matrix(D, 5);
    auto b = omega_from_matrix(D, 5);
    CHECK(a.witness_k == b.witness_k);
}

TEST_CASE("dilation factor agrees with basic-solution search") {
    std::mt19937_64 rng(0x5e4d0b0c);
    for (int trial = 0; trial < 50; ++trial) {
        auto D = random_covering_matrix(rng, 2, 3, 3);
        auto r = mu_from_matrix(D);
        auto expect = mu_oracle(D);
        REQUIRE(expect.has_value());
        CHECK(r.mu == *expect);
        CHECK(r.mu <= D.nvars);
        replay_mu(D, r);
    }
}

TEST_CASE("covering number bound against per-column supports") {
    std::mt19937_64 rng(0x9a33a1);
    for (int trial = 0; trial < 500; ++trial) {
        auto D = random_covering_matrix(rng, 6, 6, 2);
        int g = gamma(D.columns, D.nvars);
        CHECK(g >= 1);
        CHECK(g <= D.nvars);
        for (const auto& c : D.columns)
            CHECK(g - 1 <= D.nvars - nonzero_count(c));
    }
}

TEST_CASE("over a two-element field the multiplicity minimum is the covering number") {
    std::mt19937_64 rng(0xc0e12);
    for (int trial = 0; trial < 50; ++trial) {
        auto D = random_covering_matrix(rng, 4, 4, 3);
        auto r = omega_from_matrix(D, 2);
        CHECK(r.omega == static_cast<std::uint64_t>(gamma(D.columns, D.nvars)));
        replay_omega(D, 2, r);
    }
}
