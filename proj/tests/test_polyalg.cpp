#include <doctest.h>

#include <random>

#include "chowfactor/polyalg.hpp"
#include "oracles.hpp"

using namespace chowfactor;

namespace {

Monomial M(std::vector<int> e) { return Monomial(std::move(e)); }

TruncatedSeries series_from(const std::vector<std::pair<std::vector<int>, long long>>& terms,
                            std::vector<int> caps) {
    TruncatedSeries s(std::move(caps));
    for (const auto& [e, c] : terms) s.add_term(M(e), c);
    return s;
}

oracle::DenseTerms dense(const SparsePoly& p) {
    oracle::DenseTerms out;
    for (const auto& [m, c] : p.terms()) out.emplace(m.exponents(), c);
    return out;
}

SparsePoly random_poly(std::mt19937& rng, int varcount, int max_exp, int nterms) {
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coef(-9, 9);
    SparsePoly p(varcount);
    for (int i = 0; i < nterms; ++i) {
        std::vector<int> e(static_cast<std::size_t>(varcount));
        for (auto& x : e) x = exp(rng);
        p.add_term(M(e), coef(rng));
    }
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("polyalg");

TEST_CASE("sparse polynomial basics") {
    SparsePoly p(2);
    p.add_term(M({1, 0}), 3);
    p.add_term(M({1, 0}), -3);
    CHECK(p.is_zero());  // cancelled terms are not stored
    p.add_term(M({0, 0}), 1);
    p.add_term(M({2, 1}), 7);
    CHECK(p.term_count() == 2);
    CHECK(coefficient(p, M({2, 1})) == 7);
    CHECK(coefficient(p, M({1, 1})) == 0);
    CHECK_THROWS_AS(p.add_term(M({1}), 1), std::domain_error);
    CHECK_THROWS_AS(coefficient(p, M({1, 2, 3})), std::domain_error);
}

TEST_CASE("coefficient on an expanded cube") {
    // (x1 + x2)^3
    SparsePoly x(2);
    x.add_term(M({1, 0}), 1);
    x.add_term(M({0, 1}), 1);
    SparsePoly cube = x * x * x;
    CHECK(coefficient(cube, M({2, 1})) == 3);
    CHECK(coefficient(cube, M({3, 0})) == 1);
    CHECK(coefficient(cube, M({4, 0})) == 0);

    SparsePoly two_z(1);
    two_z.add_term(M({0}), 1);
    two_z.add_term(M({1}), 2);
    CHECK(coefficient(two_z, M({1})) == 2);
    CHECK(coefficient(two_z, M({2})) == 0);
}

TEST_CASE("mul_truncated examples") {
    // (1 + z)^2 with cap 1 -> 1 + 2z
    auto one_plus_z = series_from({{{0}, 1}, {{1}, 1}}, {1});
    auto sq = mul_truncated(one_plus_z, one_plus_z);
    CHECK(sq == series_from({{{0}, 1}, {{1}, 2}}, {1}));

    // multiplication by 1 is the identity
    auto p = series_from({{{1, 0}, 5}, {{0, 1}, -2}, {{1, 1}, 3}}, {1, 1});
    auto one = series_from({{{0, 0}, 1}}, {1, 1});
    CHECK(mul_truncated(one, p) == p);

    // (z1 + z2)^2 with caps (1,1) -> 2 z1 z2
    auto z12 = series_from({{{1, 0}, 1}, {{0, 1}, 1}}, {1, 1});
    CHECK(mul_truncated(z12, z12) == series_from({{{1, 1}, 2}}, {1, 1}));

    auto other_caps = series_from({{{0, 0}, 1}}, {2, 1});
    CHECK_THROWS_AS(mul_truncated(p, other_caps), std::domain_error);
}

TEST_CASE("mul_truncated equals full product with over-cap terms discarded") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        const int varcount = 1 + trial % 3;
        std::vector<int> caps(static_cast<std::size_t>(varcount));
        std::uniform_int_distribution<int> capd(0, 3);
        for (auto& c : caps) c = capd(rng);
        SparsePoly a = random_poly(rng, varcount, 3, 6);
        SparsePoly b = random_poly(rng, varcount, 3, 6);

        auto product = mul_truncated(TruncatedSeries(a, caps), TruncatedSeries(b, caps));

        // oracle: truncate the operands, full-multiply, discard over-cap terms
        auto drop_over_cap = [&](const oracle::DenseTerms& terms) {
            oracle::DenseTerms kept;
            for (const auto& [e, c] : terms) {
                bool over = false;
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (e[i] > caps[i]) over = true;
                if (!over) kept.emplace(e, c);
            }
            return kept;
        };
        oracle::DenseTerms expected =
            drop_over_cap(oracle::full_product(drop_over_cap(dense(a)), drop_over_cap(dense(b))));
        CHECK(dense(product.poly()) == expected);
    }
}

TEST_CASE("inverse_square examples") {
    // 1/(1 - 7z)^2 truncated at z^1 -> 1 + 14z
    auto b = series_from({{{0}, 1}, {{1}, -7}}, {1});
    CHECK(inverse_square(b) == series_from({{{0}, 1}, {{1}, 14}}, {1}));

    // constant 1 inverts to itself
    auto one = series_from({{{0, 0}, 1}}, {2, 2});
    CHECK(inverse_square(one) == one);

    // B = 1 - 5 z1 - z2 - 7 z1 z2, caps (1,1): coefficient of z1 z2 is 44
    auto b2 = series_from({{{0, 0}, 1}, {{1, 0}, -5}, {{0, 1}, -1}, {{1, 1}, -7}}, {1, 1});
    CHECK(coefficient(inverse_square(b2).poly(), M({1, 1})) == 44);

    auto bad = series_from({{{0}, 2}, {{1}, 1}}, {1});
    CHECK_THROWS_AS(inverse_square(bad), std::domain_error);
    auto zero_const = series_from({{{1}, 1}}, {1});
    CHECK_THROWS_AS(inverse_square(zero_const), std::domain_error);
}

TEST_CASE("inverse_square times B^2 is 1") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 25; ++trial) {
        const int varcount = 1 + trial % 4;
        std::uniform_int_distribution<int> capd(1, 4);
        std::vector<int> caps(static_cast<std::size_t>(varcount));
        for (auto& c : caps) c = capd(rng);

        SparsePoly raw = random_poly(rng, varcount, 2, 5);
        raw.add_term(M(std::vector<int>(static_cast<std::size_t>(varcount), 0)),
                     1 - coefficient(raw, M(std::vector<int>(static_cast<std::size_t>(varcount), 0))));
        TruncatedSeries b(raw, caps);

        auto inv = inverse_square(b);
        auto product = mul_truncated(inv, mul_truncated(b, b));
        TruncatedSeries one(caps);
        one.add_term(M(std::vector<int>(static_cast<std::size_t>(varcount), 0)), 1);
        CHECK(product == one);
    }
}

TEST_CASE("series respects caps") {
    TruncatedSeries s({1, 2});
    s.add_term(M({2, 0}), 5);  // silently dropped
    CHECK(s.poly().is_zero());
    s.add_term(M({1, 2}), 5);
    CHECK(s.poly().term_count() == 1);
    CHECK_THROWS_AS(TruncatedSeries({-1}), std::domain_error);
    SparsePoly p(1);
    p.add_term(M({4}), 1);
    p.add_term(M({1}), 2);
    TruncatedSeries t(p, {2});
    CHECK(t.poly().term_count() == 1);  // z^4 dropped by construction
}

TEST_SUITE_END();
