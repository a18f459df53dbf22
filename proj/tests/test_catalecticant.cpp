#include <doctest.h>

#include <random>

#include "chowfactor/catalecticant.hpp"

using namespace chowfactor;

namespace {

BinaryForm monomial_x8() {
    std::vector<BigRat> c(9, BigRat(0));
    c[0] = 1;
    return BinaryForm(8, c);
}

std::vector<std::pair<BigInt, BigInt>> random_forms(std::mt19937& rng, int count) {
    std::uniform_int_distribution<int> coef(-50, 50);
    std::vector<std::pair<BigInt, BigInt>> forms;
    while (static_cast<int>(forms.size()) < count) {
        const int a = coef(rng), b = coef(rng);
        if (a == 0 && b == 0) continue;
        forms.emplace_back(a, b);
    }
    return forms;
}

}  // namespace

TEST_SUITE_BEGIN("catalecticant");

TEST_CASE("matrix layout is Hankel") {
    const BinaryForm f(8, {BigRat(10), BigRat(11), BigRat(12), BigRat(13), BigRat(14), BigRat(15),
                           BigRat(16), BigRat(17), BigRat(18)});
    const RatMatrix m = catalecticant_matrix(f, 4);
    REQUIRE(m.size() == 5);
    for (int r = 0; r <= 4; ++r)
        for (int s = 0; s <= 4; ++s) CHECK(m[r][s] == BigRat(10 + r + s));
    CHECK_THROWS_AS(catalecticant_matrix(f, 5), std::domain_error);
}

TEST_CASE("matrix of pure powers") {
    const RatMatrix m = catalecticant_matrix(monomial_x8(), 4);
    for (int r = 0; r <= 4; ++r)
        for (int s = 0; s <= 4; ++s) CHECK(m[r][s] == ((r == 0 && s == 0) ? BigRat(1) : BigRat(0)));

    // x^8 + y^8: ones in the two extreme corners only
    std::vector<BigRat> c(9, BigRat(0));
    c[0] = 1;
    c[8] = 1;
    const RatMatrix m2 = catalecticant_matrix(BinaryForm(8, c), 4);
    for (int r = 0; r <= 4; ++r)
        for (int s = 0; s <= 4; ++s) {
            const bool corner = (r == 0 && s == 0) || (r == 4 && s == 4);
            CHECK(m2[r][s] == (corner ? BigRat(1) : BigRat(0)));
        }
}

TEST_CASE("determinant basics") {
    CHECK(catalecticant_det(monomial_x8()) == 0);
    std::vector<BigRat> odd(8, BigRat(1));
    CHECK_THROWS_AS(catalecticant_det(BinaryForm(7, odd)), std::domain_error);
    CHECK_THROWS_AS(BinaryForm(8, odd), std::domain_error);

    // 2x2 case: f = x^2 + y^2 -> det of [[1,0],[0,1]]
    BinaryForm quad(2, {BigRat(1), BigRat(0), BigRat(1)});
    CHECK(catalecticant_det(quad) == 1);
    // rational coefficients stay exact
    BinaryForm ratc(2, {BigRat(1, 2), BigRat(1, 3), BigRat(1, 4)});
    CHECK(catalecticant_det(ratc) == BigRat(1, 2) * BigRat(1, 4) - BigRat(1, 3) * BigRat(1, 3));
}

TEST_CASE("power_sum_form") {
    const BinaryForm a = power_sum_form(2, {{1, 0}});
    CHECK(a.coeffs == std::vector<BigRat>{1, 0, 0});
    const BinaryForm b = power_sum_form(2, {{1, 1}});
    CHECK(b.coeffs == std::vector<BigRat>{1, 1, 1});
    const BinaryForm c = power_sum_form(8, {{1, 1}, {1, -1}});
    for (int i = 0; i <= 8; ++i) CHECK(c.coeffs[static_cast<std::size_t>(i)] == (i % 2 ? 0 : 2));
}

TEST_CASE("four 8th powers always vanish") {
    std::mt19937 rng(20260810);
    for (int trial = 0; trial < 100; ++trial) {
        const BinaryForm f = power_sum_form(8, random_forms(rng, 4));
        CHECK(catalecticant_det(f) == 0);
    }
}

TEST_CASE("five generic 8th powers do not vanish") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        // a zero here is measure-zero; retry a few times before failing
        bool nonzero = false;
        for (int attempt = 0; attempt < 5 && !nonzero; ++attempt)
            nonzero = catalecticant_det(power_sum_form(8, random_forms(rng, 5))) != 0;
        CHECK(nonzero);
    }
}

TEST_CASE("rank is bounded by the number of summands") {
    std::mt19937 rng(1812);
    for (int count = 1; count <= 6; ++count) {
        for (int trial = 0; trial < 10; ++trial) {
            const BinaryForm f = power_sum_form(8, random_forms(rng, count));
            CHECK(rational_rank(catalecticant_matrix(f, 4)) <= count);
        }
    }
    RatMatrix zero(3, std::vector<BigRat>(3, BigRat(0)));
    CHECK(rational_rank(zero) == 0);
}

TEST_CASE("determinant is homogeneous of degree five in the coefficients") {
    std::mt19937 rng(55);
    std::uniform_int_distribution<int> coef(-20, 20);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<BigRat> c(9);
        for (auto& v : c) v = BigRat(coef(rng), 1 + std::abs(coef(rng)));
        const BinaryForm f(8, c);
        const BigRat base = catalecticant_det(f);
        const BigRat t(7, 3);
        std::vector<BigRat> scaled = c;
        for (auto& v : scaled) v *= t;
        BigRat expected = base;
        for (int i = 0; i < 5; ++i) expected *= t;
        CHECK(catalecticant_det(BinaryForm(8, scaled)) == expected);
    }
}

TEST_SUITE_END();
