#include <doctest.h>

#include <algorithm>
#include <set>

#include "chowfactor/partition.hpp"
#include "oracles.hpp"

using namespace chowfactor;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_SUITE_BEGIN("partition");

TEST_CASE("constructor validates shape") {
    CHECK_THROWS_AS(P({2, 3}), std::domain_error);
    CHECK_THROWS_AS(P({3, 0}), std::domain_error);
    CHECK_THROWS_AS(P({-1}), std::domain_error);
    CHECK(P({4, 2, 2}).weight() == 8);
    CHECK(P({4, 2, 2}).parts_count() == 3);
    CHECK(P({4, 2, 2}).multiplicity(2) == 2);
    CHECK(P({4, 2, 2}).multiplicity(3) == 0);
    const auto prof = P({3, 3, 2, 1}).profile();
    CHECK(prof.at(3) == 2);
    CHECK(prof.at(2) == 1);
    CHECK(prof.at(1) == 1);
}

TEST_CASE("profile identities") {
    for (int d = 1; d <= 8; ++d) {
        for (const Partition& p : enumerate_partitions(d)) {
            int weight = 0, count = 0;
            for (const auto& [value, mult] : p.profile()) {
                weight += value * mult;
                count += mult;
            }
            CHECK(weight == p.weight());
            CHECK(count == p.parts_count());
        }
    }
}

TEST_CASE("enumerate_partitions small cases") {
    CHECK(enumerate_partitions(1) == std::vector<Partition>{P({1})});
    CHECK(enumerate_partitions(3) == std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})});
    CHECK_THROWS_AS(enumerate_partitions(0), std::domain_error);
    CHECK_THROWS_AS(enumerate_partitions(-4), std::domain_error);
}

TEST_CASE("enumerate_partitions counts match the recurrence") {
    CHECK(enumerate_partitions(8).size() == 22);
    for (int d = 1; d <= 14; ++d)
        CHECK(enumerate_partitions(d).size() ==
              static_cast<std::size_t>(oracle::partition_count(d)));
}

TEST_CASE("enumeration order is canonical and duplicate-free") {
    for (int d = 1; d <= 10; ++d) {
        const auto ps = enumerate_partitions(d);
        std::set<std::vector<int>> seen;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            CHECK(ps[i].weight() == d);
            CHECK(seen.insert(ps[i].parts()).second);
            if (i > 0) {
                CHECK(canonical_less(ps[i - 1], ps[i]));
                CHECK_FALSE(canonical_less(ps[i], ps[i - 1]));
            }
        }
    }
}

TEST_CASE("refines examples") {
    CHECK(refines(P({3}), P({1, 1, 1})));
    CHECK(refines(P({4, 4}), P({4, 2, 2})));
    CHECK_FALSE(refines(P({2, 2}), P({3, 1})));
    CHECK_THROWS_AS(refines(P({2}), P({3})), std::domain_error);
}

TEST_CASE("refinement_count examples") {
    CHECK(refinement_count(P({2, 1}), P({1, 1, 1})) == 3);
    CHECK(refinement_count(P({1, 1, 1}), P({1, 1, 1})) == 6);
    CHECK(refinement_count(P({4, 4}), P({4, 2, 2})) == 2);
    CHECK(refinement_count(P({3, 2}), P({2, 1, 1, 1})) == 4);
    CHECK_THROWS_AS(refinement_count(P({2}), P({3})), std::domain_error);
}

TEST_CASE("refinement_count equals exhaustive assignment enumeration") {
    for (int d = 2; d <= 7; ++d) {
        const auto ps = enumerate_partitions(d);
        for (const Partition& coarse : ps)
            for (const Partition& fine : ps)
                CHECK(refinement_count(coarse, fine) ==
                      oracle::refinement_count_exhaustive(coarse, fine));
    }
}

TEST_CASE("refinement_count positive iff refines, d <= 9") {
    for (int d = 1; d <= 9; ++d) {
        const auto ps = enumerate_partitions(d);
        for (const Partition& coarse : ps)
            for (const Partition& fine : ps)
                CHECK((refinement_count(coarse, fine) > 0) == refines(coarse, fine));
    }
}

TEST_CASE("refinement is transitive, d <= 8") {
    for (int d = 2; d <= 8; ++d) {
        const auto ps = enumerate_partitions(d);
        const std::size_t k = ps.size();
        std::vector<std::vector<bool>> rel(k, std::vector<bool>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) rel[i][j] = refines(ps[i], ps[j]);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                if (!rel[a][b]) continue;
                for (std::size_t c = 0; c < k; ++c)
                    if (rel[b][c]) CHECK(rel[a][c]);
            }
    }
}

TEST_CASE("multinomial") {
    CHECK(multinomial(3, P({1, 1, 1})) == 6);
    CHECK(multinomial(5, P({5})) == 1);
    CHECK(multinomial(8, P({4, 2, 2})) == 420);
    CHECK_THROWS_AS(multinomial(7, P({4, 2, 2})), std::domain_error);
}

TEST_CASE("chow_dimension") {
    CHECK(chow_dimension(P({2, 2, 2, 2}), 2) == 4);
    CHECK(chow_dimension(P({3}), 3) == 2);
    CHECK(chow_dimension(P({1, 1}), 3) == 4);
    CHECK(chow_dimension(P({5}), 1) == 0);
    CHECK_THROWS_AS(chow_dimension(P({2}), 0), std::domain_error);
}

TEST_CASE("refinement matrix d=3 and d=1") {
    const RefinementMatrix m = refinement_matrix_bruteforce(3);
    REQUIRE(m.order == std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})});
    CHECK(m.entries == std::vector<std::vector<BigInt>>{{1, 1, 1}, {0, 1, 3}, {0, 0, 6}});

    const RefinementMatrix one = refinement_matrix_bruteforce(1);
    CHECK(one.order.size() == 1);
    CHECK(one.entries == std::vector<std::vector<BigInt>>{{1}});
}

TEST_CASE("refinement matrix multinomial column at d=8") {
    const RefinementMatrix m = refinement_matrix_bruteforce(8);
    CHECK(m.at(P({4, 2, 2}), Partition::ones(8)) == 420);
}

TEST_CASE("refinement matrix structural properties, d <= 9") {
    for (int d = 1; d <= 9; ++d) {
        const RefinementMatrix m = refinement_matrix_bruteforce(d);
        const std::size_t k = m.order.size();
        for (std::size_t i = 0; i < k; ++i) {
            const Partition& lam = m.order[i];
            // diagonal: product of part-multiplicity factorials
            BigInt diag = 1;
            for (const auto& [value, mult] : lam.profile()) diag *= factorial(mult);
            CHECK(m.entries[i][i] == diag);
            for (std::size_t j = 0; j < k; ++j) {
                const Partition& mu = m.order[j];
                if (lam.parts_count() > mu.parts_count()) CHECK(m.entries[i][j] == 0);
                if (lam.parts_count() == mu.parts_count() && !(lam == mu))
                    CHECK(m.entries[i][j] == 0);
                if (lam.parts_count() == 1) CHECK(m.entries[i][j] == 1);
            }
            CHECK(m.entries[i][k - 1] == multinomial(d, lam));  // last column is (1^d)
        }
    }
}

TEST_SUITE_END();
