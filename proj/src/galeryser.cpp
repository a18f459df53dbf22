#include "chowfactor/galeryser.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace chowfactor {

namespace {

// Remaining positive row sums, grouped: sorted (value, count) pairs.
using SumProfile = std::vector<std::pair<int, int>>;

}  // namespace

BigInt gale_ryser_count(const std::vector<int>& row_sums, const Partition& col_sums) {
    long long total = 0;
    for (int r : row_sums) {
        if (r < 0) throw std::domain_error("row sums must be non-negative");
        total += r;
    }
    if (total != col_sums.weight())
        throw std::domain_error("row sums and column sums have different totals");

    std::map<int, int> grouped;
    for (int r : row_sums)
        if (r > 0) ++grouped[r];
    SumProfile initial(grouped.begin(), grouped.end());

    const std::vector<int>& cols = col_sums.parts();
    std::map<std::pair<std::size_t, SumProfile>, BigInt> memo;

    // One column at a time: distribute the column's `need` ones over the
    // groups of rows with equal remaining sum. Placements within a group are
    // interchangeable, contributing binomial(count, picks).
    std::function<BigInt(std::size_t, const SumProfile&)> solve =
        [&](std::size_t ci, const SumProfile& prof) -> BigInt {
        if (ci == cols.size()) return prof.empty() ? 1 : 0;
        const auto key = std::make_pair(ci, prof);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        const int need = cols[ci];
        BigInt ways = 0;
        std::vector<int> picks(prof.size(), 0);
        std::function<void(std::size_t, int, BigInt)> assign = [&](std::size_t gi, int left,
                                                                   BigInt mult) {
            if (gi == prof.size()) {
                if (left != 0) return;
                std::map<int, int> next;
                for (std::size_t g = 0; g < prof.size(); ++g) {
                    const auto [value, count] = prof[g];
                    if (count - picks[g] > 0) next[value] += count - picks[g];
                    if (picks[g] > 0 && value - 1 > 0) next[value - 1] += picks[g];
                }
                ways += mult * solve(ci + 1, SumProfile(next.begin(), next.end()));
                return;
            }
            const auto [value, count] = prof[gi];
            (void)value;
            for (int k = 0; k <= std::min(count, left); ++k) {
                picks[gi] = k;
                assign(gi + 1, left - k, k == 0 ? mult : mult * binomial(count, k));
            }
            picks[gi] = 0;
        };
        assign(0, need, 1);
        memo.emplace(key, ways);
        return ways;
    };

    if (cols.empty()) return total == 0 ? 1 : 0;
    return solve(0, initial);
}

BigInt binary_hyperdet_degree_gr(int d) {
    if (d < 2) throw std::domain_error("binary_hyperdet_degree_gr requires d >= 2");
    const std::vector<int> unit_rows(static_cast<std::size_t>(d), 1);
    BigInt total = 0;
    for (const Partition& lambda : enumerate_partitions(d)) {
        const auto prof = lambda.profile();
        if (prof.count(1)) continue;  // only partitions with every part >= 2 contribute
        const int m = lambda.parts_count();
        // (m+1)! / prod m_i! is an integer: (m+1) * multinomial(m; m_2,...).
        BigInt term = factorial(m + 1);
        for (const auto& [value, mult] : prof) {
            term /= factorial(mult);
            term *= bigint_pow(value - 1, mult);
        }
        term *= gale_ryser_count(unit_rows, lambda);
        total += term;
    }
    return total;
}

}  // namespace chowfactor
