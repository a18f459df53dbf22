#include "chowfactor/chowdeg.hpp"

#include <algorithm>
#include <sstream>

namespace chowfactor {

bool is_hypersurface(const Partition& lambda, int n) {
    if (n < 2) throw std::domain_error("is_hypersurface requires n >= 2");
    const int d = lambda.weight();
    if (d < 2) throw std::domain_error("is_hypersurface requires weight >= 2");
    if (d == 2) return lambda.parts_count() == 1;
    if (n == 2) return lambda.multiplicity(1) == 0;
    return !(lambda.parts_count() == 2 && lambda.multiplicity(1) == 1);
}

const DegreeRow& DegreeTable::row(const Partition& lambda) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), lambda,
                               [](const DegreeRow& r, const Partition& p) {
                                   return canonical_less(r.lambda, p);
                               });
    if (it == rows.end() || !(it->lambda == lambda))
        throw std::domain_error("partition not present in degree table");
    return *it;
}

DegreeTable solve_chow_degrees(int d, int n, const ResourceLimits& limits) {
    if (d < 2 || n < 2) throw std::domain_error("solve_chow_degrees requires d >= 2 and n >= 2");

    const std::vector<Partition> order = enumerate_partitions(d);
    const std::size_t k = order.size();
    const RefinementMatrix m = refinement_matrix_bruteforce(d);

    // The system is only forward-solvable because every diagonal entry
    // (prod of part-multiplicity factorials) is at least 1.
    for (std::size_t i = 0; i < k; ++i)
        if (m.entries[i][i] < 1)
            throw consistency_error("refinement matrix diagonal entry vanished");

    std::vector<BigInt> disc(k);
    for (std::size_t j = 0; j < k; ++j) disc[j] = mu_discriminant_degree(order[j], n, limits);

    std::vector<BigRat> solved(k);
    for (std::size_t j = 0; j < k; ++j) {
        BigRat acc = BigRat(disc[j]);
        for (std::size_t i = 0; i < j; ++i) {
            if (m.entries[i][j] != 0) acc -= solved[i] * BigRat(m.entries[i][j]);
        }
        solved[j] = acc / BigRat(m.entries[j][j]);
    }

    DegreeTable table{d, n, {}};
    table.rows.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        if (boost::multiprecision::denominator(solved[j]) != 1 || solved[j] < 0) {
            std::ostringstream msg;
            msg << "chow degree for a partition of " << d << " solved to " << solved[j]
                << ", which is not a non-negative integer";
            throw consistency_error(msg.str());
        }
        const BigInt value = boost::multiprecision::numerator(solved[j]);
        const bool flag = is_hypersurface(order[j], n);
        if ((value > 0) != flag) {
            std::ostringstream msg;
            msg << "solver and hypersurface classifier disagree at d=" << d << ", n=" << n;
            throw consistency_error(msg.str());
        }
        table.rows.push_back(DegreeRow{order[j], disc[j], value, flag});
    }
    return table;
}

BigInt binary_chow_degree(const Partition& lambda) {
    if (lambda.weight() < 1) throw std::domain_error("binary_chow_degree requires a partition");
    if (lambda.multiplicity(1) != 0)
        throw std::domain_error(
            "binary_chow_degree: a part equal to 1 gives no dual hypersurface over two variables");
    const auto prof = lambda.profile();
    const int m = lambda.parts_count();
    BigInt r = factorial(m) * (m + 1);
    for (const auto& [value, mult] : prof) {
        r /= factorial(mult);
        r *= bigint_pow(value - 1, mult);
    }
    return r;
}

}  // namespace chowfactor
