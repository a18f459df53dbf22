#include "chowfactor/symfunc.hpp"

#include <algorithm>

namespace chowfactor {

SparsePoly monomial_sym(const Partition& mu, int numvars) {
    if (numvars < mu.parts_count())
        throw std::domain_error("monomial_sym needs at least parts_count(mu) variables");
    std::vector<int> exps(static_cast<std::size_t>(numvars), 0);
    std::copy(mu.parts().begin(), mu.parts().end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    SparsePoly out(numvars);
    do {
        out.add_term(Monomial(exps), 1);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

SparsePoly power_sum(const Partition& lambda, int numvars) {
    if (numvars < 1) throw std::domain_error("power_sum needs at least one variable");
    SparsePoly out = SparsePoly::constant(numvars, 1);
    for (int part : lambda.parts()) {
        SparsePoly ps(numvars);
        for (int v = 0; v < numvars; ++v) {
            std::vector<int> e(static_cast<std::size_t>(numvars), 0);
            e[static_cast<std::size_t>(v)] = part;
            ps.add_term(Monomial(e), 1);
        }
        out = out * ps;
    }
    return out;
}

RefinementMatrix refinement_matrix_symfunc(int d) {
    if (d < 1) throw std::domain_error("refinement matrix requires d >= 1");
    RefinementMatrix m;
    m.order = enumerate_partitions(d);
    const std::size_t k = m.order.size();
    m.entries.assign(k, std::vector<BigInt>(k));
    for (std::size_t j = 0; j < k; ++j) {
        SparsePoly p = power_sum(m.order[j], d);
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<int> e(static_cast<std::size_t>(d), 0);
            std::copy(m.order[i].parts().begin(), m.order[i].parts().end(), e.begin());
            m.entries[i][j] = coefficient(p, Monomial(e));
        }
    }
    return m;
}

bool degree_identity_check(int d, const PartitionMap<BigInt>& disc_degrees,
                           const PartitionMap<BigInt>& chow_degrees) {
    if (d < 1) throw std::domain_error("degree identity requires d >= 1");
    const std::vector<Partition> order = enumerate_partitions(d);
    auto lookup = [&](const PartitionMap<BigInt>& map, const Partition& p) -> const BigInt& {
        auto it = map.find(p);
        if (it == map.end()) throw std::domain_error("degree map is missing a partition of d");
        return it->second;
    };

    std::vector<SparsePoly> msym;
    msym.reserve(order.size());
    for (const Partition& mu : order) msym.push_back(monomial_sym(mu, d));

    SparsePoly lhs(d);
    for (std::size_t j = 0; j < order.size(); ++j) {
        SparsePoly term = msym[j];
        term *= lookup(disc_degrees, order[j]);
        lhs += term;
    }

    const RefinementMatrix m = refinement_matrix_symfunc(d);
    SparsePoly rhs(d);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const BigInt& deg = lookup(chow_degrees, order[i]);
        if (deg == 0) continue;
        for (std::size_t j = 0; j < order.size(); ++j) {
            if (m.entries[i][j] == 0) continue;
            SparsePoly term = msym[j];
            term *= m.entries[i][j] * deg;
            rhs += term;
        }
    }
    return lhs == rhs;
}

}  // namespace chowfactor
