#include "chowfactor/factorization.hpp"

#include <sstream>

namespace chowfactor {

std::shared_ptr<const DegreeTable> TableCache::get(int d, int n, const ResourceLimits& limits) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = tables_.find({d, n});
        if (it != tables_.end()) return it->second;
    }
    auto table = std::make_shared<const DegreeTable>(solve_chow_degrees(d, n, limits));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = tables_.emplace(std::make_pair(d, n), std::move(table));
    return it->second;
}

void TableCache::put(std::shared_ptr<const DegreeTable> table) {
    if (!table) return;
    std::lock_guard<std::mutex> lock(mutex_);
    tables_.emplace(std::make_pair(table->d, table->n), std::move(table));
}

TableCache& global_table_cache() {
    static TableCache cache;
    return cache;
}

FactorReport factor_report(const Partition& mu, const DegreeTable& table) {
    if (mu.weight() != table.d)
        throw std::domain_error("factor_report: partition weight does not match table");
    if (mu.weight() < 2) throw std::domain_error("factor_report requires weight >= 2");

    FactorReport report{mu, table.n, {}, 0};
    BigInt checksum = 0;
    for (const DegreeRow& row : table.rows) {
        if (row.chow_degree == 0) continue;
        if (!refines(row.lambda, mu)) continue;
        BigInt mult = refinement_count(row.lambda, mu);
        if (mult == 0) continue;
        checksum += row.chow_degree * mult;
        report.factors.push_back(Factor{row.lambda, row.chow_degree, std::move(mult)});
    }
    report.total_degree = table.row(mu).disc_degree;
    if (checksum != report.total_degree) {
        std::ostringstream msg;
        msg << "factor degrees sum to " << checksum << " but the discriminant degree is "
            << report.total_degree;
        throw consistency_error(msg.str());
    }
    return report;
}

FactorReport factor_report(const Partition& mu, int n, const ResourceLimits& limits) {
    auto table = global_table_cache().get(mu.weight(), n, limits);
    return factor_report(mu, *table);
}

FactorReport hyperdet_report(int d, int n, const ResourceLimits& limits) {
    if (d < 2 || n < 2) throw std::domain_error("hyperdet_report requires d >= 2 and n >= 2");
    FactorReport report = factor_report(Partition::ones(d), n, limits);
    for (const Factor& f : report.factors) {
        if (f.multiplicity != multinomial(d, f.lambda))
            throw consistency_error(
                "hyperdeterminant multiplicity differs from the multinomial coefficient");
    }
    return report;
}

}  // namespace chowfactor
