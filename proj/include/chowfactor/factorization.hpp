#pragma once

#include <memory>
#include <mutex>
#include <map>

#include "chowfactor/chowdeg.hpp"

namespace chowfactor {

struct Factor {
    Partition lambda;
    BigInt degree;
    BigInt multiplicity;

    bool operator==(const Factor&) const = default;
};

/// Factorization of the symmetrized mu-discriminant into dual-of-Chow
/// hypersurface factors: every coarsening lambda of mu whose dual is a
/// hypersurface appears with its degree and its refinement-count
/// multiplicity. total_degree equals both the sum of degree*multiplicity
/// and the mu-discriminant degree.
struct FactorReport {
    Partition mu;
    int n = 0;
    std::vector<Factor> factors;
    BigInt total_degree;

    bool operator==(const FactorReport&) const = default;
};

/// Memoizes degree tables per (d, n); thread-safe with single
/// initialization per key.
class TableCache {
public:
    std::shared_ptr<const DegreeTable> get(int d, int n, const ResourceLimits& limits = {});
    void put(std::shared_ptr<const DegreeTable> table);

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, std::shared_ptr<const DegreeTable>> tables_;
};

/// Process-wide table cache used by the convenience overloads.
TableCache& global_table_cache();

/// Builds the factor report for mu against a previously solved table
/// (table.d must equal weight(mu)). Throws consistency_error if the
/// degree checksum fails.
FactorReport factor_report(const Partition& mu, const DegreeTable& table);

FactorReport factor_report(const Partition& mu, int n, const ResourceLimits& limits = {});

/// Report for the d-fold hyperdeterminant of a symmetric tensor:
/// factor_report((1^d), n), with the additional assertion that every
/// multiplicity equals the multinomial coefficient of its factor.
FactorReport hyperdet_report(int d, int n, const ResourceLimits& limits = {});

}  // namespace chowfactor
