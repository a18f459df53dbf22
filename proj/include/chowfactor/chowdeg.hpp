#pragma once

#include <vector>

#include "chowfactor/discdeg.hpp"
#include "chowfactor/partition.hpp"

namespace chowfactor {

/// Whether the dual of the variety of forms splitting with exponent pattern
/// lambda (weight d >= 2) over n >= 2 variables is a hypersurface.
/// For d >= 3 the only exceptions are: n == 2 with some part equal to 1,
/// and n > 2 with lambda == (d-1, 1). For d == 2 only lambda == (2) gives a
/// hypersurface; the d >= 3 parametrization does not extend to (1,1), whose
/// dual is the Veronese itself.
bool is_hypersurface(const Partition& lambda, int n);

struct DegreeRow {
    Partition lambda;
    BigInt disc_degree;  // degree of the lambda-discriminant (lambda read as mu)
    BigInt chow_degree;  // degree of the Chow dual, 0 when not a hypersurface
    bool hypersurface = false;

    bool operator==(const DegreeRow&) const = default;
};

/// Full degree table for weight d over n variables, rows in canonical
/// partition order. Satisfies disc_degree(mu) = sum over coarser lambda of
/// chow_degree(lambda) * M[lambda][mu] for every row mu.
struct DegreeTable {
    int d = 0;
    int n = 0;
    std::vector<DegreeRow> rows;

    const DegreeRow& row(const Partition& lambda) const;
    bool operator==(const DegreeTable&) const = default;
};

/// Computes every mu-discriminant degree, then solves the triangular system
///
///   disc_degree(mu) = sum_{lambda coarser-or-equal} chow_degree(lambda) * M[lambda][mu]
///
/// by forward substitution over exact rationals in canonical order. The
/// solution is checked to be a vector of non-negative integers whose zero
/// set equals the is_hypersurface classifier exactly; any violation throws
/// consistency_error.
DegreeTable solve_chow_degrees(int d, int n, const ResourceLimits& limits = {});

/// Closed form for the binary case (n = 2). For lambda with no part equal
/// to 1, profile (m_i) and m parts in total:
///
///   (m+1) * multinomial(m; m_2,...,m_p) * prod_{i>=2} (i-1)^{m_i}.
///
/// Partitions with a part 1 are not hypersurfaces for n = 2 and are refused.
BigInt binary_chow_degree(const Partition& lambda);

}  // namespace chowfactor
