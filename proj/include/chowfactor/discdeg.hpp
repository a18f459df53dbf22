#pragma once

#include <vector>

#include "chowfactor/partition.hpp"

namespace chowfactor {

/// Size ceiling for series-based computations. max_terms bounds the number
/// of monomials n^t of the truncated series attached to a degree query;
/// inputs above the ceiling are refused with a resource_error instead of
/// exhausting memory.
struct ResourceLimits {
    long long max_terms = 10'000'000;
};

/// Degree of the mu-discriminant: the degree of the dual hypersurface of
/// the Segre-Veronese variety with exponent vector mu over an n-dimensional
/// space. Extracted as the coefficient of z_1^(n-1)...z_t^(n-1) in the
/// truncated expansion of
///
///   1 / [ prod_i (1+z_i) - sum_j mu_j z_j prod_{i != j} (1+z_i) ]^2 .
///
/// The extraction exponent is n-1 per variable: for mu = (d) this reduces to
/// n(d-1)^(n-1), the classical discriminant degree, which pins the exponent
/// convention (see boole_degree).
BigInt mu_discriminant_degree(const Partition& mu, int n, const ResourceLimits& limits = {});

/// Classical discriminant degree of a degree-d form in n variables:
/// n(d-1)^(n-1).
BigInt boole_degree(int d, int n);

namespace detail {

/// Reference route: builds the denominator as a TruncatedSeries and runs
/// inverse_square literally. Cost grows as n^t * 2^t, so this is only used
/// below a size threshold.
BigInt disc_degree_series(const std::vector<int>& mu_parts, int n);

/// Same series, same Horner sum, evaluated on orbit representatives of the
/// symmetry group permuting variables with equal mu parts. Exact and
/// equal to disc_degree_series everywhere; preferred for large inputs.
BigInt disc_degree_series_grouped(const std::vector<int>& mu_parts, int n);

}  // namespace detail

}  // namespace chowfactor
