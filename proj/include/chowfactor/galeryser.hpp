#pragma once

#include <vector>

#include "chowfactor/partition.hpp"

namespace chowfactor {

/// Number of 0-1 matrices with the given labelled row sums and labelled
/// column sums. Dynamic programming one column at a time over the multiset
/// of remaining row sums; rows with equal remaining sums are grouped and a
/// column's placements contribute a product of binomials.
BigInt gale_ryser_count(const std::vector<int>& row_sums, const Partition& col_sums);

/// Degree of the 2 x ... x 2 (d factors) hyperdeterminant via the 0-1
/// matrix counting route:
///
///   sum over lambda |- d with no part 1 of
///     (m+1)! * #matrices(rows (1^d), cols lambda) * prod_{i>=2} (i-1)^{m_i} / m_i!
///
/// with m the number of parts of lambda. Entirely independent of the
/// generating-function route; the two must agree.
BigInt binary_hyperdet_degree_gr(int d);

}  // namespace chowfactor
