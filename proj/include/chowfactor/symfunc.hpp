#pragma once

#include "chowfactor/partition.hpp"
#include "chowfactor/polyalg.hpp"

namespace chowfactor {

/// Monomial symmetric function m_mu in numvars variables: the sum of
/// x^(sigma.mu) over distinct permutations sigma of mu padded with zeros.
/// Requires numvars >= parts_count(mu).
SparsePoly monomial_sym(const Partition& mu, int numvars);

/// Power-sum symmetric function p_lambda in numvars variables: the fully
/// expanded product over parts of (x_1^part + ... + x_numvars^part).
SparsePoly power_sum(const Partition& lambda, int numvars);

/// Refinement matrix recovered from symmetric functions: the entry at
/// (coarse, fine) is the coefficient of the monomial x^coarse inside
/// power_sum(fine, d). Independently of refinement_matrix_bruteforce,
/// this must produce the identical table.
RefinementMatrix refinement_matrix_symfunc(int d);

/// Exact polynomial identity coupling a vector of discriminant degrees
/// (indexed by mu) with a vector of Chow-dual degrees (indexed by lambda):
///
///   sum_mu D(mu) m_mu(x)  ==  sum_lambda deg(lambda) q_lambda(x),
///
/// in d variables, where q_lambda = sum_mu M[lambda][mu] m_mu is the row
/// generating function of the refinement matrix. With the matrix convention
/// fixed above (M[coarse][fine] = coefficient of m_coarse in p_fine) this is
/// the reading of the degree generating identity that actually holds for the
/// computed tables; pairing deg against the literal power sums p_lambda would
/// transpose the matrix and fails already for cubics.
/// Both maps must contain every partition of d.
bool degree_identity_check(int d, const PartitionMap<BigInt>& disc_degrees,
                           const PartitionMap<BigInt>& chow_degrees);

}  // namespace chowfactor
