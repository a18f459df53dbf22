#pragma once

#include <utility>
#include <vector>

#include "chowfactor/numeric.hpp"

namespace chowfactor {

/// Binary form of degree d in the binomial-normalized coefficient basis:
/// f = sum_i binomial(d, i) * coeffs[i] * x^(d-i) y^i. In this basis the
/// Hankel matrix of a sum of r d-th powers of linear forms has rank at
/// most r (apolarity), which is what the vanishing tests rely on.
struct BinaryForm {
    int degree = 0;
    std::vector<BigRat> coeffs;  // size degree + 1

    BinaryForm(int d, std::vector<BigRat> c);
};

using RatMatrix = std::vector<std::vector<BigRat>>;

/// (k+1) x (k+1) Hankel slice: entry (r, s) = coeffs[r+s]. Requires 2k <= d.
RatMatrix catalecticant_matrix(const BinaryForm& f, int k);

/// Exact determinant of the middle (square) catalecticant of an
/// even-degree form, via fraction-free (Bareiss) elimination after
/// clearing denominators.
BigRat catalecticant_det(const BinaryForm& f);

/// The form sum_j (alpha_j x + beta_j y)^d in the normalized basis:
/// coeffs[i] = sum_j alpha_j^(d-i) beta_j^i.
BinaryForm power_sum_form(int d, const std::vector<std::pair<BigInt, BigInt>>& linear_forms);

/// Exact rank over the rationals (Gaussian elimination).
int rational_rank(RatMatrix m);

}  // namespace chowfactor
