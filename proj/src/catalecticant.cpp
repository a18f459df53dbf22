#include "chowfactor/catalecticant.hpp"

#include <algorithm>

namespace chowfactor {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;
using boost::multiprecision::lcm;

BinaryForm::BinaryForm(int d, std::vector<BigRat> c) : degree(d), coeffs(std::move(c)) {
    if (d < 1) throw std::domain_error("binary form degree must be positive");
    if (coeffs.size() != static_cast<std::size_t>(d) + 1)
        throw std::domain_error("binary form of degree d needs exactly d+1 coefficients");
}

RatMatrix catalecticant_matrix(const BinaryForm& f, int k) {
    if (k < 1) throw std::domain_error("catalecticant size must be positive");
    if (2 * k > f.degree)
        throw std::domain_error("catalecticant needs 2k <= degree of the form");
    RatMatrix m(static_cast<std::size_t>(k) + 1, std::vector<BigRat>(static_cast<std::size_t>(k) + 1));
    for (int r = 0; r <= k; ++r)
        for (int s = 0; s <= k; ++s)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] =
                f.coeffs[static_cast<std::size_t>(r + s)];
    return m;
}

namespace {

// Bareiss fraction-free elimination; exact determinant of an integer matrix.
BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
    const std::size_t n = a.size();
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t p = 0; p < n; ++p) {
        if (a[p][p] == 0) {
            std::size_t swap_row = p + 1;
            while (swap_row < n && a[swap_row][p] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[p], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) {
                a[i][j] = (a[p][p] * a[i][j] - a[i][p] * a[p][j]) / prev;  // division is exact
            }
            a[i][p] = 0;
        }
        prev = a[p][p];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace

BigRat catalecticant_det(const BinaryForm& f) {
    if (f.degree % 2 != 0)
        throw std::domain_error("square catalecticant needs an even-degree form");
    const int k = f.degree / 2;
    RatMatrix m = catalecticant_matrix(f, k);
    const std::size_t size = m.size();

    // Clear denominators row by row, run integer Bareiss, divide back.
    std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size));
    BigInt scale = 1;
    for (std::size_t i = 0; i < size; ++i) {
        BigInt l = 1;
        for (const BigRat& v : m[i]) l = lcm(l, denominator(v));
        for (std::size_t j = 0; j < size; ++j) {
            BigRat scaled = m[i][j] * BigRat(l);
            a[i][j] = numerator(scaled);
        }
        scale *= l;
    }
    return BigRat(bareiss_det(std::move(a)), scale);
}

BinaryForm power_sum_form(int d, const std::vector<std::pair<BigInt, BigInt>>& linear_forms) {
    if (d < 1) throw std::domain_error("binary form degree must be positive");
    std::vector<BigRat> coeffs(static_cast<std::size_t>(d) + 1, BigRat(0));
    for (const auto& [alpha, beta] : linear_forms) {
        for (int i = 0; i <= d; ++i)
            coeffs[static_cast<std::size_t>(i)] +=
                BigRat(bigint_pow(alpha, d - i) * bigint_pow(beta, i));
    }
    return BinaryForm(d, std::move(coeffs));
}

int rational_rank(RatMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    int rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t sel = pivot_row;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[pivot_row], m[sel]);
        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            BigRat ratio = m[i][c] / m[pivot_row][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= ratio * m[pivot_row][j];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace chowfactor
