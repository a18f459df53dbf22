#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "chowfactor/numeric.hpp"

namespace chowfactor {

/// Exponent vector of fixed length (the variable count of the enclosing
/// polynomial).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {}

    const std::vector<int>& exponents() const { return e_; }
    int size() const { return static_cast<int>(e_.size()); }
    int operator[](std::size_t i) const { return e_[i]; }
    int total_degree() const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<int> e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (int e : m.exponents()) {
            h ^= static_cast<std::size_t>(e) + 0x9e3779b9 + (h << 6) + (h >> 2);
        }
        return h;
    }
};

/// Sparse polynomial over arbitrary-precision integers. No zero
/// coefficients are stored; term order is unspecified (callers sort at
/// serialization time).
class SparsePoly {
public:
    using TermMap = std::unordered_map<Monomial, BigInt, MonomialHash>;

    explicit SparsePoly(int varcount = 0) : varcount_(varcount) {}
    static SparsePoly constant(int varcount, BigInt value);

    int varcount() const { return varcount_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Adds value to the coefficient at m, erasing the term if it cancels.
    void add_term(const Monomial& m, const BigInt& value);
    const BigInt& coefficient_ref(const Monomial& m) const;

    SparsePoly& operator+=(const SparsePoly& other);
    SparsePoly& operator*=(const BigInt& scalar);
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

    bool operator==(const SparsePoly&) const = default;

private:
    int varcount_ = 0;
    TermMap terms_;
    void check_arity(const Monomial& m) const;
};

/// Stored coefficient of p at m, or zero.
BigInt coefficient(const SparsePoly& p, const Monomial& m);

/// A sparse polynomial together with per-variable exponent caps; every
/// stored monomial respects the caps componentwise.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<int> caps);
    TruncatedSeries(const SparsePoly& p, std::vector<int> caps);

    const std::vector<int>& caps() const { return caps_; }
    int varcount() const { return poly_.varcount(); }
    const SparsePoly& poly() const { return poly_; }

    /// Adds a term, silently discarding it if any exponent exceeds its cap.
    void add_term(const Monomial& m, const BigInt& value);

    bool operator==(const TruncatedSeries&) const = default;

private:
    SparsePoly poly_;
    std::vector<int> caps_;
};

/// Exact product with every over-cap monomial discarded. Both operands
/// must share the same caps (hence the same variable count).
TruncatedSeries mul_truncated(const TruncatedSeries& a, const TruncatedSeries& b);

/// Truncation of 1/B^2 for a series B with constant coefficient exactly 1.
/// Computed as sum_{k=0..K} (k+1) U^k with U = 1 - B and K = sum of caps;
/// U has no constant term, so U^k dies under the caps once k exceeds K.
/// The result satisfies mul_truncated(result, mul_truncated(B, B)) == 1.
TruncatedSeries inverse_square(const TruncatedSeries& b);

}  // namespace chowfactor
