#pragma once

#include <map>
#include <vector>

#include "chowfactor/numeric.hpp"

namespace chowfactor {

/// A partition of a positive integer: a weakly decreasing sequence of
/// positive parts. Value type with structural equality; the multiplicity
/// profile is computed on demand rather than stored.
class Partition {
public:
    Partition() = default;  // empty partition, weight 0
    explicit Partition(std::vector<int> parts);

    /// The partition (d) with a single part.
    static Partition single(int d);
    /// The partition (1^d).
    static Partition ones(int d);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int parts_count() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// part value -> multiplicity m_i (only values that occur).
    std::map<int, int> profile() const;
    /// Multiplicity of a given part value (0 if absent).
    int multiplicity(int value) const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Canonical total order: parts count ascending, then lexicographically
/// descending on the part sequences. (d) sorts first, (1^d) last; the
/// refinement matrix is upper triangular in this order.
bool canonical_less(const Partition& a, const Partition& b);

struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const { return canonical_less(a, b); }
};

template <typename V>
using PartitionMap = std::map<Partition, V, CanonicalLess>;

/// All partitions of d in canonical order. d must be >= 1.
std::vector<Partition> enumerate_partitions(int d);

/// True iff fine's parts can be grouped into blocks whose sums are exactly
/// coarse's parts. Both arguments must have the same weight.
bool refines(const Partition& coarse, const Partition& fine);

/// Number of functions from the indexed parts of fine onto the labelled
/// parts of coarse such that each label's preimage sums to its part. Parts
/// equal in value are distinct by index; blocks equal in value are distinct
/// by label, so the diagonal count for a partition with profile (m_i) is
/// prod m_i!.
BigInt refinement_count(const Partition& coarse, const Partition& fine);

/// d! / prod(lambda_i!). Requires weight(lambda) == d.
BigInt multinomial(int d, const Partition& lambda);

/// Dimension of the variety of forms splitting with exponent pattern
/// lambda over n variables: parts_count(lambda) * (n - 1).
long long chow_dimension(const Partition& lambda, int n);

/// Square table M[coarse][fine] of refinement counts over all partitions
/// of d in canonical order.
struct RefinementMatrix {
    std::vector<Partition> order;
    std::vector<std::vector<BigInt>> entries;

    const BigInt& at(const Partition& coarse, const Partition& fine) const;
    bool operator==(const RefinementMatrix&) const = default;
};

RefinementMatrix refinement_matrix_bruteforce(int d);

}  // namespace chowfactor
