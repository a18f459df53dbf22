#include "chowfactor/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace chowfactor {

namespace {

// Highest weight for which enumerate_partitions will materialize the full
// list (p(64) is about 1.7e6 entries).
constexpr int kMaxEnumerateWeight = 64;

void check_same_weight(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight())
        throw std::domain_error("partition weights differ: " + std::to_string(a.weight()) +
                                " vs " + std::to_string(b.weight()));
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::domain_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::single(int d) {
    if (d < 1) throw std::domain_error("partition weight must be positive");
    return Partition(std::vector<int>{d});
}

Partition Partition::ones(int d) {
    if (d < 1) throw std::domain_error("partition weight must be positive");
    return Partition(std::vector<int>(static_cast<std::size_t>(d), 1));
}

std::map<int, int> Partition::profile() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

bool canonical_less(const Partition& a, const Partition& b) {
    if (a.parts_count() != b.parts_count()) return a.parts_count() < b.parts_count();
    return a.parts() > b.parts();  // lexicographically larger sequence first
}

std::vector<Partition> enumerate_partitions(int d) {
    if (d < 1) throw std::domain_error("enumerate_partitions requires d >= 1");
    if (d > kMaxEnumerateWeight)
        throw resource_error("enumerate_partitions: d > " + std::to_string(kMaxEnumerateWeight) +
                             " would enumerate too many partitions");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(d, d);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

bool refines(const Partition& coarse, const Partition& fine) {
    check_same_weight(coarse, fine);
    // Backtracking placement of fine's parts (largest first) into the
    // remaining block capacities; branches on equal capacities are skipped.
    std::vector<int> cap = coarse.parts();
    const std::vector<int>& parts = fine.parts();
    std::function<bool(std::size_t)> place = [&](std::size_t j) -> bool {
        if (j == parts.size()) return true;
        int last_tried = -1;
        for (auto& c : cap) {
            if (c < parts[j] || c == last_tried) continue;
            last_tried = c;
            c -= parts[j];
            if (place(j + 1)) {
                c += parts[j];
                return true;
            }
            c += parts[j];
        }
        return false;
    };
    return place(0);
}

BigInt refinement_count(const Partition& coarse, const Partition& fine) {
    check_same_weight(coarse, fine);
    const std::vector<int>& parts = fine.parts();
    const std::size_t s = coarse.parts().size();

    // Memoized DFS over assignments of fine's indexed parts to labelled
    // blocks; key = (next part index, exact remaining capacity vector).
    std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo;
    std::vector<int> rem = coarse.parts();
    std::function<BigInt(std::size_t)> count = [&](std::size_t j) -> BigInt {
        if (j == parts.size()) return 1;  // residuals are all zero by weight balance
        const auto key = std::make_pair(j, rem);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        BigInt total = 0;
        for (std::size_t i = 0; i < s; ++i) {
            if (rem[i] < parts[j]) continue;
            rem[i] -= parts[j];
            total += count(j + 1);
            rem[i] += parts[j];
        }
        memo.emplace(key, total);
        return total;
    };
    return count(0);
}

BigInt multinomial(int d, const Partition& lambda) {
    if (d < 1) throw std::domain_error("multinomial requires d >= 1");
    if (lambda.weight() != d)
        throw std::domain_error("multinomial: partition weight does not equal d");
    BigInt r = factorial(d);
    for (int p : lambda.parts()) r /= factorial(p);
    return r;
}

long long chow_dimension(const Partition& lambda, int n) {
    if (n < 1) throw std::domain_error("chow_dimension requires n >= 1");
    return static_cast<long long>(lambda.parts_count()) * (n - 1);
}

const BigInt& RefinementMatrix::at(const Partition& coarse, const Partition& fine) const {
    auto idx = [&](const Partition& p) -> std::size_t {
        auto it = std::lower_bound(order.begin(), order.end(), p, canonical_less);
        if (it == order.end() || !(*it == p))
            throw std::domain_error("partition not present in refinement matrix");
        return static_cast<std::size_t>(it - order.begin());
    };
    return entries[idx(coarse)][idx(fine)];
}

RefinementMatrix refinement_matrix_bruteforce(int d) {
    if (d < 1) throw std::domain_error("refinement matrix requires d >= 1");
    RefinementMatrix m;
    m.order = enumerate_partitions(d);
    const std::size_t k = m.order.size();
    if (k > 3000)
        throw resource_error("refinement matrix for d = " + std::to_string(d) + " is too large");
    m.entries.assign(k, std::vector<BigInt>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            m.entries[i][j] = refinement_count(m.order[i], m.order[j]);
    return m;
}

}  // namespace chowfactor
