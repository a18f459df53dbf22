#include "chowfactor/discdeg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "chowfactor/polyalg.hpp"

namespace chowfactor {

namespace detail {

BigInt disc_degree_series(const std::vector<int>& mu_parts, int n) {
    const int t = static_cast<int>(mu_parts.size());
    const int cap = n - 1;
    const std::vector<int> caps(static_cast<std::size_t>(t), cap);

    // B = sum over subsets S of (1 - mu(S)) z_S; multilinear by construction.
    TruncatedSeries b(caps);
    for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
        long long mass = 0;
        std::vector<int> e(static_cast<std::size_t>(t), 0);
        for (int j = 0; j < t; ++j) {
            if (mask >> j & 1) {
                mass += mu_parts[static_cast<std::size_t>(j)];
                e[static_cast<std::size_t>(j)] = 1;
            }
        }
        b.add_term(Monomial(e), BigInt(1 - mass));
    }

    const TruncatedSeries inv = inverse_square(b);
    return coefficient(inv.poly(), Monomial(std::vector<int>(static_cast<std::size_t>(t), cap)));
}

namespace {

// Canonical orbit representative: exponents sorted descending within each
// run of equal mu parts. The series denominator, the Horner accumulator and
// the extraction target are all invariant under permuting variables inside
// such a run, so coefficients only need to be carried on representatives.
struct GroupedLayout {
    int t = 0;
    int cap = 0;
    std::vector<std::pair<int, int>> runs;          // (begin, end) per group
    std::vector<std::vector<int>> reps;             // canonical exponent vectors
    std::unordered_map<std::uint64_t, std::uint32_t> index;  // packed rep -> position

    std::uint64_t pack(const std::vector<int>& e) const {
        std::uint64_t key = 0;
        for (int v : e) key = key * static_cast<std::uint64_t>(cap + 1) + static_cast<std::uint64_t>(v);
        return key;
    }

    void canonicalize(std::vector<int>& e) const {
        for (auto [b, en] : runs)
            std::sort(e.begin() + b, e.begin() + en, std::greater<int>());
    }
};

GroupedLayout build_layout(const std::vector<int>& sorted_parts, int n) {
    GroupedLayout lay;
    lay.t = static_cast<int>(sorted_parts.size());
    lay.cap = n - 1;
    for (int i = 0; i < lay.t;) {
        int j = i;
        while (j < lay.t && sorted_parts[static_cast<std::size_t>(j)] ==
                                sorted_parts[static_cast<std::size_t>(i)])
            ++j;
        lay.runs.emplace_back(i, j);
        i = j;
    }
    // Enumerate representatives: weakly decreasing within each run.
    std::vector<int> cur(static_cast<std::size_t>(lay.t), 0);
    std::function<void(std::size_t)> start = [&](std::size_t run) {
        if (run == lay.runs.size()) {
            lay.index.emplace(lay.pack(cur), static_cast<std::uint32_t>(lay.reps.size()));
            lay.reps.push_back(cur);
            return;
        }
        auto [b, e] = lay.runs[run];
        std::function<void(int, int)> fill = [&](int pos, int bound) {
            if (pos == e) {
                start(run + 1);
                return;
            }
            for (int v = bound; v >= 0; --v) {
                cur[static_cast<std::size_t>(pos)] = v;
                fill(pos + 1, v);
            }
            cur[static_cast<std::size_t>(pos)] = 0;
        };
        fill(b, lay.cap);
    };
    start(0);
    return lay;
}

}  // namespace

BigInt disc_degree_series_grouped(const std::vector<int>& mu_parts, int n) {
    std::vector<int> parts = mu_parts;
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    const int t = static_cast<int>(parts.size());
    if (t >= 31) throw resource_error("series has too many variables");

    GroupedLayout lay = build_layout(parts, n);
    const std::size_t reps = lay.reps.size();

    // Expanded terms of U = 1 - B: coefficient mu(S) - 1 on the squarefree
    // monomial z_S, for every nonempty subset S.
    struct UTerm {
        std::uint32_t mask;
        long long coeff;
    };
    std::vector<UTerm> u;
    for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
        long long mass = 0;
        for (int j = 0; j < t; ++j)
            if (mask >> j & 1) mass += parts[static_cast<std::size_t>(j)];
        if (mass != 1) u.push_back({mask, mass - 1});
    }

    // transitions[r]: list of (source representative, coefficient) such that
    // (A*U)[rep r] = sum coeff * A[source].
    std::vector<std::vector<std::pair<std::uint32_t, long long>>> transitions(reps);
    std::vector<int> e(static_cast<std::size_t>(t));
    for (std::size_t r = 0; r < reps; ++r) {
        for (const UTerm& term : u) {
            bool ok = true;
            for (int j = 0; j < t; ++j) {
                e[static_cast<std::size_t>(j)] =
                    lay.reps[r][static_cast<std::size_t>(j)] - (term.mask >> j & 1);
                if (e[static_cast<std::size_t>(j)] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            lay.canonicalize(e);
            transitions[r].emplace_back(lay.index.at(lay.pack(e)), term.coeff);
        }
    }

    const std::uint32_t zero_idx = lay.index.at(lay.pack(std::vector<int>(static_cast<std::size_t>(t), 0)));
    const std::uint32_t full_idx =
        lay.index.at(lay.pack(std::vector<int>(static_cast<std::size_t>(t), lay.cap)));

    // sum_{k=0..K} (k+1) U^k, accumulating powers with early exit.
    const int big_k = lay.cap * t;
    std::vector<BigInt> power(reps), next(reps), total(reps);
    power[zero_idx] = 1;
    total[zero_idx] = 1;
    for (int k = 1; k <= big_k; ++k) {
        bool any = false;
        for (std::size_t r = 0; r < reps; ++r) {
            BigInt acc = 0;
            for (const auto& [src, c] : transitions[r]) {
                if (power[src] != 0) acc += power[src] * c;
            }
            if (acc != 0) any = true;
            next[r] = std::move(acc);
        }
        if (!any) break;
        power.swap(next);
        for (std::size_t r = 0; r < reps; ++r)
            if (power[r] != 0) total[r] += power[r] * (k + 1);
    }
    return total[full_idx];
}

}  // namespace detail

BigInt mu_discriminant_degree(const Partition& mu, int n, const ResourceLimits& limits) {
    if (n < 2) throw std::domain_error("mu_discriminant_degree requires n >= 2");
    if (mu.weight() < 2) throw std::domain_error("mu_discriminant_degree requires weight >= 2");

    const int t = mu.parts_count();
    const double series_terms = std::pow(static_cast<double>(n), t);
    if (series_terms > static_cast<double>(limits.max_terms)) {
        const std::string count =
            series_terms < 9e18 ? std::to_string(static_cast<long long>(series_terms))
                                : std::to_string(t) + " variables at cap " + std::to_string(n - 1);
        throw resource_error("series would need about " + count +
                             " monomials, above the configured ceiling of " +
                             std::to_string(limits.max_terms) + "; raise max_terms to proceed");
    }

    // Plain route cost ~ n^t * 2^t * K; switch to the orbit-compressed
    // evaluation of the same sum when that gets large.
    const double plain_cost = series_terms * std::pow(2.0, t) * (t * (n - 1));
    BigInt deg = plain_cost <= 3e7 ? detail::disc_degree_series(mu.parts(), n)
                                   : detail::disc_degree_series_grouped(mu.parts(), n);
    if (deg <= 0)
        throw consistency_error("discriminant degree came out non-positive; series convention bug");
    return deg;
}

BigInt boole_degree(int d, int n) {
    if (d < 2 || n < 2) throw std::domain_error("boole_degree requires d >= 2 and n >= 2");
    return n * bigint_pow(d - 1, n - 1);
}

}  // namespace chowfactor
