#include "chowfactor/polyalg.hpp"

#include <numeric>

namespace chowfactor {

namespace {
const BigInt kZero = 0;
}

int Monomial::total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
}

SparsePoly SparsePoly::constant(int varcount, BigInt value) {
    SparsePoly p(varcount);
    p.add_term(Monomial(std::vector<int>(static_cast<std::size_t>(varcount), 0)), value);
    return p;
}

void SparsePoly::check_arity(const Monomial& m) const {
    if (m.size() != varcount_)
        throw std::domain_error("monomial length " + std::to_string(m.size()) +
                                " does not match variable count " + std::to_string(varcount_));
}

void SparsePoly::add_term(const Monomial& m, const BigInt& value) {
    check_arity(m);
    if (value == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

const BigInt& SparsePoly::coefficient_ref(const Monomial& m) const {
    check_arity(m);
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
    if (other.varcount_ != varcount_)
        throw std::domain_error("variable counts differ in polynomial sum");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const BigInt& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.varcount_ != b.varcount_)
        throw std::domain_error("variable counts differ in polynomial product");
    SparsePoly out(a.varcount_);
    std::vector<int> e(static_cast<std::size_t>(a.varcount_));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ma[i] + mb[i];
            out.add_term(Monomial(e), ca * cb);
        }
    }
    return out;
}

BigInt coefficient(const SparsePoly& p, const Monomial& m) {
    return p.coefficient_ref(m);
}

TruncatedSeries::TruncatedSeries(std::vector<int> caps)
    : poly_(static_cast<int>(caps.size())), caps_(std::move(caps)) {
    for (int c : caps_)
        if (c < 0) throw std::domain_error("series caps must be non-negative");
}

TruncatedSeries::TruncatedSeries(const SparsePoly& p, std::vector<int> caps)
    : TruncatedSeries(std::move(caps)) {
    if (p.varcount() != static_cast<int>(caps_.size()))
        throw std::domain_error("polynomial variable count does not match caps length");
    for (const auto& [m, c] : p.terms()) add_term(m, c);
}

void TruncatedSeries::add_term(const Monomial& m, const BigInt& value) {
    for (std::size_t i = 0; i < caps_.size(); ++i)
        if (m[i] > caps_[i]) return;
    poly_.add_term(m, value);
}

TruncatedSeries mul_truncated(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.caps() != b.caps())
        throw std::domain_error("series caps differ in truncated product");
    TruncatedSeries out(a.caps());
    std::vector<int> e(a.caps().size());
    for (const auto& [ma, ca] : a.poly().terms()) {
        for (const auto& [mb, cb] : b.poly().terms()) {
            bool over = false;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ma[i] + mb[i];
                if (e[i] > a.caps()[i]) {
                    over = true;
                    break;
                }
            }
            if (!over) out.add_term(Monomial(e), ca * cb);
        }
    }
    return out;
}

TruncatedSeries inverse_square(const TruncatedSeries& b) {
    const Monomial one(std::vector<int>(b.caps().size(), 0));
    if (b.poly().coefficient_ref(one) != 1)
        throw std::domain_error("inverse_square requires constant coefficient 1");

    // U = 1 - B has no constant term, so U^k contributes nothing once
    // k exceeds the sum of the caps.
    TruncatedSeries u(b.caps());
    for (const auto& [m, c] : b.poly().terms()) {
        if (m == one) continue;
        u.add_term(m, -c);
    }

    const int big_k = std::accumulate(b.caps().begin(), b.caps().end(), 0);
    TruncatedSeries power(b.caps());
    power.add_term(one, 1);
    TruncatedSeries result = power;  // k = 0 term
    for (int k = 1; k <= big_k; ++k) {
        power = mul_truncated(power, u);
        if (power.poly().is_zero()) break;
        for (const auto& [m, c] : power.poly().terms()) result.add_term(m, c * (k + 1));
    }
    return result;
}

}  // namespace chowfactor
