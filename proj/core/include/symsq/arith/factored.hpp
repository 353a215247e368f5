#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace symsq::arith {

// A positive integer carried together with its factorization. Mollifier and
// coefficient indices are always constructed from known prime supports, so
// nothing here ever factors an arbitrary integer.
struct FactoredInt {
    std::uint64_t value = 1;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors; // (p, exponent), p ascending

    static FactoredInt one() { return FactoredInt{}; }

    static FactoredInt prime_power(std::uint64_t p, std::uint32_t e) {
        FactoredInt f;
        if (e == 0) return f;
        f.factors.emplace_back(p, e);
        std::uint64_t v = 1;
        for (std::uint32_t i = 0; i < e; ++i) v *= p;
        f.value = v;
        return f;
    }

    // Number of prime factors with multiplicity.
    std::uint32_t omega() const {
        std::uint32_t total = 0;
        for (auto& [p, e] : factors) total += e;
        return total;
    }

    // w(n) = prod_{p^a || n} a!
    double w_weight() const {
        double w = 1.0;
        for (auto& [p, e] : factors)
            for (std::uint32_t i = 2; i <= e; ++i) w *= static_cast<double>(i);
        return w;
    }

    std::uint32_t exponent_of(std::uint64_t p) const {
        for (auto& [q, e] : factors)
            if (q == p) return e;
        return 0;
    }

    bool coprime_to(const FactoredInt& other) const {
        for (auto& [p, e] : factors)
            if (other.exponent_of(p) != 0) return false;
        return true;
    }

    FactoredInt times(const FactoredInt& other) const {
        FactoredInt out;
        out.value = value * other.value;
        std::size_t i = 0, j = 0;
        while (i < factors.size() || j < other.factors.size()) {
            if (j == other.factors.size() ||
                (i < factors.size() && factors[i].first < other.factors[j].first)) {
                out.factors.push_back(factors[i++]);
            } else if (i == factors.size() || other.factors[j].first < factors[i].first) {
                out.factors.push_back(other.factors[j++]);
            } else {
                out.factors.emplace_back(factors[i].first, factors[i].second + other.factors[j].second);
                ++i; ++j;
            }
        }
        return out;
    }

    bool operator==(const FactoredInt& other) const { return value == other.value; }
    bool operator<(const FactoredInt& other) const { return value < other.value; }
};

// All divisors of n (as FactoredInt), in no particular order.
inline std::vector<FactoredInt> divisors(const FactoredInt& n) {
    std::vector<FactoredInt> out{FactoredInt::one()};
    for (auto& [p, e] : n.factors) {
        std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (std::uint32_t k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                FactoredInt d = out[i];
                d.value *= pk;
                d.factors.push_back({p, k});
                // keep factors sorted: p may be inserted out of order
                for (std::size_t j = d.factors.size(); j-- > 1;) {
                    if (d.factors[j].first < d.factors[j - 1].first)
                        std::swap(d.factors[j], d.factors[j - 1]);
                    else
                        break;
                }
                out.push_back(std::move(d));
            }
        }
    }
    return out;
}

} // namespace symsq::arith
