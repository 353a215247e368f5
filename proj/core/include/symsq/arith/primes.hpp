#pragma once

#include <cstdint>
#include <vector>

namespace symsq::arith {

struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes; // ascending, all primes <= limit

    static PrimeTable build(std::uint64_t limit);

    bool contains(std::uint64_t p) const;
};

// Primes p with lo < p <= hi, ascending. Sieved in segments so large hi stays
// within a fixed memory budget.
std::vector<std::uint64_t> prime_range(double lo, double hi);

// sum_{p <= x} 1/p, compensated. Throws std::domain_error for x < 2.
double mertens_sum(double x);

// sum over a caller-supplied table, reused by callers that already sieved.
double mertens_sum(double x, const PrimeTable& table);

} // namespace symsq::arith
