#include "symsq/arith/primes.hpp"
#include "symsq/arith/summation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symsq::arith {

namespace {

constexpr std::uint64_t kSegmentSize = 1u << 22; // segment sieving above ~10^7

std::vector<bool> sieve_flags(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (composite[p]) continue;
        for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return composite;
}

// Emit primes in (lo, hi] into out, given base primes up to sqrt(hi).
void sieve_segment(std::uint64_t seg_lo, std::uint64_t seg_hi,
                   const std::vector<std::uint64_t>& base,
                   std::vector<std::uint64_t>& out) {
    std::vector<bool> composite(seg_hi - seg_lo + 1, false);
    for (std::uint64_t p : base) {
        if (p * p > seg_hi) break;
        std::uint64_t start = std::max(p * p, ((seg_lo + p - 1) / p) * p);
        for (std::uint64_t q = start; q <= seg_hi; q += p) composite[q - seg_lo] = true;
    }
    for (std::uint64_t v = std::max<std::uint64_t>(seg_lo, 2); v <= seg_hi; ++v)
        if (!composite[v - seg_lo]) out.push_back(v);
}

} // namespace

PrimeTable PrimeTable::build(std::uint64_t limit) {
    PrimeTable table;
    table.limit = limit;
    if (limit < 2) return table;

    if (limit <= 10'000'000) {
        auto composite = sieve_flags(limit);
        for (std::uint64_t v = 2; v <= limit; ++v)
            if (!composite[v]) table.primes.push_back(v);
        return table;
    }

    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    auto base_flags = sieve_flags(root);
    std::vector<std::uint64_t> base;
    for (std::uint64_t v = 2; v <= root; ++v)
        if (!base_flags[v]) base.push_back(v);

    table.primes = base;
    for (std::uint64_t lo = root + 1; lo <= limit; lo += kSegmentSize) {
        std::uint64_t hi = std::min(limit, lo + kSegmentSize - 1);
        sieve_segment(lo, hi, base, table.primes);
    }
    return table;
}

bool PrimeTable::contains(std::uint64_t p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

std::vector<std::uint64_t> prime_range(double lo, double hi) {
    if (lo < 0 || hi < lo)
        throw std::domain_error("prime_range: need 0 <= lo <= hi");
    std::vector<std::uint64_t> out;
    if (hi < 2) return out;

    auto hi_int = static_cast<std::uint64_t>(std::floor(hi));
    auto lo_int = static_cast<std::uint64_t>(std::floor(std::max(lo, 0.0)));

    std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi_int))) + 1;
    auto base_flags = sieve_flags(root);
    std::vector<std::uint64_t> base;
    for (std::uint64_t v = 2; v <= root; ++v)
        if (!base_flags[v]) base.push_back(v);

    std::uint64_t start = lo_int + 1; // strict lower bound: p > lo
    if (static_cast<double>(lo_int) < lo) start = lo_int + 1;
    for (std::uint64_t seg = std::max<std::uint64_t>(start, 2); seg <= hi_int; ) {
        std::uint64_t seg_hi = std::min(hi_int, seg + kSegmentSize - 1);
        sieve_segment(seg, seg_hi, base, out);
        if (seg_hi == hi_int) break;
        seg = seg_hi + 1;
    }
    // p > lo must hold exactly, also for non-integer lo just below a prime.
    while (!out.empty() && static_cast<double>(out.front()) <= lo)
        out.erase(out.begin());
    return out;
}

double mertens_sum(double x, const PrimeTable& table) {
    if (x < 2) throw std::domain_error("mertens_sum: x >= 2 required");
    if (static_cast<double>(table.limit) < x)
        throw std::domain_error("mertens_sum: prime table too short");
    CompensatedSum<long double> acc;
    for (std::uint64_t p : table.primes) {
        if (static_cast<double>(p) > x) break;
        acc.add(1.0L / static_cast<long double>(p));
    }
    return static_cast<double>(acc.value());
}

double mertens_sum(double x) {
    if (x < 2) throw std::domain_error("mertens_sum: x >= 2 required");
    CompensatedSum<long double> acc;
    auto primes = prime_range(1.0, x);
    for (std::uint64_t p : primes) acc.add(1.0L / static_cast<long double>(p));
    return static_cast<double>(acc.value());
}

} // namespace symsq::arith
