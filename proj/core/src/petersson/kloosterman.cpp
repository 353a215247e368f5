#include "symsq/petersson/kloosterman.hpp"

#include "symsq/arith/summation.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace symsq::petersson {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % c);
}

// inverse of a mod c, gcd(a,c) = 1
std::uint64_t invmod(std::uint64_t a, std::uint64_t c) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(c), new_r = static_cast<std::int64_t>(a % c);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t; t = new_t; new_t = tmp;
        tmp = r - q * new_r; r = new_r; new_r = tmp;
    }
    if (r != 1) throw std::invalid_argument("invmod: not invertible");
    if (t < 0) t += static_cast<std::int64_t>(c);
    return static_cast<std::uint64_t>(t);
}

} // namespace

double kloosterman(std::int64_t m, std::int64_t n, std::uint64_t c) {
    if (c == 0) throw std::domain_error("kloosterman: c >= 1");
    if (c == 1) return 1.0; // single residue, empty exponential

    std::uint64_t mr = static_cast<std::uint64_t>(((m % static_cast<std::int64_t>(c)) +
                                                   static_cast<std::int64_t>(c)) % static_cast<std::int64_t>(c));
    std::uint64_t nr = static_cast<std::uint64_t>(((n % static_cast<std::int64_t>(c)) +
                                                   static_cast<std::int64_t>(c)) % static_cast<std::int64_t>(c));

    // units mod c and prefix products for batched inversion
    std::vector<std::uint32_t> units;
    units.reserve(c / 2);
    for (std::uint64_t h = 1; h < c; ++h)
        if (std::gcd(h, c) == 1) units.push_back(static_cast<std::uint32_t>(h));

    std::vector<std::uint64_t> prefix(units.size());
    std::uint64_t acc = 1;
    for (std::size_t i = 0; i < units.size(); ++i) {
        acc = mulmod(acc, units[i], c);
        prefix[i] = acc;
    }
    std::uint64_t inv_all = invmod(acc, c);

    arith::CompensatedSum<long double> sum;
    const long double two_pi_over_c = 2.0L * 3.14159265358979323846264338327950288L /
                                      static_cast<long double>(c);
    for (std::size_t i = units.size(); i-- > 0;) {
        std::uint64_t h = units[i];
        std::uint64_t hbar = (i == 0) ? inv_all : mulmod(inv_all, prefix[i - 1], c);
        inv_all = mulmod(inv_all, h, c); // peel off h for the next step
        std::uint64_t phase = (mulmod(mr, h, c) + mulmod(nr, hbar, c)) % c;
        sum.add(cosl(two_pi_over_c * static_cast<long double>(phase)));
    }
    return static_cast<double>(sum.value());
}

} // namespace symsq::petersson
