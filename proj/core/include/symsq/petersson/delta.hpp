#pragma once

#include "symsq/family.hpp"

#include <cstdint>

namespace symsq::petersson {

// Geometric side of the Petersson trace formula,
//   Delta_{m,n} = delta_{m,n} + 2 pi i^kappa sum_{c>=1} S(m,n;c)/c J_{kappa-1}(4 pi sqrt(mn)/c),
// truncated at c_max with a certified bound on the dropped tail.
struct DeltaResult {
    double value = 0;
    double tail_bound = 0;   // bound on |sum over c > c_stop|
    std::uint64_t c_max = 0; // requested cap
    std::uint64_t c_stop = 0;// last c actually summed (early exit when the
                             // remaining tail is provably < 1e-18)
};

// Tail bound used above, documented here because DeltaResult promises an
// enclosure. For C >= 2 pi sqrt(mn) / sqrt(nu+1) every term with c > C has
// x_c = 4 pi sqrt(mn)/c <= 2 sqrt(nu+1), where the ascending series for
// J_nu alternates with decreasing terms, so |J_nu(x_c)| <= (x_c/2)^nu / nu!.
// With d(c) <= 2 sqrt(c) and gcd(m,n,c) <= min(m,n):
//   sum_{c>C} |S(m,n;c)|/c |J_nu(x_c)|
//     <= sum_{c>C} d(c) sqrt(c) sqrt(gcd)/c (2 pi sqrt(mn)/c)^nu / nu!
//     <= 2 sqrt(min(m,n)) (2 pi sqrt(mn))^nu / nu! * C^{1-nu}/(nu-1).
double delta_tail_bound(int weight, std::uint64_t m, std::uint64_t n, std::uint64_t c_from);

DeltaResult delta_geometric(int weight, std::uint64_t m, std::uint64_t n,
                            std::uint64_t c_max, int threads = 0);

// Spectral side: sum_f omega_f^{-1} lambda_f(m) lambda_f(n) in the family's
// fixed form order.
double delta_spectral(const Family& family, std::uint64_t m, std::uint64_t n);

} // namespace symsq::petersson
