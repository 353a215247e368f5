#pragma once

#include "symsq/arith/primes.hpp"
#include "symsq/bigfloat.hpp"
#include "symsq/hecke/basis.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace symsq::hecke {

class CacheStore;

// One Hecke eigenform of level one, Deligne normalized: lambda(1) = 1,
// |lambda(p)| <= 2. lambda(p) is stored for every prime p <= coverage and
// extended to composite n through the Hecke relations
//   lambda(p^{v+1}) = lambda(p) lambda(p^v) - lambda(p^{v-1}),
//   lambda(mn) = lambda(m) lambda(n) for (m,n) = 1.
struct Eigenform {
    int weight = 0;
    unsigned precision_bits = 0;
    std::uint64_t coverage = 0;
    std::vector<big_float> basis_coords;               // a_f(1..dim), first entry 1
    std::shared_ptr<const arith::PrimeTable> primes;   // primes <= coverage
    std::vector<big_float> lambda_p;                   // aligned with primes->primes
    std::vector<double> lambda_p_d;

    big_float lambda(std::uint64_t n) const;
    double lambda_d(std::uint64_t n) const;
    double lambda2() const { return lambda_p_d.empty() ? 0.0 : lambda_p_d[0]; }
};

// All eigenforms of the given weight, sorted by lambda(2). Results are cached
// per weight when a store is supplied; the cache is reused when its precision
// and coverage meet the request. If eigenvalue separation fails at the
// requested precision the computation retries at doubled precision up to four
// times, then throws precision_error.
std::vector<Eigenform> eigenforms(int weight, std::uint64_t coverage,
                                  unsigned precision_bits,
                                  CacheStore* cache = nullptr,
                                  int threads = 0);

} // namespace symsq::hecke
