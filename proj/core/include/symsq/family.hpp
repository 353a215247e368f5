#pragma once

#include "symsq/hecke/cache.hpp"
#include "symsq/hecke/eigenforms.hpp"
#include "symsq/lfun/lvalue.hpp"

#include <vector>

namespace symsq {

// All eigenforms of one weight together with the data every harmonic average
// needs: omega_f = (kappa-1)/(2pi) L(1, sym^2 f) and the central values
// L(1/2, sym^2 f). Form order is fixed (ascending lambda(2)), so every
// reduction over the family is deterministic.
struct Family {
    int weight = 0;
    std::vector<hecke::Eigenform> forms;
    std::vector<double> omega;        // harmonic weights, all > 0
    std::vector<double> omega_inv;
    std::vector<double> central;      // L(1/2, sym^2 f), real part
    std::vector<double> central_err;  // abs_error of the central values
    int indeterminate_count = 0;      // forms with |L(1/2)| below their error

    bool central_defined(std::size_t i) const {
        return std::abs(central[i]) > central_err[i];
    }
};

// Builds (or loads from cache) the family at the given weight with lambda
// coverage at least `coverage`.
Family build_family(int weight, std::uint64_t coverage, unsigned precision_bits,
                    hecke::CacheStore* cache = nullptr, int threads = 0);

// Harmonic weight of a single form: (kappa-1)/(2pi) * L(1, sym^2 f).
double harmonic_weight(const hecke::Eigenform& f);

} // namespace symsq
