#pragma once

#include "symsq/hecke/eigenforms.hpp"

#include <cstdint>
#include <vector>

namespace symsq::lfun {

// Dirichlet coefficients of L(s, sym^2 f) = zeta(2s) sum lambda(n^2) n^{-s}:
// b(n) = sum_{d^2 m = n} lambda(m^2). Multiplicative; |b(n)| <= d_3(n).
// Entry [n] is b(n); [0] is unused. Needs lambda coverage for every prime <= N.
std::vector<long double> symsq_coeffs(const hecke::Eigenform& f, std::size_t N);

// Three-dimensional divisor function table d_3(1..N); [0] unused.
std::vector<std::uint32_t> d3_table(std::size_t N);

} // namespace symsq::lfun
