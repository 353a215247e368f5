#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace symsq::hecke {

// Truncated q-expansion with exact integer coefficients; index = power of q.
using Series = std::vector<mpz_class>;

// Product truncated to n_terms coefficients (indices 0 .. n_terms-1).
// Small inputs go through schoolbook accumulation; large ones through
// Kronecker substitution (pack coefficients into one big integer, multiply
// with GMP, unpack balanced digits), which turns a length-10^5 series product
// into a single FFT-backed integer multiplication.
Series mul(const Series& a, const Series& b, std::size_t n_terms);

Series pow(const Series& a, unsigned e, std::size_t n_terms);

// E_4 = 1 + 240 sum sigma_3(n) q^n,  E_6 = 1 - 504 sum sigma_5(n) q^n
Series eisenstein_e4(std::size_t n_terms);
Series eisenstein_e6(std::size_t n_terms);

// Delta = q prod (1-q^n)^24, computed from the cube of Euler's pentagonal
// series (sparse) followed by two dense squarings.
Series delta_series(std::size_t n_terms);

} // namespace symsq::hecke
