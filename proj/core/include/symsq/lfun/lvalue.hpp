#pragma once

#include "symsq/hecke/eigenforms.hpp"
#include "symsq/lfun/log_gamma.hpp"

#include <complex>
#include <cstddef>

namespace symsq::lfun {

struct LValueResult {
    cld s;
    cld value;
    double abs_error = 0;      // truncation + quadrature allowance
    std::size_t terms_used = 0;
};

// log of the full archimedean factor of Lambda(s, sym^2 f):
//   -(3s/2) log pi + lgamma((s+1)/2) + lgamma((s+kappa-1)/2) + lgamma((s+kappa)/2)
cld gamma_factor_log(int weight, cld s);

// L(s, sym^2 f) by the smoothed two-term approximate functional equation
//
//   L(s) = sum_n b(n) n^{-s} V1(n) + sum_n b(n) n^{s-1} V2(n),
//   V1(n) = (1/2pi i) int_(c) (gamma(s+u)/gamma(s)) n^{-u} du/u,
//   V2(n) = (1/2pi i) int_(c) (gamma(1-s+u)/gamma(s)) n^{-u} du/u,
//
// with the root-factor X(s) = gamma(1-s)/gamma(s) folded into V2. The
// u-integrals run over a vertical line Re u = c > max(1 - Re s, Re s, 1) by
// trapezoid rule; the integrand decays like exp(-pi t/4) through the small
// gamma factor, and the weights decay super-exponentially in n, so both sums
// are short (a small multiple of the square root of the analytic conductor).
// Valid for 0 <= Re s <= 4.5. Throws coverage_error naming the needed
// coefficient range when the eigenform's lambda table is too short.
LValueResult lvalue(const hecke::Eigenform& f, cld s);

// Lambda(s, sym^2 f) = exp(gamma_factor_log) * L(s); errors propagate.
LValueResult completed_lambda(const hecke::Eigenform& f, cld s);

// Number of Dirichlet coefficients lvalue will request at this (weight, s).
std::size_t afe_terms_needed(int weight, cld s);

} // namespace symsq::lfun
