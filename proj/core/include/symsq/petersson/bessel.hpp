#pragma once

namespace symsq::petersson {

// J_nu(x) for integer nu >= 0, x >= 0.
//
// Two regimes:
//  - x <= 2 sqrt(nu+1): ascending series with a log-scaled leading factor,
//    exp(nu log(x/2) - lgamma(nu+1)) * sum_k (-1)^k (x^2/4)^k / (k! (nu+1)_k).
//    The terms decrease from k = 0, so the alternating sum is stable; the
//    leading factor is assembled in log space because it underflows long
//    before the sum matters (J_199(0.1) ~ 10^-676).
//  - otherwise: Bessel's integral (1/pi) int_0^pi cos(nu t - x sin t) dt by
//    composite Gauss-Legendre with enough panels to resolve the oscillation.
//
// Relative error ~1e-15 in the series regime; values below ~1e-320 flush to 0
// (absolute error far under 1e-300).
double bessel_j(unsigned nu, double x);

// log of the first-term majorant (x/2)^nu / nu!, valid bound for |J_nu(x)|
// whenever x <= 2 sqrt(nu+1); used by tail estimates without underflow.
long double bessel_j_log_majorant(unsigned nu, long double x);

} // namespace symsq::petersson
