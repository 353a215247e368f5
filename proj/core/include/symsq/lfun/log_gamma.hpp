#pragma once

#include <complex>

namespace symsq::lfun {

using cld = std::complex<long double>;

// log Gamma(z) for Re z > 0, continuous branch built from the recurrence
// lgamma(z) = lgamma(z+1) - log z and the Stirling series. Only ever
// exponentiated in ratios here, so the additive 2*pi*i ambiguity of
// "log of Gamma" never matters.
cld log_gamma(cld z);

} // namespace symsq::lfun
