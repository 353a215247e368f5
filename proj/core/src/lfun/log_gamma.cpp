#include "symsq/lfun/log_gamma.hpp"

#include <stdexcept>

namespace symsq::lfun {

namespace {

// B_{2n} / (2n (2n-1)) for the Stirling tail
constexpr long double kStirling[] = {
    1.0L / 12,
    -1.0L / 360,
    1.0L / 1260,
    -1.0L / 1680,
    1.0L / 1188,
    -691.0L / 360360,
    1.0L / 156,
    -3617.0L / 122400,
    43867.0L / 244188,
    -174611.0L / 125400,
};

constexpr long double kHalfLog2Pi = 0.91893853320467274178032973640561764L;

} // namespace

cld log_gamma(cld z) {
    if (z.real() <= 0)
        throw std::domain_error("log_gamma: Re z > 0 required");
    cld shift = 0;
    while (z.real() < 24) {
        shift -= std::log(z);
        z += 1;
    }
    cld inv = 1.0L / z;
    cld inv2 = inv * inv;
    cld tail = 0;
    cld zk = inv;
    for (long double c : kStirling) {
        tail += c * zk;
        zk *= inv2;
    }
    return (z - 0.5L) * std::log(z) - z + kHalfLog2Pi + tail + shift;
}

} // namespace symsq::lfun
