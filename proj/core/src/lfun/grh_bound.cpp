#include "symsq/lfun/grh_bound.hpp"

#include "symsq/arith/primes.hpp"
#include "symsq/arith/summation.hpp"
#include "symsq/errors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace symsq::lfun {

double lambda0() {
    // bisection on e^{-x} - x - x^2/2, decreasing in x
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        double v = std::exp(-mid) - mid - mid * mid / 2;
        if (v > 0) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double smoothing_weight(std::uint64_t p, double x) {
    if (p < 2 || static_cast<double>(p) >= x)
        throw std::domain_error("smoothing_weight: need 2 <= p < x");
    double lx = std::log(x);
    return std::pow(static_cast<double>(p), -lambda0() / lx) *
           (std::log(x / static_cast<double>(p)) / lx);
}

GrhBoundReport grh_bound_report(const hecke::Eigenform& f, double x, GrhVariant variant) {
    if (x < 2) throw std::domain_error("grh_bound_report: x >= 2 required");
    if (f.coverage < static_cast<std::uint64_t>(x))
        throw coverage_error("grh_bound_report: lambda coverage below x",
                             static_cast<std::uint64_t>(x));

    GrhBoundReport rep;
    rep.x = x;
    rep.variant = variant;

    const double l0 = lambda0();
    const double lx = std::log(x);
    const double sigma = 0.5 + l0 / lx;

    arith::CompensatedSum<long double> rhs;
    for (std::uint64_t p : f.primes->primes) {
        if (static_cast<double>(p) > x) break;
        double weight = (static_cast<double>(p) >= x)
                            ? 0.0
                            : std::log(x / static_cast<double>(p)) / lx;
        rhs.add(static_cast<long double>(f.lambda_d(p * p)) *
                powl(static_cast<long double>(p), -static_cast<long double>(sigma)) * weight);
    }
    if (variant == GrhVariant::simplified) {
        double logk = std::log(static_cast<double>(f.weight));
        for (std::uint64_t p : f.primes->primes) {
            if (static_cast<double>(p) > logk) break;
            rhs.add((static_cast<long double>(f.lambda_d(p * p * p * p)) -
                     static_cast<long double>(f.lambda_d(p * p))) /
                    (2.0L * static_cast<long double>(p)));
        }
    }
    rhs.add(0.5L * logl(static_cast<long double>(lx)));
    rhs.add((1.0L + static_cast<long double>(l0)) *
            logl(static_cast<long double>(f.weight)) / static_cast<long double>(lx));
    rep.rhs_explicit = static_cast<double>(rhs.value());

    LValueResult central = lvalue(f, cld(0.5L, 0.0L));
    double mag = std::abs(central.value);
    if (mag <= central.abs_error) {
        rep.indeterminate = true;
        rep.lhs = -std::numeric_limits<double>::infinity();
        rep.margin = std::numeric_limits<double>::infinity();
        return rep;
    }
    rep.lhs = std::log(mag);
    rep.margin = rep.rhs_explicit - rep.lhs;
    return rep;
}

} // namespace symsq::lfun
