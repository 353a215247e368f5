#include "symsq/mollifier/classify.hpp"

#include "symsq/arith/primes.hpp"
#include "symsq/arith/summation.hpp"
#include "symsq/errors.hpp"
#include "symsq/lfun/grh_bound.hpp"

#include <cmath>

namespace symsq::mollifier {

namespace {

double s_weight_or_zero(std::uint64_t p, double x) {
    if (static_cast<double>(p) >= x) return 0.0; // boundary p = x: log(x/p) = 0
    return lfun::smoothing_weight(p, x);
}

} // namespace

ClassifyReport classify(const hecke::Eigenform& f, const MollifierParams& params,
                        const ClassifyThresholds& th) {
    ClassifyReport rep;
    std::size_t J = params.J;
    double kappa = static_cast<double>(params.kappa);

    std::vector<std::vector<std::uint64_t>> primes(J);
    for (std::size_t j = 1; j <= J; ++j) {
        auto [lo, hi] = params.intervals[j - 1];
        primes[j - 1] = arith::prime_range(lo, hi);
        if (!primes[j - 1].empty() && primes[j - 1].back() > f.coverage)
            throw coverage_error("classify: interval exceeds lambda coverage",
                                 primes[j - 1].back());
    }

    rep.m_lj.assign(J, std::vector<double>(J, 0.0));
    for (std::size_t l = 1; l <= J; ++l) {
        for (std::size_t j = l; j <= J; ++j) {
            double x = std::pow(kappa, params.alphas[j - 1]);
            arith::CompensatedSum<long double> acc;
            for (std::uint64_t p : primes[l - 1])
                acc.add(static_cast<long double>(f.lambda_d(p * p)) /
                        sqrtl(static_cast<long double>(p)) * s_weight_or_zero(p, x));
            rep.m_lj[l - 1][j - 1] = static_cast<double>(acc.value());
        }
    }

    {
        arith::CompensatedSum<long double> acc;
        for (std::uint64_t p : primes[0])
            acc.add(static_cast<long double>(f.lambda_d(p * p)) /
                    sqrtl(static_cast<long double>(p)));
        rep.p1 = static_cast<double>(acc.value());
    }
    rep.in_t = std::fabs(rep.p1) <= params.ells[0] / th.m_divisor_primary;

    // P_m(f) = sum_{2^m < p <= 2^{m+1}} (lambda(p^4) - lambda(p^2)) / (2p)
    double m_top = std::log(std::log(kappa)) / std::log(2.0);
    std::size_t m_max = (m_top < 0) ? 0 : static_cast<std::size_t>(m_top);
    rep.p_m.resize(m_max + 1, 0.0);
    for (std::size_t m = 0; m <= m_max; ++m) {
        auto ps = arith::prime_range(std::pow(2.0, static_cast<double>(m)),
                                     std::pow(2.0, static_cast<double>(m + 1)));
        arith::CompensatedSum<long double> acc;
        for (std::uint64_t p : ps) {
            if (p > f.coverage) throw coverage_error("classify: P_m beyond coverage", p);
            acc.add((static_cast<long double>(f.lambda_d(p * p * p * p)) -
                     static_cast<long double>(f.lambda_d(p * p))) /
                    (2.0L * static_cast<long double>(p)));
        }
        rep.p_m[m] = static_cast<double>(acc.value());
    }

    // partition class: level m is clean when |M_{m,l}| <= ell_m / 10^3 for all
    // l in [m, J]; s_class = number of consecutive clean levels from m = 1
    auto level_clean = [&](std::size_t m, double divisor) {
        for (std::size_t l = m; l <= J; ++l)
            if (std::fabs(rep.m_lj[m - 1][l - 1]) > params.ells[m - 1] / divisor)
                return false;
        return true;
    };
    std::size_t clean = 0;
    while (clean < J && level_clean(clean + 1, th.m_divisor_primary)) ++clean;
    rep.s_class = clean;

    // strict reading: the violating level must be loud (ell/200); only defined
    // when that holds (the two-threshold sets leave a gap band)
    if (clean == J) {
        rep.s_class_strict = J;
    } else {
        std::size_t v = clean + 1;
        bool loud = false;
        for (std::size_t l = v; l <= J; ++l)
            if (std::fabs(rep.m_lj[v - 1][l - 1]) > params.ells[v - 1] / th.m_divisor_loud)
                loud = true;
        if (clean == 0 || loud) rep.s_class_strict = clean;
    }

    for (std::size_t m = rep.p_m.size(); m-- > 0;) {
        if (std::fabs(rep.p_m[m]) > std::pow(th.p_decay_base, -static_cast<double>(m) / 10.0)) {
            rep.p_class = m;
            break;
        }
    }
    return rep;
}

} // namespace symsq::mollifier
