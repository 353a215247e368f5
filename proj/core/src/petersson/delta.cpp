#include "symsq/petersson/delta.hpp"

#include "symsq/arith/parallel.hpp"
#include "symsq/arith/summation.hpp"
#include "symsq/petersson/bessel.hpp"
#include "symsq/petersson/kloosterman.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace symsq::petersson {

namespace {
constexpr long double kPi = 3.14159265358979323846264338327950288L;
}

double delta_tail_bound(int weight, std::uint64_t m, std::uint64_t n, std::uint64_t c_from) {
    unsigned nu = static_cast<unsigned>(weight - 1);
    long double sqrt_mn = sqrtl(static_cast<long double>(m) * static_cast<long double>(n));
    // formula only valid once x_c <= 2 sqrt(nu+1) for all c > c_from
    long double c_min_valid = 2 * kPi * sqrt_mn / sqrtl(static_cast<long double>(nu) + 1);
    if (static_cast<long double>(c_from) < c_min_valid)
        throw std::domain_error("delta_tail_bound: c_from below the first-term-majorant regime");
    long double log_b = nu * logl(2 * kPi * sqrt_mn) - lgammal(static_cast<long double>(nu) + 1);
    long double log_tail = logl(2.0L) + 0.5L * logl(static_cast<long double>(std::min(m, n))) +
                           log_b + (1.0L - nu) * logl(static_cast<long double>(c_from)) -
                           logl(static_cast<long double>(nu) - 1);
    long double geom = 2 * kPi * expl(log_tail); // includes the 2 pi prefactor
    if (geom < 1e-307L) geom = 1e-307L;          // keep the enclosure positive and finite
    return static_cast<double>(geom);
}

DeltaResult delta_geometric(int weight, std::uint64_t m, std::uint64_t n,
                            std::uint64_t c_max, int threads) {
    if (weight % 2 != 0 || weight < 12)
        throw std::domain_error("delta_geometric: even weight >= 12 required");
    if (m == 0 || n == 0 || c_max == 0)
        throw std::domain_error("delta_geometric: m, n, c_max >= 1");

    unsigned nu = static_cast<unsigned>(weight - 1);
    double sign = (weight % 4 == 0) ? 1.0 : -1.0; // i^kappa for even kappa
    long double sqrt_mn = sqrtl(static_cast<long double>(m) * static_cast<long double>(n));

    // decide the stopping point first so the sum order is fixed
    std::uint64_t series_safe_c =
        static_cast<std::uint64_t>(ceill(2 * kPi * sqrt_mn / sqrtl(static_cast<long double>(nu) + 1))) + 1;
    std::uint64_t c_stop = c_max;
    for (std::uint64_t c = series_safe_c; c <= c_max; c += (c / 8) + 1) {
        if (delta_tail_bound(weight, m, n, c) < 1e-18) {
            c_stop = c;
            break;
        }
    }

    std::vector<double> terms(c_stop);
    arith::parallel_for(c_stop, [&](std::size_t idx) {
        std::uint64_t c = idx + 1;
        double x = static_cast<double>(4 * kPi * sqrt_mn / static_cast<long double>(c));
        double j = bessel_j(nu, x);
        if (j == 0.0) { terms[idx] = 0.0; return; }
        terms[idx] = kloosterman(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n),
                                 c) / static_cast<double>(c) * j;
    }, threads);

    arith::CompensatedSum<long double> acc;
    for (double t : terms) acc.add(t);

    DeltaResult out;
    out.c_max = c_max;
    out.c_stop = c_stop;
    out.value = (m == n ? 1.0 : 0.0) +
                static_cast<double>(2 * kPi * sign * acc.value());
    out.tail_bound = delta_tail_bound(weight, m, n, std::max(c_stop, series_safe_c));
    if (c_stop < series_safe_c) {
        // terms between c_stop and the series-safe point were not summed and
        // are only covered by the trivial |S/c| <= 1, |J| <= 1 bound
        out.tail_bound += static_cast<double>(2 * kPi) *
                          static_cast<double>(series_safe_c - c_stop);
    }
    return out;
}

double delta_spectral(const Family& family, std::uint64_t m, std::uint64_t n) {
    arith::CompensatedSum<long double> acc;
    for (std::size_t i = 0; i < family.forms.size(); ++i)
        acc.add(static_cast<long double>(family.omega_inv[i]) *
                family.forms[i].lambda_d(m) * family.forms[i].lambda_d(n));
    return static_cast<double>(acc.value());
}

} // namespace symsq::petersson
