#include "symsq/petersson/bessel.hpp"

#include "symsq/arith/summation.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <vector>

namespace symsq::petersson {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

// 32-point Gauss-Legendre nodes/weights on [-1,1], computed once by Newton
// iteration on P_32.
struct GaussLegendre {
    std::vector<long double> node, weight;
    GaussLegendre() {
        const int n = 32;
        node.resize(n);
        weight.resize(n);
        for (int i = 0; i < n; ++i) {
            long double x = cosl(kPi * (i + 0.75L) / (n + 0.5L));
            for (int it = 0; it < 100; ++it) {
                long double p0 = 1, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                long double dp = n * (x * p1 - p0) / (x * x - 1);
                long double dx = p1 / dp;
                x -= dx;
                if (fabsl(dx) < 1e-19L) break;
            }
            long double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            long double dp = n * (x * p1 - p0) / (x * x - 1);
            node[i] = x;
            weight[i] = 2.0L / ((1 - x * x) * dp * dp);
        }
    }
};

const GaussLegendre& gauss_legendre() {
    static GaussLegendre gl;
    return gl;
}

double bessel_series(unsigned nu, long double x) {
    long double lead = nu * logl(x / 2) - lgammal(static_cast<long double>(nu) + 1);
    if (lead < -11350.0L) return 0.0; // below long double range
    arith::CompensatedSum<long double> sum;
    long double term = 1.0L;
    sum.add(term);
    long double q = x * x / 4;
    for (unsigned k = 1; k < 4000; ++k) {
        term *= -q / (static_cast<long double>(k) * (nu + k));
        sum.add(term);
        if (fabsl(term) < 1e-24L * fabsl(sum.value()) + 1e-4500L) break;
    }
    return static_cast<double>(expl(lead) * sum.value());
}

double bessel_integral(unsigned nu, long double x) {
    // (1/pi) int_0^pi cos(nu t - x sin t) dt; ~ (nu+x)/(2 pi) oscillations,
    // 32 Gauss points per panel of width <= 6/( (nu+x)/pi ) keeps >30 points
    // per cycle.
    const auto& gl = gauss_legendre();
    long double total_cycles = (nu + x) / (2 * kPi);
    int panels = std::max(8, static_cast<int>(total_cycles * 2) + 1);
    arith::CompensatedSum<long double> acc;
    long double h = kPi / panels;
    for (int p = 0; p < panels; ++p) {
        long double a = p * h, mid = a + h / 2, half = h / 2;
        for (std::size_t i = 0; i < gl.node.size(); ++i) {
            long double t = mid + half * gl.node[i];
            acc.add(gl.weight[i] * half * cosl(nu * t - x * sinl(t)));
        }
    }
    return static_cast<double>(acc.value() / kPi);
}

} // namespace

long double bessel_j_log_majorant(unsigned nu, long double x) {
    if (x <= 0) return nu == 0 ? 0.0L : -std::numeric_limits<long double>::infinity();
    return nu * logl(x / 2) - lgammal(static_cast<long double>(nu) + 1);
}

double bessel_j(unsigned nu, double x) {
    if (x < 0) return (nu % 2 == 0 ? 1 : -1) * bessel_j(nu, -x);
    if (x == 0) return nu == 0 ? 1.0 : 0.0;
    long double xl = x;
    if (xl <= 2 * sqrtl(static_cast<long double>(nu) + 1))
        return bessel_series(nu, xl);
    return bessel_integral(nu, xl);
}

} // namespace symsq::petersson
