#pragma once

// Test-side oracles: independent computation paths for the values the main
// library is checked against. Nothing here may call into the code path it
// verifies.

#include "symsq/hecke/eigenforms.hpp"
#include "symsq/lfun/coefficients.hpp"
#include "symsq/lfun/log_gamma.hpp"

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracles {

// tau(1..N) by multiplying the factors (1 - q^n)^24 one n at a time;
// independent of the pentagonal/eta route used by the library.
inline std::vector<mpz_class> tau_product(std::size_t N) {
    std::vector<mpz_class> series(N + 1, mpz_class(0));
    series[0] = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        for (int rep = 0; rep < 24; ++rep) {
            // multiply by (1 - q^n)
            for (std::size_t i = N; i >= n; --i) series[i] -= series[i - n];
        }
    }
    // shift by q
    std::vector<mpz_class> tau(N + 1, mpz_class(0));
    for (std::size_t i = 1; i <= N; ++i) tau[i] = series[i - 1];
    return tau;
}

// Eratosthenes, no segmentation
inline std::vector<std::uint64_t> sieve(std::uint64_t limit) {
    std::vector<bool> comp(limit + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (comp[p]) continue;
        out.push_back(p);
        for (std::uint64_t q = p * p; q <= limit; q += p) comp[q] = true;
    }
    return out;
}

// dim S_k(SL_2(Z)) by counting monomials E4^a E6^b of weight k and removing
// the Eisenstein line
inline int cusp_dim_by_enumeration(int weight) {
    if (weight % 2 != 0 || weight < 4) return 0;
    int count = 0;
    for (int a = 0; 4 * a <= weight; ++a)
        if ((weight - 4 * a) % 6 == 0) ++count;
    return count > 0 ? count - 1 : 0;
}

// (1/pi) int_0^pi cos(nu t - x sin t) dt by adaptive Simpson
inline long double bessel_integral(unsigned nu, long double x) {
    auto f = [&](long double t) { return cosl(nu * t - x * sinl(t)); };
    std::function<long double(long double, long double, long double, long double,
                              long double, int)>
        simpson = [&](long double a, long double b, long double fa, long double fb,
                      long double fm, int depth) -> long double {
        long double m = (a + b) / 2;
        long double lm = (a + m) / 2, rm = (m + b) / 2;
        long double flm = f(lm), frm = f(rm);
        long double whole = (b - a) / 6 * (fa + 4 * fm + fb);
        long double left = (m - a) / 6 * (fa + 4 * flm + fm);
        long double right = (b - m) / 6 * (fm + 4 * frm + fb);
        if (depth > 24 || fabsl(left + right - whole) < 1e-17L)
            return left + right + (left + right - whole) / 15;
        return simpson(a, m, fa, fm, flm, depth + 1) +
               simpson(m, b, fm, fb, frm, depth + 1);
    };
    const long double pi = 3.14159265358979323846264338327950288L;
    long double total = 0;
    int panels = 16 + static_cast<int>(nu + x);
    for (int i = 0; i < panels; ++i) {
        long double a = pi * i / panels, b = pi * (i + 1) / panels;
        total += simpson(a, b, f(a), f(b), f((a + b) / 2), 0);
    }
    return total / pi;
}

// Kloosterman sum the slow, obvious way: complex exponentials and gcd tests.
inline double kloosterman_brute(std::int64_t m, std::int64_t n, std::uint64_t c) {
    if (c == 1) return 1.0;
    std::complex<long double> acc = 0;
    const long double pi = 3.14159265358979323846264338327950288L;
    for (std::uint64_t h = 1; h < c; ++h) {
        if (std::gcd(h, c) != 1) continue;
        std::uint64_t hbar = 0;
        for (std::uint64_t t = 1; t < c; ++t)
            if ((h * t) % c == 1) { hbar = t; break; }
        long double arg = 2 * pi *
                          (static_cast<long double>(((m % (std::int64_t)c + (std::int64_t)c) % c) * h % c) +
                           static_cast<long double>(((n % (std::int64_t)c + (std::int64_t)c) % c) * hbar % c)) /
                          c;
        acc += std::complex<long double>(cosl(arg), sinl(arg));
    }
    return static_cast<double>(acc.real());
}

// Lambda(s, sym^2 f) through the completed-integral (theta-kernel) route:
//
//   Lambda(s) = int_1^infty Phi(y) (y^s + y^{1-s}) dy/y,
//   Phi(y) = sum_n b(n) K(n y),   K = inverse Mellin of the gamma factor,
//
// which exists because Lambda is entire with the symmetric functional
// equation. Evaluated as Phi(y) = (1/2pi) int gamma(c+it) D(c+it) y^{-c-it} dt
// with D the truncated Dirichlet series on the line. Entirely disjoint from
// the AFE path: no reflection factor, no 1/u pole, no per-term weights.
inline std::complex<long double> completed_lambda_theta(const symsq::hecke::Eigenform& f,
                                                        std::complex<long double> s) {
    using cld = std::complex<long double>;
    const long double pi = 3.14159265358979323846264338327950288L;
    const int weight = f.weight;
    const long double mu[3] = {1.0L, static_cast<long double>(weight - 1),
                               static_cast<long double>(weight)};

    auto gamma_log = [&](cld z) {
        cld total = -1.5L * z * logl(pi);
        for (long double m : mu) total += symsq::lfun::log_gamma((z + m) / 2.0L);
        return total;
    };

    // conductor scale fixes both the coefficient count and the y range
    long double xscale = 1;
    for (long double m : mu) xscale *= std::abs(cld(0.5L, 0) + m) / 2.0L;
    xscale = sqrtl(xscale) / powl(pi, 1.5L);
    std::size_t n_terms = static_cast<std::size_t>(14 * xscale) + 60;
    auto b = symsq::lfun::symsq_coeffs(f, n_terms);

    const long double c0 = 2.6L, T = 64.0L, h = 0.125L;
    std::size_t half = static_cast<std::size_t>(T / h);
    std::vector<cld> grid(2 * half + 1);
    for (std::size_t g = 0; g < grid.size(); ++g) {
        long double t = (static_cast<long double>(g) - static_cast<long double>(half)) * h;
        cld u(c0, t);
        cld d = 0;
        for (std::size_t n = 1; n <= n_terms; ++n)
            d += static_cast<long double>(b[n]) * std::exp(-u * logl((long double)n));
        grid[g] = std::exp(gamma_log(u)) * d * (h / (2 * pi));
    }

    auto phi = [&](long double y) {
        long double ly = logl(y);
        cld rot = std::polar<long double>(1.0L, -h * ly);
        cld up(1.0L, 0.0L), down(1.0L, 0.0L);
        cld acc = grid[half];
        for (std::size_t k = 1; k <= half; ++k) {
            up *= rot;
            down *= std::conj(rot);
            acc += grid[half + k] * up + grid[half - k] * down;
        }
        return acc * expl(-c0 * ly);
    };

    // int_1^Y phi(y) (y^s + y^{1-s}) dy/y, composite Simpson on a fine grid;
    // the step is chosen for ~1e-10 relative error so the oracle stays well
    // inside any tolerance it backs
    long double Y = 14 * xscale + 12;
    std::size_t steps = 2 * (static_cast<std::size_t>(Y * 60) + 256);
    long double dy = (Y - 1) / steps;
    cld total = 0;
    for (std::size_t i = 0; i <= steps; ++i) {
        long double y = 1 + i * dy;
        long double w = (i == 0 || i == steps) ? 1 : (i % 2 ? 4 : 2);
        cld val = phi(y) * (std::exp((s - 1.0L) * logl(y)) + std::exp(-s * logl(y)));
        total += w * val;
    }
    return total * (dy / 3.0L);
}

} // namespace oracles
