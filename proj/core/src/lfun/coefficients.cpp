#include "symsq/lfun/coefficients.hpp"

#include "symsq/errors.hpp"

namespace symsq::lfun {

std::vector<long double> symsq_coeffs(const hecke::Eigenform& f, std::size_t N) {
    if (f.coverage < N)
        throw coverage_error("symsq_coeffs: lambda coverage too small", N);
    std::vector<long double> b(N + 1, 0.0L);
    if (N == 0) return b;
    b[1] = 1.0L;
    // lambda(m^2) for m <= N, then fold in the zeta(2s) factor
    std::vector<long double> lam_sq(N + 1, 0.0L);
    for (std::size_t m = 1; m <= N; ++m)
        lam_sq[m] = static_cast<long double>(f.lambda_d(m * m));
    for (std::size_t n = 2; n <= N; ++n) {
        long double acc = 0;
        for (std::size_t d = 1; d * d <= n; ++d) {
            if (n % (d * d) != 0) continue;
            acc += lam_sq[n / (d * d)];
        }
        b[n] = acc;
    }
    return b;
}

std::vector<std::uint32_t> d3_table(std::size_t N) {
    // d_3 = 1 * 1 * 1 by two divisor convolutions
    std::vector<std::uint32_t> d2(N + 1, 0), d3(N + 1, 0);
    for (std::size_t d = 1; d <= N; ++d)
        for (std::size_t m = d; m <= N; m += d) d2[m] += 1;
    for (std::size_t d = 1; d <= N; ++d)
        for (std::size_t m = d; m <= N; m += d) d3[m] += d2[m / d];
    return d3;
}

} // namespace symsq::lfun
