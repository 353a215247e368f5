#include "symsq/lfun/lvalue.hpp"

#include "symsq/errors.hpp"
#include "symsq/lfun/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <vector>

namespace symsq::lfun {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr long double kGridHalfWidth = 64.0L;
constexpr long double kGridStep = 0.125L;

struct AfeTables {
    long double c = 0;
    // quadrature weights W[g] for the symmetric grid t_g = (g - G) h,
    // V(n) = n^{-c} * sum_g W[g] exp(-i t_g log n)
    std::vector<cld> w1, w2;
};

cld gamma_log(int weight, cld s) {
    const long double mu[3] = {1.0L, static_cast<long double>(weight - 1),
                               static_cast<long double>(weight)};
    cld total = -1.5L * s * logl(kPi);
    for (long double m : mu) total += log_gamma((s + m) / 2.0L);
    return total;
}

AfeTables build_tables(int weight, cld s) {
    AfeTables tab;
    tab.c = std::max<long double>(2.5L, s.real() + 0.75L);
    cld log_gs = gamma_log(weight, s);

    std::size_t half = static_cast<std::size_t>(kGridHalfWidth / kGridStep);
    std::size_t count = 2 * half + 1;
    tab.w1.resize(count);
    tab.w2.resize(count);
    for (std::size_t g = 0; g < count; ++g) {
        long double t = (static_cast<long double>(g) - static_cast<long double>(half)) * kGridStep;
        cld u(tab.c, t);
        long double trap = (g == 0 || g + 1 == count) ? 0.5L : 1.0L;
        cld base = trap * kGridStep / (2 * kPi) / u;
        tab.w1[g] = base * std::exp(gamma_log(weight, s + u) - log_gs);
        tab.w2[g] = base * std::exp(gamma_log(weight, (1.0L - s) + u) - log_gs);
    }
    return tab;
}

// V(n) for one weight table; log_n >= 0
cld weight_value(const std::vector<cld>& w, long double c, long double log_n) {
    // exp(-i t_g log n) walks the uniform grid by one complex rotation
    std::size_t count = w.size();
    std::size_t half = count / 2;
    cld rot = std::polar<long double>(1.0L, -kGridStep * log_n);
    cld phase(1.0L, 0.0L); // at t = 0
    cld acc = w[half];
    cld up = phase, down = phase;
    for (std::size_t k = 1; k <= half; ++k) {
        up *= rot;           // exp(-i t log n), t > 0
        down *= std::conj(rot);
        acc += w[half + k] * up + w[half - k] * down;
    }
    return acc * expl(-c * log_n);
}

struct TableKey {
    int weight;
    long double re, im;
    bool operator<(const TableKey& o) const {
        if (weight != o.weight) return weight < o.weight;
        if (re != o.re) return re < o.re;
        return im < o.im;
    }
};

const AfeTables& cached_tables(int weight, cld s) {
    static std::map<TableKey, AfeTables> cache;
    static std::mutex mutex;
    TableKey key{weight, s.real(), s.imag()};
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_tables(weight, s)).first;
    return it->second;
}

long double conductor_scale(int weight, cld s) {
    const long double mu[3] = {1.0L, static_cast<long double>(weight - 1),
                               static_cast<long double>(weight)};
    long double prod = 1;
    for (long double m : mu) prod *= std::abs(s + m) / 2.0L;
    return sqrtl(prod) / powl(kPi, 1.5L);
}

} // namespace

cld gamma_factor_log(int weight, cld s) { return gamma_log(weight, s); }

std::size_t afe_terms_needed(int weight, cld s) {
    long double x = std::max(conductor_scale(weight, s), conductor_scale(weight, 1.0L - s));
    return static_cast<std::size_t>(12 * x) + 80;
}

LValueResult lvalue(const hecke::Eigenform& f, cld s) {
    if (s.real() < 0 || s.real() > 4.5)
        throw std::domain_error("lvalue: Re s outside [0, 4.5]");
    int weight = f.weight;
    std::size_t n_max = afe_terms_needed(weight, s);
    if (f.coverage < n_max)
        throw coverage_error("lvalue: lambda coverage too small for the AFE truncation", n_max);

    const AfeTables& tab = cached_tables(weight, s);
    std::vector<long double> b = symsq_coeffs(f, n_max);
    std::vector<std::uint32_t> d3 = d3_table(n_max);

    cld sum1 = 0, sum2 = 0;
    long double scale1 = 0, scale2 = 0;       // sum of |terms|, for error scaling
    long double tail_majorant = 0;
    std::size_t used = 0;

    int quiet_streak = 0;
    long double window_max = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        long double log_n = logl(static_cast<long double>(n));
        cld v1 = weight_value(tab.w1, tab.c, log_n);
        cld v2 = weight_value(tab.w2, tab.c, log_n);
        cld t1 = b[n] * std::exp(-s * log_n) * v1;
        cld t2 = b[n] * std::exp((s - 1.0L) * log_n) * v2;
        sum1 += t1;
        sum2 += t2;
        scale1 += std::abs(t1);
        scale2 += std::abs(t2);
        used = n;

        // majorant of the largest possible remaining term at this index
        long double maj = d3[n] * (std::abs(v1) * expl(-s.real() * log_n) +
                                   std::abs(v2) * expl((s.real() - 1.0L) * log_n));
        window_max = std::max(window_max, maj);
        if (maj < 1e-15L * (scale1 + scale2 + 1e-30L)) {
            if (++quiet_streak >= 8) {
                tail_majorant = 8 * window_max;
                break;
            }
        } else {
            quiet_streak = 0;
            window_max = maj;
        }
        if (n == n_max) tail_majorant = 64 * maj; // did not go quiet: be loud about it
    }

    LValueResult out;
    out.s = s;
    out.value = sum1 + sum2;
    out.terms_used = used;
    long double quad = 1e-14L * (scale1 + scale2) + 1e-17L;
    out.abs_error = static_cast<double>(static_cast<long double>(tail_majorant) + quad);
    return out;
}

LValueResult completed_lambda(const hecke::Eigenform& f, cld s) {
    LValueResult l = lvalue(f, s);
    cld factor = std::exp(gamma_log(f.weight, s));
    LValueResult out;
    out.s = s;
    out.value = factor * l.value;
    out.abs_error = static_cast<double>(std::abs(factor)) * l.abs_error +
                    1e-16 * std::abs(out.value);
    out.terms_used = l.terms_used;
    return out;
}

} // namespace symsq::lfun
