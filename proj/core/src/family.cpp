#include "symsq/family.hpp"

#include "symsq/arith/parallel.hpp"

#include <cmath>

namespace symsq {

namespace {
// 2 pi^2; this constant is pinned by the Petersson identity
// sum_f omega_f^{-1} lambda(m) lambda(n) = Delta_{m,n} together with
// L(s) = zeta(2s) sum lambda(n^2) n^{-s}.
constexpr double kTwoPiSquared = 19.739208802178717237668981999752;
}

double harmonic_weight(const hecke::Eigenform& f) {
    lfun::LValueResult l1 = lfun::lvalue(f, lfun::cld(1.0L, 0.0L));
    return (f.weight - 1) / kTwoPiSquared * l1.value.real();
}

Family build_family(int weight, std::uint64_t coverage, unsigned precision_bits,
                    hecke::CacheStore* cache, int threads) {
    Family fam;
    fam.weight = weight;

    // the AFE at s in {1/2, 1} may need more coefficients than the caller asked for
    std::uint64_t afe_need = std::max(lfun::afe_terms_needed(weight, lfun::cld(0.5L, 0.0L)),
                                      lfun::afe_terms_needed(weight, lfun::cld(1.0L, 0.0L)));
    coverage = std::max(coverage, afe_need);

    fam.forms = hecke::eigenforms(weight, coverage, precision_bits, cache, threads);
    std::size_t n = fam.forms.size();
    fam.omega.resize(n);
    fam.omega_inv.resize(n);
    fam.central.resize(n);
    fam.central_err.resize(n);

    arith::parallel_for(n, [&](std::size_t i) {
        const auto& f = fam.forms[i];
        fam.omega[i] = harmonic_weight(f);
        fam.omega_inv[i] = 1.0 / fam.omega[i];
        lfun::LValueResult c = lfun::lvalue(f, lfun::cld(0.5L, 0.0L));
        fam.central[i] = static_cast<double>(c.value.real());
        fam.central_err[i] = c.abs_error;
    }, threads);

    for (std::size_t i = 0; i < n; ++i)
        if (!fam.central_defined(i)) ++fam.indeterminate_count;
    return fam;
}

} // namespace symsq
