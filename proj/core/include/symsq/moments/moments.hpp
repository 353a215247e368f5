#pragma once

#include "symsq/family.hpp"
#include "symsq/mollifier/mollifier.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace symsq::moments {

// sum^h |L(1/2)|^{2k}; forms whose central value is indeterminate contribute
// their error bound as |L| and are counted by the family's flag.
double harmonic_moment(const Family& family, double k);

struct TwistedMoment {
    double value = 0;     // sum^h L(1/2) lambda(l^2)
    double residual = 0;  // sqrt(l) value + log l - log kappa  (~ the constant C)
};

TwistedMoment twisted_first_moment(const Family& family, std::uint64_t l);

enum class MollifiedMode { direct, expansion };

// sum^h L(1/2) N(f, 2k-1). Direct mode multiplies computed values; expansion
// mode contracts the lambda-basis coefficients of N against per-index twisted
// moments. The two routes share inputs but exercise disjoint algebra, so their
// agreement certifies the coefficient machinery.
double mollified_first_moment(const Family& family,
                              const mollifier::MollifierParams& params, double k,
                              MollifiedMode mode, std::uint64_t support_cap);

// sum^h prod_j (N_j(f,2k) + Q_j(f,2k))
double prop5_quantity(const Family& family, const mollifier::MollifierParams& params,
                      double k);

// sum^h |L(1/2)|^2 N(f, 2k-2)
double prop6_quantity(const Family& family, const mollifier::MollifierParams& params,
                      double k);

struct HolderCheck {
    std::string label;
    double lhs = 0;
    double rhs = 0;
    bool pass = false;       // lhs <= rhs (1 + 1e-10)
    bool is_inequality = true; // identities report |lhs-rhs| in lhs/rhs instead
};

// The exact Hoelder chains (no implied constants): one three-factor chain for
// 0 < k < 1/2, the four-factor nonvanishing chain at k = 0, the two-factor
// chain for k > 1/2, plus the exponent identities behind them. 2k = 1 is a
// domain error.
std::vector<HolderCheck> holder_verify(const Family& family,
                                       const mollifier::MollifierParams& params, double k);

struct TailMeasure {
    double threshold = 0;
    double measure = 0;   // sum^h over forms with log(|L|/sqrt(log kappa)) >= V
    int excluded = 0;     // indeterminate central values
};

TailMeasure tail_measure(const Family& family, double v);

// Everything one weight contributes to a report: moment values, chain
// margins, twisted residuals, and the indeterminate-sign count.
struct MomentReport {
    int kappa = 0;
    double k = 0;
    double harmonic_moment = 0;
    double mollified_first = 0;
    double prop5_value = 0;   // NaN when r_k is undefined
    double prop6_value = 0;
    std::vector<HolderCheck> holder;                    // empty when 2k = 1
    std::vector<std::pair<std::uint64_t, TwistedMoment>> residuals; // l in {1,2,3,5}
    std::vector<double> interval_prime_sums;            // sum 1/p per interval, reported
    int flags = 0;
};

MomentReport build_moment_report(const Family& family,
                                 const mollifier::MollifierParams& params, double k,
                                 std::uint64_t support_cap);

struct ScanRow {
    int kappa = 0;
    int dim = 0;
    double k = 0;
    double loglog = 0;
    double moment = 0;
    double mollified_first = 0;
    double prop5 = 0;            // NaN when r_k is undefined at this k
    double prop6 = 0;
    double holder_min_margin = 0;// NaN when no chain applies (2k = 1)
    int flags = 0;               // indeterminate-sign count
};

struct ScanOptions {
    int mollifier_M = 1;
    double mollifier_A = 1.0;
    std::uint64_t support_cap = 2'000'000;
    unsigned precision_bits = 128;
    hecke::CacheStore* cache = nullptr;
    int threads = 0;
};

struct ScanResult {
    std::vector<ScanRow> rows;
    std::vector<int> skipped;     // dim-0 weights
    double fitted_slope = 0;      // log(moment) against log log kappa
    double conjectured_slope = 0; // k(2k+1)
    bool slope_defined = false;
};

ScanResult scaling_scan(const std::vector<int>& weights, double k, const ScanOptions& opt);

} // namespace symsq::moments
