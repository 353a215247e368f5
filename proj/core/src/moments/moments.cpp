#include "symsq/moments/moments.hpp"

#include "symsq/arith/primes.hpp"
#include "symsq/arith/summation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace symsq::moments {

namespace {

double central_magnitude(const Family& fam, std::size_t i) {
    return fam.central_defined(i) ? std::fabs(fam.central[i]) : fam.central_err[i];
}

} // namespace

double harmonic_moment(const Family& fam, double k) {
    if (k < 0) throw std::domain_error("harmonic_moment: k >= 0 required");
    arith::CompensatedSum<long double> acc;
    for (std::size_t i = 0; i < fam.forms.size(); ++i) {
        long double term = fam.omega_inv[i];
        if (k != 0.0)
            term *= powl(static_cast<long double>(central_magnitude(fam, i)),
                         2.0L * static_cast<long double>(k));
        acc.add(term);
    }
    return static_cast<double>(acc.value());
}

TwistedMoment twisted_first_moment(const Family& fam, std::uint64_t l) {
    TwistedMoment out;
    arith::CompensatedSum<long double> acc;
    for (std::size_t i = 0; i < fam.forms.size(); ++i)
        acc.add(static_cast<long double>(fam.omega_inv[i]) * fam.central[i] *
                fam.forms[i].lambda_d(l * l));
    out.value = static_cast<double>(acc.value());
    out.residual = std::sqrt(static_cast<double>(l)) * out.value +
                   std::log(static_cast<double>(l)) -
                   std::log(static_cast<double>(fam.weight));
    return out;
}

double mollified_first_moment(const Family& fam, const mollifier::MollifierParams& params,
                              double k, MollifiedMode mode, std::uint64_t support_cap) {
    double alpha = 2 * k - 1;
    if (mode == MollifiedMode::direct) {
        arith::CompensatedSum<long double> acc;
        for (std::size_t i = 0; i < fam.forms.size(); ++i)
            acc.add(static_cast<long double>(fam.omega_inv[i]) * fam.central[i] *
                    mollifier::n_total(fam.forms[i], params, alpha));
        return static_cast<double>(acc.value());
    }

    // expansion route: N(f, alpha) = sum_t C(t) lambda(t^2), then contract
    // against the twisted moments sum^h L(1/2) lambda(t^2)
    mollifier::DirichletPolynomial poly = mollifier::expand_polynomial(params, alpha, support_cap);
    mollifier::LambdaBasisPolynomial basis = mollifier::to_lambda_basis(poly);
    arith::CompensatedSum<long double> acc;
    for (auto& [tval, entry] : basis.terms) {
        arith::CompensatedSum<long double> twisted;
        for (std::size_t i = 0; i < fam.forms.size(); ++i) {
            long double lam = (tval == 1) ? 1.0L
                              : static_cast<long double>(fam.forms[i].lambda_d(tval * tval));
            twisted.add(static_cast<long double>(fam.omega_inv[i]) * fam.central[i] * lam);
        }
        acc.add(static_cast<long double>(entry.second) * twisted.value());
    }
    return static_cast<double>(acc.value());
}

double prop5_quantity(const Family& fam, const mollifier::MollifierParams& params, double k) {
    arith::CompensatedSum<long double> acc;
    for (std::size_t i = 0; i < fam.forms.size(); ++i) {
        long double prod = 1;
        for (std::size_t j = 1; j <= params.J; ++j) {
            double p = mollifier::pj(fam.forms[i], params, j);
            long double njv = arith::truncated_exp(params.ells[j - 1],
                                                   2.0L * static_cast<long double>(k) * p);
            prod *= njv + static_cast<long double>(mollifier::qj_from_p(params, j, p));
        }
        acc.add(fam.omega_inv[i] * prod);
    }
    return static_cast<double>(acc.value());
}

double prop6_quantity(const Family& fam, const mollifier::MollifierParams& params, double k) {
    arith::CompensatedSum<long double> acc;
    for (std::size_t i = 0; i < fam.forms.size(); ++i) {
        long double l2 = static_cast<long double>(central_magnitude(fam, i));
        acc.add(static_cast<long double>(fam.omega_inv[i]) * l2 * l2 *
                mollifier::n_total(fam.forms[i], params, 2 * k - 2));
    }
    return static_cast<double>(acc.value());
}

std::vector<HolderCheck> holder_verify(const Family& fam,
                                       const mollifier::MollifierParams& params, double k) {
    if (k < 0) throw std::domain_error("holder_verify: k >= 0 required");
    if (k != 0.0 && std::fabs(2 * k - 1) < 1e-12)
        throw std::domain_error("holder_verify: 2k = 1 is excluded");
    if (k > 0 && k < 0.5) {
        double c = 1.0 / (2.0 / k - 3.0);
        if (!(c > 0 && c < 1))
            throw std::domain_error("holder_verify: c = (2/k - 3)^{-1} outside (0,1)");
    }

    constexpr double kSlack = 1e-10;
    std::vector<HolderCheck> checks;

    auto weighted_sum = [&](auto&& per_form) {
        arith::CompensatedSum<long double> acc;
        for (std::size_t i = 0; i < fam.forms.size(); ++i)
            acc.add(static_cast<long double>(fam.omega_inv[i]) * per_form(i));
        return static_cast<double>(acc.value());
    };

    double lhs = weighted_sum([&](std::size_t i) {
        return static_cast<long double>(fam.central[i]) *
               mollifier::n_total(fam.forms[i], params, 2 * k - 1);
    });

    if (k == 0.0) {
        double a0 = weighted_sum([&](std::size_t i) {
            return fam.central_defined(i) ? 1.0L : 0.0L;
        });
        double b0 = prop6_quantity(fam, params, 0.0);
        // third factor N(f,-1)^4 N(f,2)^2: the reciprocal-bound insertion at
        // k = c = 0 contributes N(f, 2-2k)^{(1-c)/2} = N(f,2)^{1/2} per form
        double c0 = weighted_sum([&](std::size_t i) {
            long double n1 = mollifier::n_total(fam.forms[i], params, -1.0);
            long double n2 = mollifier::n_total(fam.forms[i], params, 2.0);
            return n1 * n1 * n1 * n1 * n2 * n2;
        });
        double rhs = std::pow(a0, 0.25) * std::sqrt(b0) * std::pow(c0, 0.25);
        checks.push_back({"k0-chain", lhs, rhs, lhs <= rhs * (1 + kSlack), true});
        double recip = 1.0 / 4 + 1.0 / 2 + 1.0 / 4;
        checks.push_back({"k0-exponents", recip, 1.0, std::fabs(recip - 1) < 1e-12, false});
    } else if (k < 0.5) {
        double e1 = 2 * (2 - 3 * k);
        double e2 = (2 - 3 * k) / (1 - 2 * k);
        double e3 = 2 * (2 - 3 * k) / (1 - 2 * k);
        double a = harmonic_moment(fam, k);
        double b = prop6_quantity(fam, params, k);
        double c3 = weighted_sum([&](std::size_t i) {
            long double n1 = mollifier::n_total(fam.forms[i], params, 2 * k - 1);
            long double n2 = mollifier::n_total(fam.forms[i], params, 2 - 2 * k);
            return powl(n1, static_cast<long double>(e3)) * n2 * n2;
        });
        double rhs = std::pow(a, 1 / e1) * std::pow(b, 1 / e2) * std::pow(c3, 1 / e3);
        checks.push_back({"lower-bound-chain", lhs, rhs, lhs <= rhs * (1 + kSlack), true});
        double recip = 1 / e1 + 1 / e2 + 1 / e3;
        checks.push_back({"lower-bound-exponents", recip, 1.0,
                          std::fabs(recip - 1) < 1e-12, false});
        // the Hoelder split is pinned by (1-c)/2 * ((1+c)/2 - c/(2k))^{-1} = 2
        double c = 1.0 / (2.0 / k - 3.0);
        double pinned = (1 - c) / 2 / ((1 + c) / 2 - c / (2 * k));
        checks.push_back({"c-identity", pinned, 2.0, std::fabs(pinned - 2) < 1e-12, false});
    } else {
        double a = harmonic_moment(fam, k);
        double cfac = weighted_sum([&](std::size_t i) {
            long double n1 = mollifier::n_total(fam.forms[i], params, 2 * k - 1);
            return powl(n1, 2.0L * static_cast<long double>(k) / (2 * k - 1));
        });
        double rhs = std::pow(a, 1 / (2 * k)) * std::pow(cfac, (2 * k - 1) / (2 * k));
        checks.push_back({"kbig-chain", lhs, rhs, lhs <= rhs * (1 + kSlack), true});
        double recip = 1 / (2 * k) + (2 * k - 1) / (2 * k);
        checks.push_back({"kbig-exponents", recip, 1.0, std::fabs(recip - 1) < 1e-12, false});
    }
    return checks;
}

TailMeasure tail_measure(const Family& fam, double v) {
    TailMeasure out;
    out.threshold = v;
    double sqrt_log_k = std::sqrt(std::log(static_cast<double>(fam.weight)));
    arith::CompensatedSum<long double> acc;
    for (std::size_t i = 0; i < fam.forms.size(); ++i) {
        if (!fam.central_defined(i)) {
            ++out.excluded;
            continue;
        }
        double stat = std::log(std::fabs(fam.central[i]) / sqrt_log_k);
        if (stat >= v) acc.add(fam.omega_inv[i]);
    }
    out.measure = static_cast<double>(acc.value());
    return out;
}

MomentReport build_moment_report(const Family& fam,
                                 const mollifier::MollifierParams& params, double k,
                                 std::uint64_t support_cap) {
    MomentReport rep;
    rep.kappa = fam.weight;
    rep.k = k;
    rep.harmonic_moment = harmonic_moment(fam, k);
    rep.mollified_first = mollified_first_moment(fam, params, k, MollifiedMode::direct,
                                                 support_cap);
    rep.prop6_value = prop6_quantity(fam, params, k);
    rep.prop5_value = params.r_k ? prop5_quantity(fam, params, k)
                                 : std::numeric_limits<double>::quiet_NaN();
    if (k == 0.0 || std::fabs(2 * k - 1) > 1e-12)
        rep.holder = holder_verify(fam, params, k);
    for (std::uint64_t l : {1ull, 2ull, 3ull, 5ull})
        rep.residuals.emplace_back(l, twisted_first_moment(fam, l));
    for (auto& [lo, hi] : params.intervals) {
        arith::CompensatedSum<long double> acc;
        for (std::uint64_t p : arith::prime_range(lo, hi))
            acc.add(1.0L / static_cast<long double>(p));
        rep.interval_prime_sums.push_back(static_cast<double>(acc.value()));
    }
    rep.flags = fam.indeterminate_count;
    return rep;
}

ScanResult scaling_scan(const std::vector<int>& weights, double k, const ScanOptions& opt) {
    if (k < 0) throw std::domain_error("scaling_scan: k >= 0 required");
    ScanResult out;
    out.conjectured_slope = k * (2 * k + 1);

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int pts = 0;
    for (int kappa : weights) {
        if (kappa % 2 != 0 || kappa < 12 || hecke::cusp_dim(kappa) == 0) {
            out.skipped.push_back(kappa);
            continue;
        }
        Family fam = build_family(kappa, 64, opt.precision_bits, opt.cache, opt.threads);
        auto params = mollifier::build_params(k, kappa, opt.mollifier_M, opt.mollifier_A, true);

        ScanRow row;
        row.kappa = kappa;
        row.dim = static_cast<int>(fam.forms.size());
        row.k = k;
        row.loglog = std::log(std::log(static_cast<double>(kappa)));
        row.moment = harmonic_moment(fam, k);
        row.mollified_first = mollified_first_moment(fam, params, k, MollifiedMode::direct,
                                                     opt.support_cap);
        row.prop6 = prop6_quantity(fam, params, k);
        row.prop5 = params.r_k ? prop5_quantity(fam, params, k)
                               : std::numeric_limits<double>::quiet_NaN();
        if (k == 0.0 || std::fabs(2 * k - 1) > 1e-12) {
            double min_margin = std::numeric_limits<double>::infinity();
            for (auto& c : holder_verify(fam, params, k))
                if (c.is_inequality) min_margin = std::min(min_margin, c.rhs - c.lhs);
            row.holder_min_margin = min_margin;
        } else {
            row.holder_min_margin = std::numeric_limits<double>::quiet_NaN();
        }
        row.flags = fam.indeterminate_count;
        out.rows.push_back(row);

        // moment ~ (log kappa)^{k(2k+1)} means log(moment) is linear in
        // log log kappa with slope k(2k+1)
        if (row.moment > 0) {
            double x = row.loglog;
            double y = std::log(row.moment);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
            ++pts;
        }
    }
    if (pts >= 2) {
        double denom = pts * sxx - sx * sx;
        if (denom != 0) {
            out.fitted_slope = (pts * sxy - sx * sy) / denom;
            out.slope_defined = true;
        }
    }
    return out;
}

} // namespace symsq::moments
