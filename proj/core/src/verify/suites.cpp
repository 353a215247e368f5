#include "symsq/verify/suites.hpp"

#include "symsq/arith/hecke_algebra.hpp"
#include "symsq/arith/parallel.hpp"
#include "symsq/arith/primes.hpp"
#include "symsq/arith/summation.hpp"
#include "symsq/lfun/coefficients.hpp"
#include "symsq/lfun/grh_bound.hpp"
#include "symsq/lfun/lvalue.hpp"
#include "symsq/moments/moments.hpp"
#include "symsq/mollifier/classify.hpp"
#include "symsq/petersson/delta.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace symsq::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<int> pick_weights(std::vector<int> defaults, const std::vector<int>& override_set) {
    if (override_set.empty()) return defaults;
    std::set<int> allowed(override_set.begin(), override_set.end());
    std::vector<int> out;
    for (int w : defaults)
        if (allowed.count(w)) out.push_back(w);
    return out;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// a weight restriction can empty a suite; that is a vacuous pass, not a failure
void note_if_empty(SuiteReport& rep) {
    if (rep.checks.empty())
        rep.checks.push_back({"no-applicable-weights", 0, 0, 0, true,
                              "the weight restriction leaves nothing to check"});
}

// ---- frozen regression data -------------------------------------------------
// Twisted-moment residuals sqrt(l) sum^h L(1/2) lambda(l^2) + log l - log kappa
// approximate the same constant C for every (kappa, l); the envelope below was
// recorded from the first full build and pinned. A drift outside it means the
// L-value or eigenvalue pipeline changed behaviour.
constexpr double kTwistedEnvelopeLo = -5.0617434;
constexpr double kTwistedEnvelopeHi = 1.7199616;
constexpr double kTwistedEnvelopePad = 0.05;

// GRH-bound margin at kappa=12, x=1e3 (coarse variant), same role.
constexpr double kGrhRegressionMargin = 0.799933530084;
constexpr double kGrhRegressionTol = 1e-4;

} // namespace

const Family& FamilyPool::get(int weight, std::uint64_t coverage) {
    auto it = families_.find(weight);
    if (it != families_.end() && it->second.forms.size() > 0 &&
        it->second.forms[0].coverage >= coverage)
        return it->second;
    if (it != families_.end() && hecke::cusp_dim(weight) == 0) return it->second;
    Family fam = build_family(weight, coverage, cfg_.precision_bits, cache_, cfg_.thread_count);
    return families_[weight] = std::move(fam);
}

SuiteReport run_hecke_suite(FamilyPool& pool, const std::vector<int>& weights) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "hecke";
    auto ws = pick_weights({12, 16, 18, 20, 22, 24, 26, 28}, weights);
    constexpr std::uint64_t kRange = 2500;
    constexpr double kTol = 1e-9;

    // divisor function table for the |lambda(n)| <= d(n) bound
    std::vector<std::uint32_t> d(kRange + 1, 0);
    for (std::uint64_t i = 1; i <= kRange; ++i)
        for (std::uint64_t m = i; m <= kRange; m += i) ++d[m];

    for (int w : ws) {
        const Family& fam = pool.get(w, kRange);
        double worst_hecke = 0, worst_deligne = 0, worst_divisor = 0;
        for (const auto& f : fam.forms) {
            std::vector<double> lam(kRange + 1);
            for (std::uint64_t n = 1; n <= kRange; ++n) lam[n] = f.lambda_d(n);
            for (std::uint64_t m = 2; m * m <= kRange; ++m) {
                for (std::uint64_t n = m; m * n <= kRange; ++n) {
                    double rhs = 0;
                    std::uint64_t g = std::gcd(m, n);
                    for (std::uint64_t e = 1; e <= g; ++e)
                        if (g % e == 0) rhs += lam[m * n / (e * e)];
                    worst_hecke = std::max(worst_hecke, std::fabs(lam[m] * lam[n] - rhs));
                }
            }
            for (std::uint64_t p : f.primes->primes) {
                if (p > 1000) break;
                worst_deligne = std::max(worst_deligne, std::fabs(lam[p]) - 2.0);
            }
            for (std::uint64_t n = 1; n <= kRange; ++n)
                worst_divisor = std::max(worst_divisor, std::fabs(lam[n]) - d[n]);
        }
        rep.checks.push_back({"hecke-relation w=" + std::to_string(w), worst_hecke, kTol,
                              kTol - worst_hecke, worst_hecke < kTol,
                              "max |lambda(m)lambda(n) - sum_d lambda(mn/d^2)|, mn <= 2500"});
        rep.checks.push_back({"deligne w=" + std::to_string(w), worst_deligne, kTol,
                              kTol - worst_deligne, worst_deligne < kTol,
                              "max |lambda(p)| - 2 over p <= 1000"});
        rep.checks.push_back({"divisor-bound w=" + std::to_string(w), worst_divisor, kTol,
                              kTol - worst_divisor, worst_divisor < kTol,
                              "max |lambda(n)| - d(n) over n <= 2500"});
    }

    if (std::find(ws.begin(), ws.end(), 12) != ws.end()) {
        const Family& fam = pool.get(12, kRange);
        const auto& f = fam.forms[0];
        double spots[3] = {
            f.lambda_d(2) * std::pow(2.0, 5.5) + 24.0,
            f.lambda_d(3) * std::pow(3.0, 5.5) - 252.0,
            f.lambda_d(4) * std::pow(2.0, 11.0) + 1472.0,
        };
        double worst = std::max({std::fabs(spots[0]), std::fabs(spots[1]), std::fabs(spots[2])});
        rep.checks.push_back({"tau-spot-values", worst, 1e-9, 1e-9 - worst, worst < 1e-9,
                              "tau(2) = -24, tau(3) = 252, tau(4) = -1472"});
    }
    note_if_empty(rep);
    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport run_petersson_suite(FamilyPool& pool, bool extended,
                                const std::vector<int>& weights) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "petersson";
    auto ws = pick_weights({12, 16, 20, 24, 28, 32, 36, 40}, weights);
    constexpr double kTol = 1e-6;
    constexpr std::uint64_t kCMax = 100000;

    for (int w : ws) {
        const Family& fam = pool.get(w, 64);
        double worst_excess = -1e300;
        for (std::uint64_t m = 1; m <= 4; ++m) {
            for (std::uint64_t n = m; n <= 4; ++n) {
                double spec = petersson::delta_spectral(fam, m, n);
                auto geo = petersson::delta_geometric(w, m, n, kCMax, pool.config().thread_count);
                double excess = std::fabs(spec - geo.value) - geo.tail_bound;
                worst_excess = std::max(worst_excess, excess);
            }
        }
        rep.checks.push_back({"trace-identity w=" + std::to_string(w), worst_excess, kTol,
                              kTol - worst_excess, worst_excess < kTol,
                              "max |spectral - geometric| - tail over m,n <= 4, c_max 1e5"});
    }

    std::vector<int> regime = extended ? std::vector<int>{120, 200} : std::vector<int>{120};
    for (int w : pick_weights(regime, weights)) {
        double bound = static_cast<double>(w) * w / 1e4;
        double worst = 0;
        for (std::uint64_t m = 1; m <= 4; ++m)
            for (std::uint64_t n = m; n <= 4; ++n) {
                if (static_cast<double>(m * n) > bound) continue;
                auto geo = petersson::delta_geometric(w, m, n, 1000, pool.config().thread_count);
                double delta = (m == n) ? 1.0 : 0.0;
                worst = std::max(worst, std::fabs(geo.value - delta));
            }
        rep.checks.push_back({"kronecker-regime w=" + std::to_string(w), worst, 1e-8,
                              1e-8 - worst, worst < 1e-8,
                              "|Delta_{m,n} - delta_{m,n}| for mn <= kappa^2/1e4"});
    }
    note_if_empty(rep);
    rep.seconds = seconds_since(t0);
    return rep;
}

namespace {

// b(p^j) as an exact element of the lambda(t^2) span: sum_{2i <= j} lambda(p^{j-2i} squared)
arith::LambdaSquareSpan b_prime_power(std::uint64_t p, unsigned j) {
    arith::LambdaSquareSpan out;
    for (unsigned i = 0; 2 * i <= j; ++i)
        out.add_term(arith::FactoredInt::prime_power(p, j - 2 * i), 1);
    return out;
}

bool spans_equal(const arith::LambdaSquareSpan& a, const arith::LambdaSquareSpan& b) {
    if (a.terms().size() != b.terms().size()) return false;
    for (auto& [tval, entry] : a.terms()) {
        auto it = b.terms().find(tval);
        if (it == b.terms().end() || it->second.second != entry.second) return false;
    }
    return true;
}

arith::LambdaSquareSpan span_sum(const arith::LambdaSquareSpan& a,
                                 const arith::LambdaSquareSpan& b, int sign_b) {
    arith::LambdaSquareSpan out = a;
    for (auto& [tval, entry] : b.terms())
        out.add_term(entry.first, sign_b > 0 ? entry.second : mpz_class(-entry.second));
    return out;
}

} // namespace

SuiteReport run_afe_suite(FamilyPool& pool, const std::vector<int>& weights) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "afe";
    std::vector<int> defaults;
    for (int w = 12; w <= 60; w += 2)
        if (hecke::cusp_dim(w) > 0) defaults.push_back(w);
    auto ws = pick_weights(defaults, weights);
    constexpr std::size_t kSeries = 2000;

    for (int w : ws) {
        const Family& fam = pool.get(w, kSeries);
        double worst_s4 = 0, worst_s2 = 0, worst_fe = 0, worst_imag = 0;
        for (const auto& f : fam.forms) {
            auto b = lfun::symsq_coeffs(f, kSeries);

            // against the absolutely convergent series at s=4 (tail < 1e-9)
            auto l4 = lfun::lvalue(f, lfun::cld(4.0L, 0.0L));
            long double series4 = 0;
            for (std::size_t n = kSeries; n >= 1; --n)
                series4 += b[n] / powl(static_cast<long double>(n), 4.0L);
            worst_s4 = std::max(worst_s4,
                                static_cast<double>(fabsl(l4.value.real() - series4)));

            // s=2 sanity band: the direct series cannot reach 1e-8 here (its
            // own tail is ~1e-5), so this guards normalization, not precision
            auto l2 = lfun::lvalue(f, lfun::cld(2.0L, 0.0L));
            long double series2 = 0;
            for (std::size_t n = kSeries; n >= 1; --n)
                series2 += b[n] / powl(static_cast<long double>(n), 2.0L);
            worst_s2 = std::max(worst_s2,
                                static_cast<double>(fabsl(l2.value.real() - series2)));

            for (double sigma : {0.3, 0.5, 0.7}) {
                auto la = lfun::completed_lambda(f, lfun::cld(sigma, 0.0L));
                auto lb = lfun::completed_lambda(f, lfun::cld(1.0 - sigma, 0.0L));
                double rel = static_cast<double>(std::abs(la.value - lb.value) /
                                                 std::abs(lb.value));
                worst_fe = std::max(worst_fe, rel);
            }
            for (double t : {0.3, 1.0}) {
                auto lc = lfun::completed_lambda(f, lfun::cld(0.5L, t));
                worst_imag = std::max(worst_imag,
                                      static_cast<double>(std::abs(lc.value.imag()) /
                                                          std::abs(lc.value)));
            }
        }
        rep.checks.push_back({"afe-vs-series-s4 w=" + std::to_string(w), worst_s4, 1e-8,
                              1e-8 - worst_s4, worst_s4 < 1e-8,
                              "|AFE - direct series| at s=4, 2000 terms"});
        rep.checks.push_back({"afe-vs-series-s2 w=" + std::to_string(w), worst_s2, 5e-4,
                              5e-4 - worst_s2, worst_s2 < 5e-4,
                              "normalization band; the s=2 series tail itself is ~1e-5"});
        rep.checks.push_back({"functional-equation w=" + std::to_string(w), worst_fe, 1e-6,
                              1e-6 - worst_fe, worst_fe < 1e-6,
                              "rel |Lambda(sigma) - Lambda(1-sigma)|, sigma in {0.3,0.5,0.7}"});
        rep.checks.push_back({"critical-line-reality w=" + std::to_string(w), worst_imag, 1e-6,
                              1e-6 - worst_imag, worst_imag < 1e-6,
                              "rel |Im Lambda(1/2+it)|, t in {0.3,1.0}"});
    }

    // Euler-factor recursion b(p^j) = l(p^2) b(p^{j-1}) - l(p^2) b(p^{j-2}) + b(p^{j-3}),
    // exact in the Hecke algebra
    {
        bool ok = true;
        for (std::uint64_t p : {2ull, 3ull, 5ull}) {
            for (unsigned j = 3; j <= 6; ++j) {
                auto lhs = b_prime_power(p, j);
                auto t1 = b_prime_power(p, j - 1).times_lambda_p2(p);
                auto t2 = b_prime_power(p, j - 2).times_lambda_p2(p);
                auto rhs = span_sum(span_sum(t1, t2, -1), b_prime_power(p, j - 3), +1);
                if (!spans_equal(lhs, rhs)) ok = false;
            }
        }
        rep.checks.push_back({"euler-recursion-symbolic", ok ? 0.0 : 1.0, 0.5,
                              ok ? 0.5 : -0.5, ok,
                              "b(p^j) degree-3 local recursion, exact integers, j <= 6"});
    }
    note_if_empty(rep);
    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport run_mollifier_suite(FamilyPool& pool, const std::vector<int>& weights) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "mollifier";
    std::vector<int> defaults;
    for (int w = 12; w <= 28; w += 2)
        if (hecke::cusp_dim(w) > 0) defaults.push_back(w);
    auto ws = pick_weights(defaults, weights);
    const Config& cfg = pool.config();

    for (int w : ws) {
        const Family& fam = pool.get(w, 64);
        double worst_recip = 1e300;  // min of N(a) N(-a), must stay >= 1 - 1e-12
        double worst_fid = 0;
        for (double k : {0.0, 0.25, 0.4, 1.0, 1.5}) {
            auto params = mollifier::build_params(k, w, cfg.mollifier_M, cfg.mollifier_A, true);
            for (double alpha : {2 * k - 1, 2 * k - 2, 1 - 2 * k, 2 - 2 * k}) {
                for (const auto& f : fam.forms) {
                    double prod = mollifier::n_total(f, params, alpha) *
                                  mollifier::n_total(f, params, -alpha);
                    worst_recip = std::min(worst_recip, prod);
                }
            }
            // expansion fidelity, both supported alphas
            for (double alpha : {2 * k - 1, 2 * k - 2}) {
                auto poly = mollifier::expand_polynomial(params, alpha, cfg.support_cap);
                auto basis = mollifier::to_lambda_basis(poly);
                for (const auto& f : fam.forms) {
                    double direct = mollifier::n_total(f, params, alpha);
                    double via_poly = poly.evaluate(f);
                    double via_basis = basis.evaluate(f);
                    worst_fid = std::max(worst_fid, std::fabs(direct - via_poly));
                    worst_fid = std::max(worst_fid, std::fabs(direct - via_basis));
                }
            }
        }
        rep.checks.push_back({"reciprocal-bound w=" + std::to_string(w), worst_recip,
                              1.0 - 1e-12, worst_recip - (1.0 - 1e-12),
                              worst_recip >= 1.0 - 1e-12, "min N(f,a) N(f,-a)"});
        rep.checks.push_back({"expansion-fidelity w=" + std::to_string(w), worst_fid, 1e-9,
                              1e-9 - worst_fid, worst_fid < 1e-9,
                              "direct vs Dirichlet-polynomial vs lambda-basis evaluation"});
    }

    // coefficient bounds, exact integer comparisons
    {
        bool ok = true;
        std::string bad;
        auto params = mollifier::build_params(0.25, ws.empty() ? 16 : ws.front(),
                                              cfg.mollifier_M, cfg.mollifier_A, true);
        auto poly = mollifier::expand_polynomial(params, -0.5, cfg.support_cap);
        for (auto& [n, coeff] : poly.terms) {
            auto exp = arith::square_expand(n);
            mpz_class bound = 1;
            for (std::uint32_t i = 0; i < n.omega(); ++i) bound *= 3;
            if (exp.coefficient_sum() > bound) { ok = false; bad = "c_n"; break; }
            for (auto& [tv, c] : exp.terms)
                if (c < 0) { ok = false; bad = "c_n sign"; }
        }
        // eta expansions over small indices with multiplicity
        std::vector<std::uint64_t> ps{2, 3, 5, 7, 11};
        for (std::size_t i = 0; i < ps.size() && ok; ++i)
            for (std::size_t j = i; j < ps.size() && ok; ++j)
                for (std::uint32_t e = 1; e <= 2 && ok; ++e) {
                    auto n = arith::FactoredInt::prime_power(ps[i], e)
                                 .times(arith::FactoredInt::prime_power(ps[j], 1));
                    auto exp = arith::fourth_power_expand(n);
                    mpz_class bound = 1;
                    for (std::uint32_t t = 0; t < n.omega(); ++t) bound *= 8;
                    if (exp.abs_coefficient_sum() > bound) { ok = false; bad = "d_n"; }
                }
        rep.checks.push_back({"coefficient-bounds", ok ? 0.0 : 1.0, 0.5, ok ? 0.5 : -0.5, ok,
                              ok ? "sum c_n(t) <= 3^Omega, sum |d_n(t)| <= 8^Omega (exact)"
                                 : "violated: " + bad});
    }

    // interval prime-sum sanity (reported, not asserted: the log 20 + o(1)
    // bound is asymptotic and the extra intervals only open up at large kappa)
    if (!ws.empty()) {
        auto params = mollifier::build_params(0.25, ws.back(), cfg.mollifier_M,
                                              cfg.mollifier_A, true);
        double worst = 0;
        for (std::size_t j = 2; j <= params.J; ++j) {
            double sum = 0;
            for (std::uint64_t p : arith::prime_range(params.intervals[j - 1].first,
                                                      params.intervals[j - 1].second))
                sum += 1.0 / static_cast<double>(p);
            worst = std::max(worst, sum);
        }
        rep.checks.push_back({"interval-prime-sums", worst, 10.0, 10.0 - worst, true,
                              params.J < 2 ? "single interval at desk scale"
                                           : "max sum 1/p over the upper intervals (reported)"});
    }
    note_if_empty(rep);
    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport run_holder_suite(FamilyPool& pool, const std::vector<int>& weights) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "holder";
    std::vector<int> defaults;
    for (int w = 12; w <= 28; w += 2)
        if (hecke::cusp_dim(w) > 0) defaults.push_back(w);
    auto ws = pick_weights(defaults, weights);
    const Config& cfg = pool.config();

    for (int w : ws) {
        const Family& fam = pool.get(w, 64);
        for (double k : {0.0, 0.25, 0.4, 1.0, 1.5}) {
            auto params = mollifier::build_params(k, w, cfg.mollifier_M, cfg.mollifier_A, true);
            for (auto& c : moments::holder_verify(fam, params, k)) {
                std::string name = c.label + " w=" + std::to_string(w) + " k=" + fmt(k);
                if (c.is_inequality) {
                    double slack = c.rhs * (1 + 1e-10) - c.lhs;
                    rep.checks.push_back({name, c.lhs, c.rhs, slack, c.pass,
                                          "exact Hoelder chain, lhs <= rhs (1+1e-10)"});
                } else {
                    double err = std::fabs(c.lhs - c.rhs);
                    rep.checks.push_back({name, c.lhs, c.rhs, 1e-12 - err, c.pass,
                                          "exponent identity to 1e-12"});
                }
            }
        }
    }
    note_if_empty(rep);
    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport run_oracle_suite(FamilyPool& pool, const std::vector<int>& weights) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "oracle";
    std::vector<int> defaults;
    for (int w = 12; w <= 26; w += 2)
        if (hecke::cusp_dim(w) > 0) defaults.push_back(w);
    auto ws = pick_weights(defaults, weights);
    const Config& cfg = pool.config();

    for (int w : ws) {
        const Family& fam = pool.get(w, 64);
        for (double k : {0.25, 1.0}) {
            auto params = mollifier::build_params(k, w, cfg.mollifier_M, cfg.mollifier_A, true);
            double direct = moments::mollified_first_moment(fam, params, k,
                                                            moments::MollifiedMode::direct,
                                                            cfg.support_cap);
            double expansion = moments::mollified_first_moment(fam, params, k,
                                                               moments::MollifiedMode::expansion,
                                                               cfg.support_cap);
            double rel = std::fabs(direct - expansion) / (1 + std::fabs(direct));
            std::string name = "mollified-two-routes w=" + std::to_string(w) + " k=" + fmt(k);
            rep.checks.push_back({name, rel, 1e-8, 1e-8 - rel, rel < 1e-8,
                                  "direct product vs lambda-basis contraction"});
        }
    }
    note_if_empty(rep);
    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport run_twisted_suite(FamilyPool& pool, const std::vector<int>& weights) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "twisted";
    std::vector<int> defaults;
    for (int w = 40; w <= 60; w += 2)
        if (hecke::cusp_dim(w) > 0) defaults.push_back(w);
    auto ws = pick_weights(defaults, weights);

    std::vector<double> residuals;
    for (int w : ws) {
        const Family& fam = pool.get(w, 64);
        for (std::uint64_t l : {1ull, 2ull, 3ull, 5ull}) {
            auto tm = moments::twisted_first_moment(fam, l);
            residuals.push_back(tm.residual);
            double lo = kTwistedEnvelopeLo - kTwistedEnvelopePad;
            double hi = kTwistedEnvelopeHi + kTwistedEnvelopePad;
            bool pass = tm.residual >= lo && tm.residual <= hi;
            rep.checks.push_back({"residual w=" + std::to_string(w) + " l=" + std::to_string(l),
                                  tm.residual, hi, std::min(tm.residual - lo, hi - tm.residual),
                                  pass, "sqrt(l) M_1 + log l - log kappa within pinned envelope"});
        }
    }
    if (!residuals.empty()) {
        double mean = std::accumulate(residuals.begin(), residuals.end(), 0.0) /
                      residuals.size();
        double var = 0;
        for (double r : residuals) var += (r - mean) * (r - mean);
        double spread = std::sqrt(var / residuals.size());
        rep.checks.push_back({"residual-spread", spread, 2.5, 2.5 - spread, spread < 2.5,
                              "stdev across kappa in [40,60], l in {1,2,3,5}; mean ~ C = " +
                                  fmt(mean)});
    }
    note_if_empty(rep);
    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport run_grh_suite(FamilyPool& pool, const std::vector<int>& weights) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "grh-bound";
    std::vector<int> defaults;
    for (int w = 12; w <= 60; w += 2)
        if (hecke::cusp_dim(w) > 0) defaults.push_back(w);
    auto ws = pick_weights(defaults, weights);
    constexpr double kFloor = -5.0;

    for (int w : ws) {
        const Family& fam = pool.get(w, 100000);
        double worst = 1e300;
        int indeterminate = 0;
        for (const auto& f : fam.forms) {
            for (double x : {1e3, 1e4, 1e5}) {
                auto repc = lfun::grh_bound_report(f, x, lfun::GrhVariant::coarse);
                auto reps = lfun::grh_bound_report(f, x, lfun::GrhVariant::simplified);
                if (repc.indeterminate) { ++indeterminate; continue; }
                worst = std::min({worst, repc.margin, reps.margin});
            }
        }
        rep.checks.push_back({"margin-floor w=" + std::to_string(w), worst, kFloor,
                              worst - kFloor, worst > kFloor,
                              "min margin over forms, x in {1e3,1e4,1e5}, both variants" +
                                  (indeterminate ? " (excluded " + std::to_string(indeterminate) +
                                                       " indeterminate)"
                                                 : std::string())});
    }

    if (std::find(ws.begin(), ws.end(), 12) != ws.end()) {
        const Family& fam = pool.get(12, 100000);
        auto r = lfun::grh_bound_report(fam.forms[0], 1e3, lfun::GrhVariant::coarse);
        double err = std::fabs(r.margin - kGrhRegressionMargin);
        rep.checks.push_back({"margin-regression w=12 x=1e3", r.margin, kGrhRegressionMargin,
                              kGrhRegressionTol - err, err < kGrhRegressionTol,
                              "frozen value from first build"});
    }
    note_if_empty(rep);
    rep.seconds = seconds_since(t0);
    return rep;
}

SuiteReport run_scan_suite(FamilyPool& pool, bool extended) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "scan";
    rep.informational = true;
    const Config& cfg = pool.config();

    std::vector<int> ws;
    for (int w = 12; w <= (extended ? 300 : 60); w += 8) ws.push_back(w);
    moments::ScanOptions opt;
    opt.mollifier_M = cfg.mollifier_M;
    opt.mollifier_A = cfg.mollifier_A;
    opt.support_cap = cfg.support_cap;
    opt.precision_bits = cfg.precision_bits;
    opt.cache = pool.cache();
    opt.threads = cfg.thread_count;
    auto result = moments::scaling_scan(ws, 0.5, opt);

    // monotone-trend report: count of adjacent increases of the moment
    int incr = 0;
    for (std::size_t i = 1; i < result.rows.size(); ++i)
        if (result.rows[i].moment >= result.rows[i - 1].moment) ++incr;
    rep.checks.push_back({"rows", static_cast<double>(result.rows.size()), 0, 0, true,
                          std::to_string(result.skipped.size()) + " dim-0 weights skipped"});
    rep.checks.push_back({"monotone-increases", static_cast<double>(incr),
                          static_cast<double>(result.rows.size() - 1), 0, true,
                          "adjacent moment increases (informational)"});
    rep.checks.push_back({"fitted-slope", result.fitted_slope, result.conjectured_slope, 0,
                          true, "log(moment) vs log log kappa; target k(2k+1) = 1 (not asserted)"});
    note_if_empty(rep);
    rep.seconds = seconds_since(t0);
    return rep;
}

std::vector<SuiteReport> run_suites(const std::string& which, FamilyPool& pool,
                                    bool extended, const std::vector<int>& weights) {
    std::vector<SuiteReport> out;
    auto want = [&](const char* name) { return which == "all" || which == name; };
    if (want("hecke")) out.push_back(run_hecke_suite(pool, weights));
    if (want("petersson")) out.push_back(run_petersson_suite(pool, extended, weights));
    if (want("afe")) out.push_back(run_afe_suite(pool, weights));
    if (want("mollifier")) out.push_back(run_mollifier_suite(pool, weights));
    if (want("holder")) out.push_back(run_holder_suite(pool, weights));
    if (want("oracle")) out.push_back(run_oracle_suite(pool, weights));
    if (want("twisted")) out.push_back(run_twisted_suite(pool, weights));
    if (want("grh-bound")) out.push_back(run_grh_suite(pool, weights));
    if (which == "all" || which == "scan") out.push_back(run_scan_suite(pool, extended));
    return out;
}

} // namespace symsq::verify
