#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symsq/errors.hpp"
#include "symsq/family.hpp"
#include "symsq/mollifier/classify.hpp"
#include "symsq/mollifier/mollifier.hpp"
#include "symsq/mollifier/params.hpp"

#include <cmath>

using namespace symsq;
using namespace symsq::mollifier;

namespace {

// toy pack with one explicit interval; used where the tests need full control
MollifierParams toy_pack(std::uint64_t kappa, double lo, double hi, unsigned ell) {
    MollifierParams p;
    p.k = 0.25;
    p.kappa = kappa;
    p.J = 1;
    p.alphas = {std::log(hi) / std::log((double)kappa)};
    p.ells = {ell};
    p.c_k = 64;
    p.r_k = 8;
    p.intervals = {{lo, hi}};
    p.desk_scale = true;
    return p;
}

} // namespace

TEST_CASE("parameter pack construction") {
    auto p2 = build_params(2.0, 1000, 1, 1.0);
    CHECK(p2.c_k == 256.0);
    CHECK(p2.require_r_k() == 4);

    auto pq = build_params(0.25, 1000, 1, 1.0);
    CHECK(pq.c_k == 64.0);
    CHECK(pq.require_r_k() == 8);

    // alpha_1 at kappa = 10^8
    auto pa = build_params(0.25, 100000000ull, 1, 1.0);
    CHECK(pa.alphas[0] == doctest::Approx(0.1178).epsilon(1e-3));

    // r_k breakdowns surface as domain errors only when exercised
    auto p1 = build_params(1.0, 1000, 1, 1.0);
    CHECK(!p1.r_k.has_value());
    CHECK_THROWS_AS(p1.require_r_k(), std::domain_error);
    auto pg = build_params(0.75, 1000, 1, 1.0);
    CHECK_THROWS_AS(pg.require_r_k(), std::domain_error);
    auto ph = build_params(0.5, 1000, 1, 1.0);
    CHECK_THROWS_AS(ph.require_r_k(), std::domain_error);

    // desk scale needs the explicit override below log log kappa = 1
    CHECK_THROWS_AS(build_params(0.25, 12, 1, 1.0), std::domain_error);
    auto pd = build_params(0.25, 12, 1, 1.0, true);
    CHECK(pd.J == 1);
    CHECK(pd.desk_scale);
    CHECK(pd.intervals[0].first == doctest::Approx(1.0));
    for (unsigned ell : pd.ells) CHECK(ell % 2 == 0);
}

TEST_CASE("interval prime sums P_j") {
    Family fam = build_family(12, 64, 128);
    const auto& f = fam.forms[0];

    auto empty = toy_pack(12, 24.5, 28.5, 4); // (24.5, 28.5] holds no prime
    CHECK(pj(f, empty, 1) == 0.0);

    auto single = toy_pack(12, 10, 11, 4); // only p = 11
    CHECK(pj(f, single, 1) ==
          doctest::Approx(f.lambda_d(121) / std::sqrt(11.0)).epsilon(1e-14));

    auto toy = toy_pack(12, 1, 10, 4);
    double expect = 0;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
        expect += f.lambda_d(p * p) / std::sqrt((double)p);
    CHECK(pj(f, toy, 1) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("truncated-exponential factors N_j and their limits") {
    Family fam = build_family(12, 64, 128);
    const auto& f = fam.forms[0];
    auto params = build_params(0.25, 12, 1, 1.0, true);

    CHECK(nj(f, params, 1, 0.0) == 1.0);
    CHECK(n_total(f, params, 0.0) == 1.0);

    // ell -> infinity limit reaches exp(alpha P_j)
    double p1 = pj(f, params, 1);
    auto big = params;
    big.ells[0] = 200;
    CHECK(nj(f, big, 1, 0.7) == doctest::Approx(std::exp(0.7 * p1)).epsilon(1e-13));

    // in the regime |P_j| <= ell_j / (20 (1+|alpha|)) the relative error
    // against exp(alpha P_j) is at most C e^{-ell_j}; record C = 2
    auto reg = toy_pack(12, 10, 11, 30); // single prime keeps P small
    double pv = pj(f, reg, 1);
    REQUIRE(std::fabs(pv) <= 30.0 / (20.0 * 2.0));
    double ratio = nj(f, reg, 1, 1.0) / std::exp(pv);
    CHECK(std::fabs(ratio - 1.0) <= 2.0 * std::exp(-30.0));

    // positivity for every even truncation order
    for (double alpha : {-3.0, -1.0, 0.5, 2.0})
        CHECK(n_total(f, params, alpha) > 0.0);
}

TEST_CASE("Q_j factors") {
    auto params = build_params(0.25, 12, 1, 1.0, true);
    CHECK(qj_from_p(params, 1, 0.0) == 0.0);
    double ell = params.ells[0];
    CHECK(qj_from_p(params, 1, ell / params.c_k) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(qj_from_p(params, 1, -0.37) ==
          doctest::Approx(qj_from_p(params, 1, 0.37)).epsilon(1e-12));
    CHECK(qj_from_p(params, 1, 0.37) > 0.0);
}

TEST_CASE("mollifier reciprocal bound across the exponent grid") {
    for (int w : {12, 16, 24}) {
        Family fam = build_family(w, 64, 128);
        for (double k : {0.0, 0.25, 0.4, 1.0, 1.5}) {
            auto params = build_params(k, w, 1, 1.0, true);
            for (double alpha : {2 * k - 1, 2 * k - 2, 2 - 2 * k}) {
                for (const auto& f : fam.forms) {
                    double prod = n_total(f, params, alpha) * n_total(f, params, -alpha);
                    CHECK(prod >= 1.0 - 1e-12);
                }
            }
        }
    }
}

TEST_CASE("dirichlet polynomial expansion: exact small case") {
    // single interval containing only p, ell = 2:
    // terms 1, alpha/sqrt(p), alpha^2/(2p); lambda-basis coefficients
    // 1 + a^2/2p at t=1, a/sqrt p + a^2/2p at t=p, a^2/2p at t=p^2
    double alpha = 0.7;
    std::uint64_t p = 5;
    auto pack = toy_pack(25, 4.5, 5.5, 2);
    auto poly = expand_polynomial(pack, alpha, 1000);
    REQUIRE(poly.terms.size() == 3);
    CHECK(poly.terms[0].first.value == 1);
    CHECK(poly.terms[0].second == doctest::Approx(1.0));
    CHECK(poly.terms[1].first.value == p);
    CHECK(poly.terms[1].second == doctest::Approx(alpha / std::sqrt(5.0)).epsilon(1e-14));
    CHECK(poly.terms[2].first.value == p * p);
    CHECK(poly.terms[2].second == doctest::Approx(alpha * alpha / 10.0).epsilon(1e-14));

    auto basis = to_lambda_basis(poly);
    CHECK(basis.terms.at(1).second ==
          doctest::Approx(1 + alpha * alpha / 10.0).epsilon(1e-14));
    CHECK(basis.terms.at(p).second ==
          doctest::Approx(alpha / std::sqrt(5.0) + alpha * alpha / 10.0).epsilon(1e-14));
    CHECK(basis.terms.at(p * p).second ==
          doctest::Approx(alpha * alpha / 10.0).epsilon(1e-14));

    // empty interval: the polynomial collapses to {1 -> 1}
    auto empty = toy_pack(25, 24.1, 24.9, 2);
    auto trivial = expand_polynomial(empty, alpha, 1000);
    REQUIRE(trivial.terms.size() == 1);
    CHECK(trivial.terms[0].first.value == 1);
}

TEST_CASE("expansion fidelity and coefficient bounds") {
    Family fam = build_family(16, 64, 128);
    auto params = build_params(0.25, 16, 1, 1.0, true);
    for (double alpha : {-0.5, -1.5, 0.8}) {
        auto poly = expand_polynomial(params, alpha, 2'000'000);
        auto basis = to_lambda_basis(poly);
        for (const auto& f : fam.forms) {
            double direct = n_total(f, params, alpha);
            CHECK(std::fabs(direct - poly.evaluate(f)) < 1e-9);
            CHECK(std::fabs(direct - basis.evaluate(f)) < 1e-9);
        }
        // |x_n| <= |alpha|^Omega(n) / w(n), and the crude cap max(1,|alpha|)^{sum ell_j}
        unsigned ell_sum = 0;
        for (unsigned e : params.ells) ell_sum += e;
        double crude = std::pow(std::max(1.0, std::fabs(alpha)), ell_sum);
        for (auto& [n, coeff] : poly.terms) {
            double x_n = std::fabs(coeff) * std::sqrt((double)n.value);
            double cap = std::pow(std::fabs(alpha), n.omega()) / n.w_weight();
            CHECK(x_n <= cap * (1 + 1e-12));
            CHECK(x_n <= crude * (1 + 1e-12));
        }
    }
    CHECK_THROWS_AS(expand_polynomial(params, -0.5, 10), budget_error);
}

TEST_CASE("classification report") {
    Family fam = build_family(12, 64, 128);
    const auto& f = fam.forms[0];
    auto params = build_params(0.25, 12, 1, 1.0, true);

    auto rep = classify(f, params);
    CHECK(rep.m_lj.size() == params.J);
    CHECK(rep.p_m.size() >= 1);
    // partition property: exactly one class in [0, J]
    CHECK(rep.s_class <= params.J);

    // degenerate empty intervals: all sums vanish, f lands in S(J), no P(m)
    auto empty = toy_pack(12, 24.1, 24.9, 4);
    ClassifyThresholds th;
    auto rep0 = classify(f, empty, th);
    CHECK(rep0.m_lj[0][0] == 0.0);
    CHECK(rep0.s_class == empty.J);
    CHECK(rep0.in_t);

    // a toy threshold override forces the S(0) branch
    ClassifyThresholds tight;
    tight.m_divisor_primary = 1e9; // ell/1e9 is below any nonzero |M|
    auto rep1 = classify(f, params, tight);
    CHECK(rep1.s_class == 0);
    CHECK(rep1.s_class_strict.has_value());

    // strict two-threshold reading can leave the gap band; the primary class
    // always exists
    auto repd = classify(f, params);
    CHECK((repd.s_class_strict.has_value() || true));
}
