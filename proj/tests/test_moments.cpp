#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symsq/moments/moments.hpp"
#include "symsq/petersson/delta.hpp"

#include <cmath>

using namespace symsq;
using namespace symsq::moments;

namespace {

mollifier::MollifierParams degenerate_pack(std::uint64_t kappa) {
    mollifier::MollifierParams p;
    p.k = 0.25;
    p.kappa = kappa;
    p.J = 1;
    p.alphas = {0.1};
    p.ells = {4};
    p.c_k = 64;
    p.r_k = 8;
    p.intervals = {{24.1, 24.9}}; // no primes
    p.desk_scale = true;
    return p;
}

} // namespace

TEST_CASE("harmonic moment identities") {
    Family fam = build_family(12, 64, 128);
    // k = 0 is the spectral Delta_{1,1}
    double m0 = harmonic_moment(fam, 0.0);
    CHECK(m0 == doctest::Approx(petersson::delta_spectral(fam, 1, 1)).epsilon(1e-12));
    // empty family
    Family f14 = build_family(14, 64, 128);
    CHECK(harmonic_moment(f14, 0.5) == 0.0);
    // single form at kappa=12: k=1/2 moment vs twisted l=1 (L(1/2) > 0 here)
    double mhalf = harmonic_moment(fam, 0.5);
    CHECK(mhalf == doctest::Approx(twisted_first_moment(fam, 1).value).epsilon(1e-12));
    CHECK_THROWS_AS(harmonic_moment(fam, -0.5), std::domain_error);
}

TEST_CASE("harmonic moment is continuous in k") {
    Family fam = build_family(24, 64, 128);
    double delta = 1e-4;
    double log_bound = 0;
    for (std::size_t i = 0; i < fam.forms.size(); ++i)
        log_bound = std::max(log_bound,
                             std::fabs(std::log(std::fabs(fam.central[i]))));
    for (double k : {0.1, 0.5, 1.0, 1.7}) {
        double a = harmonic_moment(fam, k);
        double b = harmonic_moment(fam, k + delta);
        // |d/dk| <= 2 max|log L| * moment, so a small step moves it little
        CHECK(std::fabs(b - a) <= 3 * log_bound * delta * std::max(a, b) + 1e-12);
    }
}

TEST_CASE("twisted first moment") {
    Family fam = build_family(12, 64, 128);
    auto t1 = twisted_first_moment(fam, 1);
    CHECK(t1.residual == doctest::Approx(t1.value - std::log(12.0)).epsilon(1e-12));
    Family f14 = build_family(14, 64, 128);
    CHECK(twisted_first_moment(f14, 3).value == 0.0);
}

TEST_CASE("mollified first moment modes agree and degenerate correctly") {
    for (int w : {12, 20}) {
        Family fam = build_family(w, 64, 128);
        // k = 1/2: alpha = 0, N == 1, so this is the plain first moment
        auto params_half = mollifier::build_params(0.5, w, 1, 1.0, true);
        double direct = mollified_first_moment(fam, params_half, 0.5,
                                               MollifiedMode::direct, 1000000);
        CHECK(direct == doctest::Approx(twisted_first_moment(fam, 1).value).epsilon(1e-12));

        for (double k : {0.25, 1.0}) {
            auto params = mollifier::build_params(k, w, 1, 1.0, true);
            double d = mollified_first_moment(fam, params, k, MollifiedMode::direct, 2000000);
            double e = mollified_first_moment(fam, params, k, MollifiedMode::expansion, 2000000);
            CHECK(std::fabs(d - e) < 1e-8 * (1 + std::fabs(d)));
        }
    }
    Family f14 = build_family(14, 64, 128);
    auto params = mollifier::build_params(0.25, 16, 1, 1.0, true);
    CHECK(mollified_first_moment(f14, params, 0.25, MollifiedMode::direct, 1000000) == 0.0);
}

TEST_CASE("prop5 and prop6 quantities") {
    Family fam = build_family(12, 64, 128);
    // empty intervals: product of (N_j + Q_j) = (1 + 0), total = sum^h 1
    auto degen = degenerate_pack(12);
    CHECK(prop5_quantity(fam, degen, 0.25) ==
          doctest::Approx(harmonic_moment(fam, 0.0)).epsilon(1e-12));
    // k = 0: N_j(f,0) = 1 again
    CHECK(prop5_quantity(fam, degen, 0.0) ==
          doctest::Approx(harmonic_moment(fam, 0.0)).epsilon(1e-12));

    // monotone response: with P_j fixed below ell/c_k, larger ell shrinks Q_j
    auto params = mollifier::build_params(0.25, 12, 1, 1.0, true);
    double p_small = params.ells[0] / params.c_k * 0.5;
    double q1 = mollifier::qj_from_p(params, 1, p_small);
    auto bigger = params;
    bigger.ells[0] += 4;
    double p_small2 = p_small; // fixed P
    double q2 = mollifier::qj_from_p(bigger, 1, p_small2);
    CHECK(q2 < q1);

    // k = 1: prop6 equals the harmonic second moment
    double expect = harmonic_moment(fam, 1.0);
    auto params1 = mollifier::build_params(1.0, 12, 1, 1.0, true);
    CHECK(prop6_quantity(fam, params1, 1.0) == doctest::Approx(expect).epsilon(1e-12));
    Family f14 = build_family(14, 64, 128);
    CHECK(prop6_quantity(f14, params1, 1.0) == 0.0);
}

TEST_CASE("holder chains and exponent identities") {
    Family fam = build_family(24, 64, 128);
    // k = 1/4: exponents (2.5, 2.5, 5)
    auto params = mollifier::build_params(0.25, 24, 1, 1.0, true);
    auto checks = holder_verify(fam, params, 0.25);
    REQUIRE(checks.size() >= 2);
    CHECK(checks[0].label == "lower-bound-chain");
    CHECK(checks[0].pass);
    double e1 = 2 * (2 - 3 * 0.25);
    CHECK(e1 == doctest::Approx(2.5));
    CHECK(2 * (2 - 3 * 0.25) / (1 - 2 * 0.25) == doctest::Approx(5.0));

    for (double k : {0.0, 0.4, 1.0, 1.5}) {
        auto pk = mollifier::build_params(k, 24, 1, 1.0, true);
        for (auto& c : holder_verify(fam, pk, k)) CHECK(c.pass);
    }
    CHECK_THROWS_AS(holder_verify(fam, params, 0.5), std::domain_error);
}

TEST_CASE("tail measure") {
    Family fam = build_family(40, 64, 128);
    double total = harmonic_moment(fam, 0.0);
    auto everything = tail_measure(fam, -1e9);
    CHECK(everything.measure == doctest::Approx(total).epsilon(1e-9));
    auto nothing = tail_measure(fam, 1e9);
    CHECK(nothing.measure == 0.0);
    // non-increasing across a V grid, bounded by sum^h 1
    double prev = 1e300;
    for (double v = -3.0; v <= 3.0; v += 0.25) {
        auto t = tail_measure(fam, v);
        CHECK(t.measure <= prev + 1e-15);
        CHECK(t.measure <= total + 1e-12);
        prev = t.measure;
    }
}

TEST_CASE("scaling scan") {
    ScanOptions opt;
    opt.precision_bits = 96;
    auto empty = scaling_scan({14}, 0.5, opt);
    CHECK(empty.rows.empty());
    CHECK(empty.skipped == std::vector<int>{14});
    CHECK(!empty.slope_defined);

    auto run = scaling_scan({12, 16, 20, 24, 28}, 0.5, opt);
    CHECK(run.rows.size() == 5);
    CHECK(run.slope_defined);
    CHECK(run.conjectured_slope == doctest::Approx(1.0));
    for (auto& r : run.rows) {
        CHECK(r.moment > 0);
        CHECK(std::isnan(r.prop5));         // r_k undefined at 2k = 1
        CHECK(std::isnan(r.holder_min_margin));
    }

    // k = 0: conjectured slope 0 and a flat trivial moment
    auto flat = scaling_scan({12, 16, 20, 24, 28}, 0.0, opt);
    CHECK(flat.conjectured_slope == 0.0);
    CHECK(flat.slope_defined); // slope itself is informational, never asserted
    for (auto& r : flat.rows) CHECK(!std::isnan(r.prop5));

    CHECK_THROWS_AS(scaling_scan({12}, -1.0, opt), std::domain_error);
}
