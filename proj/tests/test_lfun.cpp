#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "symsq/errors.hpp"
#include "symsq/hecke/eigenforms.hpp"
#include "symsq/lfun/coefficients.hpp"
#include "symsq/lfun/grh_bound.hpp"
#include "symsq/lfun/log_gamma.hpp"
#include "symsq/lfun/lvalue.hpp"

#include <cmath>

using namespace symsq;
using namespace symsq::lfun;

TEST_CASE("complex log gamma") {
    CHECK((double)log_gamma({0.5L, 0.0L}).real() ==
          doctest::Approx(std::log(std::sqrt(M_PI))).epsilon(1e-15));
    for (int n : {1, 2, 5, 10, 40}) {
        CHECK((double)log_gamma({(long double)n, 0.0L}).real() ==
              doctest::Approx(std::lgamma((double)n)).epsilon(1e-15));
    }
    // conjugate symmetry and the recurrence at a complex point
    cld z{3.25L, 1.5L};
    auto a = log_gamma(z);
    auto b = log_gamma(std::conj(z));
    CHECK((double)std::abs(a - std::conj(b)) < 1e-16);
    auto lhs = log_gamma(z + 1.0L);
    auto rhs = log_gamma(z) + std::log(z);
    CHECK((double)std::abs(lhs - rhs) < 1e-16);
}

TEST_CASE("symmetric square coefficients") {
    auto forms = hecke::eigenforms(12, 400, 128);
    const auto& f = forms[0];
    auto b = symsq_coeffs(f, 300);
    CHECK(b[1] == 1.0L);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
        CHECK((double)b[p] == doctest::Approx(f.lambda_d(p * p)).epsilon(1e-14));
    for (std::uint64_t p : {2ull, 3ull, 5ull})
        CHECK((double)b[p * p] ==
              doctest::Approx(f.lambda_d(p * p * p * p) + 1.0).epsilon(1e-13));

    // multiplicativity and the zeta(2s) convolution oracle
    for (std::uint64_t m : {2ull, 3ull, 4ull, 5ull, 9ull})
        for (std::uint64_t n : {5ull, 7ull, 11ull}) {
            if (std::gcd(m, n) != 1 || m * n > 300) continue;
            CHECK((double)b[m * n] == doctest::Approx((double)(b[m] * b[n])).epsilon(1e-12));
        }
    for (std::uint64_t n = 1; n <= 50; ++n) {
        long double conv = 0;
        for (std::uint64_t d = 1; d * d <= n; ++d)
            if (n % (d * d) == 0) conv += f.lambda_d((n / (d * d)) * (n / (d * d)));
        CHECK((double)b[n] == doctest::Approx((double)conv).epsilon(1e-12));
    }

    CHECK_THROWS_AS(symsq_coeffs(f, 1000), coverage_error);
}

TEST_CASE("d3 table") {
    auto d3 = d3_table(30);
    CHECK(d3[1] == 1);
    CHECK(d3[2] == 3);
    CHECK(d3[4] == 6);
    CHECK(d3[6] == 9);
    CHECK(d3[8] == 10);
    CHECK(d3[30] == 27);
}

TEST_CASE("afe against the absolutely convergent series") {
    for (int w : {12, 20, 36}) {
        auto forms = hecke::eigenforms(w, 2100, 128);
        for (const auto& f : forms) {
            auto b = symsq_coeffs(f, 2000);
            auto l4 = lvalue(f, {4.0L, 0.0L});
            long double series = 0;
            for (std::size_t n = 2000; n >= 1; --n)
                series += b[n] / powl((long double)n, 4.0L);
            CHECK(std::fabs((double)(l4.value.real() - series)) < 1e-8);
            CHECK(l4.abs_error < 1e-8);
            CHECK(std::fabs((double)l4.value.imag()) < l4.abs_error);
        }
    }
}

TEST_CASE("afe against the completed-integral oracle") {
    // fully independent evaluation route (theta-kernel integral, no AFE
    // machinery); spec tolerances: 1e-6 at the central point, 1e-8 at s=2
    auto forms = hecke::eigenforms(12, 400, 128);
    const auto& f = forms[0];

    auto half_direct = completed_lambda(f, {0.5L, 0.0L});
    auto half_oracle = oracles::completed_lambda_theta(f, {0.5L, 0.0L});
    CHECK(std::fabs((double)(half_direct.value.real() - half_oracle.real())) /
              std::fabs((double)half_oracle.real()) < 1e-6);

    auto two_direct = completed_lambda(f, {2.0L, 0.0L});
    auto two_oracle = oracles::completed_lambda_theta(f, {2.0L, 0.0L});
    CHECK(std::fabs((double)(two_direct.value.real() - two_oracle.real())) /
              std::fabs((double)two_oracle.real()) < 1e-8);
}

TEST_CASE("functional equation and central reality") {
    for (int w : {12, 28, 60}) {
        auto forms = hecke::eigenforms(w, 600, 128);
        for (const auto& f : forms) {
            for (double sigma : {0.3, 0.5, 0.7}) {
                auto a = completed_lambda(f, {(long double)sigma, 0.0L});
                auto b = completed_lambda(f, {1.0L - (long double)sigma, 0.0L});
                CHECK((double)(std::abs(a.value - b.value) / std::abs(b.value)) < 1e-6);
            }
            for (double t : {0.3, 1.0}) {
                auto c = completed_lambda(f, {0.5L, (long double)t});
                CHECK((double)(std::abs(c.value.imag()) / std::abs(c.value)) < 1e-6);
                // Lambda(1/2 + it) = Lambda(1/2 - it) for the self-dual form
                auto cc = completed_lambda(f, {0.5L, -(long double)t});
                CHECK((double)(std::abs(c.value - cc.value) / std::abs(c.value)) < 1e-6);
            }
            auto l2 = completed_lambda(f, {2.0L, 0.0L});
            CHECK(std::abs(l2.value) > 0.0);
        }
    }
    // positivity needed by the harmonic weights
    for (int w : {12, 24, 40, 60}) {
        auto forms = hecke::eigenforms(w, 600, 128);
        for (const auto& f : forms)
            CHECK(lvalue(f, {1.0L, 0.0L}).value.real() > 0.0L);
    }
}

TEST_CASE("lvalue domain and coverage errors") {
    auto forms = hecke::eigenforms(12, 40, 128);
    CHECK_THROWS_AS(lvalue(forms[0], {5.0L, 0.0L}), std::domain_error);
    // coverage too small for the AFE truncation at this weight
    CHECK_THROWS_AS(lvalue(forms[0], {0.5L, 0.0L}), coverage_error);
    try {
        lvalue(forms[0], {0.5L, 0.0L});
    } catch (const coverage_error& e) {
        CHECK(e.needed > 40);
    }
}

TEST_CASE("grh bound pieces") {
    // lambda0 is the positive root of e^{-x} = x + x^2/2 = 0.4912...
    double l0 = lambda0();
    CHECK(std::fabs(std::exp(-l0) - l0 - l0 * l0 / 2) < 1e-12);
    CHECK(l0 == doctest::Approx(0.4912).epsilon(1e-3));

    CHECK(smoothing_weight(2, 4.0) == doctest::Approx(0.39111).epsilon(1e-4));
    CHECK_THROWS_AS(smoothing_weight(5, 4.0), std::domain_error);
    CHECK_THROWS_AS(smoothing_weight(4, 4.0), std::domain_error);
    for (std::uint64_t p : {2ull, 3ull, 97ull}) {
        double s = smoothing_weight(p, 100.0);
        CHECK(s > 0.0);
        CHECK(s < 1.0);
    }
    // p -> x limit
    CHECK(smoothing_weight(997, 1000.0) < 1e-3);

    auto forms = hecke::eigenforms(12, 1100, 128);
    auto rep = grh_bound_report(forms[0], 1e3, GrhVariant::coarse);
    CHECK(std::isfinite(rep.margin));
    CHECK(!rep.indeterminate);
    auto reps = grh_bound_report(forms[0], 1e3, GrhVariant::simplified);
    CHECK(std::isfinite(reps.margin));
    CHECK_THROWS_AS(grh_bound_report(forms[0], 1.5, GrhVariant::coarse), std::domain_error);
}
