#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "symsq/arith/hecke_algebra.hpp"
#include "symsq/arith/primes.hpp"
#include "symsq/arith/summation.hpp"
#include "symsq/hecke/eigenforms.hpp"

#include <cmath>

using namespace symsq::arith;

TEST_CASE("prime_range matches direct enumeration") {
    CHECK(prime_range(1, 10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(prime_range(10, 11) == std::vector<std::uint64_t>{11});
    CHECK(prime_range(1, 1e6).size() == 78498);
    CHECK(prime_range(5, 5).empty());
    // strict lower bound also for non-integer lo just below a prime
    CHECK(prime_range(10.999, 11).size() == 1);
    CHECK(prime_range(11, 11).empty());

    auto oracle = oracles::sieve(5000);
    auto table = PrimeTable::build(5000);
    CHECK(table.primes == oracle);
}

TEST_CASE("mertens sums") {
    CHECK(mertens_sum(2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mertens_sum(10) ==
          doctest::Approx(0.5 + 1.0 / 3 + 0.2 + 1.0 / 7).epsilon(1e-15));
    CHECK_THROWS_AS(mertens_sum(1.5), std::domain_error);

    // the constant b is fitted, never hard-coded: the residual against
    // log log x must be stable and near the Mertens constant
    double m6 = mertens_sum(1e6);
    CHECK(std::fabs(m6 - (std::log(std::log(1e6)) + 0.26149)) < 0.01);

    double lo = 1e300, hi = -1e300;
    for (double x : {1e4, 3e4, 1e5, 3e5, 1e6}) {
        double r = mertens_sum(x) - std::log(std::log(x));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    CHECK(hi - lo < 0.02); // Cauchy-like stability of the fitted constant
}

TEST_CASE("truncated exponential") {
    CHECK(truncated_exp(0, 5.0L) == 1.0L);
    CHECK(truncated_exp(2, 1.0L) == doctest::Approx(2.5).epsilon(1e-18));
    CHECK(std::fabs((double)(truncated_exp(200, 3.0L) - expl(3.0L))) < 1e-12);
    // remainder bound: |E_l(x) - e^x| <= |x|^{l+1}/(l+1)! e^{|x|} e^x-ish
    for (long double x : {-4.0L, -1.0L, 0.5L, 2.0L}) {
        long double rem = fabsl(truncated_exp(30, x) - expl(x));
        long double bound = powl(fabsl(x), 31) / tgammal(32.0L) * expl(fabsl(x)) * expl(x);
        // the analytic remainder can be far below long double resolution, so
        // allow for the arithmetic rounding of both sides
        CHECK(rem <= bound + 1e-17L * expl(x));
    }
    // even truncation order keeps E_l positive on the whole real line
    for (unsigned ell : {2u, 4u, 8u, 16u}) {
        for (double x = -50; x <= 10; x += 0.37)
            CHECK(truncated_exp(ell, (long double)x) > 0.0L);
    }
}

TEST_CASE("square expansions: prime-power base cases") {
    auto p = FactoredInt::prime_power(7, 1);
    auto ep = square_expand(p);
    CHECK(ep.terms.size() == 1);
    CHECK(ep.terms.at(7) == 1); // c_p(p) = 1, c_p(1) = 0

    auto ep2 = square_expand(FactoredInt::prime_power(7, 2));
    CHECK(ep2.terms.at(1) == 1);
    CHECK(ep2.terms.at(7) == 1);
    CHECK(ep2.terms.at(49) == 1);

    auto ep3 = square_expand(FactoredInt::prime_power(7, 3));
    CHECK(ep3.terms.at(1) == 1);
    CHECK(ep3.terms.at(7) == 3);
    CHECK(ep3.terms.at(49) == 2);
    CHECK(ep3.terms.at(343) == 1);
    CHECK(ep3.coefficient_sum() == 7); // <= 3^3 = 27
}

TEST_CASE("square expansion bounds over every 100-smooth index up to 10^4") {
    // smallest-prime-factor sieve supplies the known factorizations
    const std::uint64_t N = 10000, P = 100;
    std::vector<std::uint32_t> spf(N + 1, 0);
    for (std::uint32_t p = 2; p <= N; ++p)
        if (!spf[p])
            for (std::uint64_t m = p; m <= N; m += p)
                if (!spf[m]) spf[m] = p;

    std::size_t checked = 0;
    for (std::uint64_t n = 2; n <= N; ++n) {
        FactoredInt fn;
        fn.value = n;
        std::uint64_t m = n;
        bool smooth = true;
        while (m > 1) {
            std::uint32_t p = spf[m];
            if (p > P) { smooth = false; break; }
            std::uint32_t e = 0;
            while (m % p == 0) { m /= p; ++e; }
            fn.factors.emplace_back(p, e);
        }
        if (!smooth) continue;
        auto en = square_expand(fn);
        mpz_class cap = 1;
        for (std::uint32_t i = 0; i < fn.omega(); ++i) cap *= 3;
        REQUIRE(en.coefficient_sum() <= cap);
        for (auto& [t, c] : en.terms) {
            REQUIRE(c >= 0);
            REQUIRE(n % t == 0);
        }
        ++checked;
    }
    CHECK(checked > 2000);
}

TEST_CASE("square expansions: bounds, multiplicativity, divisor support") {
    // every index n built from small primes: coefficients >= 0,
    // sum <= 3^Omega, and every t divides n
    std::vector<FactoredInt> pool;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
        for (std::uint32_t e = 1; e <= 3; ++e) pool.push_back(FactoredInt::prime_power(p, e));
    for (auto& a : pool)
        for (auto& b : pool) {
            if (!a.coprime_to(b)) continue;
            FactoredInt n = a.times(b);
            auto en = square_expand(n);
            mpz_class cap = 1;
            for (std::uint32_t i = 0; i < n.omega(); ++i) cap *= 3;
            CHECK(en.coefficient_sum() <= cap);
            for (auto& [t, c] : en.terms) {
                CHECK(c >= 0);
                CHECK(n.value % t == 0);
            }
            // multiplicativity: c_{ab}(t1 t2) = c_a(t1) c_b(t2)
            auto ea = square_expand(a), eb = square_expand(b);
            for (auto& [t1, c1] : ea.terms)
                for (auto& [t2, c2] : eb.terms)
                    CHECK(en.terms.at(t1 * t2) == c1 * c2);
        }
}

TEST_CASE("square expansion evaluates consistently against eigenforms") {
    auto forms = symsq::hecke::eigenforms(12, 60, 128);
    auto f24 = symsq::hecke::eigenforms(24, 60, 128);
    forms.insert(forms.end(), f24.begin(), f24.end());
    std::vector<FactoredInt> idx;
    for (std::uint64_t p : {2ull, 3ull, 5ull})
        for (std::uint32_t e = 1; e <= 3; ++e) idx.push_back(FactoredInt::prime_power(p, e));
    idx.push_back(FactoredInt::prime_power(2, 2).times(FactoredInt::prime_power(3, 1)));
    idx.push_back(FactoredInt::prime_power(2, 1)
                      .times(FactoredInt::prime_power(3, 1))
                      .times(FactoredInt::prime_power(5, 1)));
    for (auto& f : forms) {
        for (auto& n : idx) {
            // lambdatilde(n) = prod lambda(p^2)^a  vs  sum_t c_n(t) lambda(t^2)
            double direct = 1;
            for (auto& [p, e] : n.factors)
                for (std::uint32_t i = 0; i < e; ++i) direct *= f.lambda_d(p * p);
            auto en = square_expand(n);
            double via = 0;
            for (auto& [t, c] : en.terms)
                via += c.get_d() * (t == 1 ? 1.0 : f.lambda_d(t * t));
            CHECK(std::fabs(direct - via) < 1e-9);
        }
    }
}

TEST_CASE("fourth power expansions") {
    auto e1 = fourth_power_expand(FactoredInt::one());
    CHECK(e1.terms.size() == 1);
    CHECK(e1.terms.at(1) == 1);

    auto ep = fourth_power_expand(FactoredInt::prime_power(3, 1));
    CHECK(ep.terms.at(9) == 1);
    CHECK(ep.terms.at(3) == -1);

    auto ep2 = fourth_power_expand(FactoredInt::prime_power(3, 2));
    CHECK(ep2.terms.at(81) == 1);
    CHECK(ep2.terms.at(27) == -1);
    CHECK(ep2.terms.at(1) == 2);
    CHECK(ep2.abs_coefficient_sum() == 4); // <= 8^2 = 64

    // |d_n| bound and support t | n^2 over mixed indices
    for (std::uint64_t p : {2ull, 5ull})
        for (std::uint64_t q : {3ull, 7ull})
            for (std::uint32_t e = 1; e <= 2; ++e) {
                auto n = FactoredInt::prime_power(p, e).times(FactoredInt::prime_power(q, 1));
                auto en = fourth_power_expand(n);
                mpz_class cap = 1;
                for (std::uint32_t i = 0; i < n.omega(); ++i) cap *= 8;
                CHECK(en.abs_coefficient_sum() <= cap);
                mpz_class n2 = mpz_class(n.value) * n.value;
                for (auto& [t, c] : en.terms)
                    CHECK(mpz_class(n2 % t) == 0);
            }
}

TEST_CASE("compensated summation beats naive accumulation") {
    CompensatedSum<double> acc;
    double naive = 0;
    for (int i = 0; i < 100000; ++i) {
        acc.add(0.1);
        naive += 0.1;
    }
    CHECK(std::fabs(acc.value() - 10000.0) < std::fabs(naive - 10000.0) + 1e-12);
    CHECK(acc.value() == doctest::Approx(10000.0).epsilon(1e-15));
}
