#include "symsq/mollifier/mollifier.hpp"

#include "symsq/arith/hecke_algebra.hpp"
#include "symsq/arith/primes.hpp"
#include "symsq/arith/summation.hpp"
#include "symsq/errors.hpp"

#include <algorithm>
#include <cmath>

namespace symsq::mollifier {

namespace {

std::vector<std::uint64_t> interval_primes(const MollifierParams& params, std::size_t j) {
    if (j < 1 || j > params.J) throw std::domain_error("mollifier: j out of range");
    auto [lo, hi] = params.intervals[j - 1];
    return arith::prime_range(lo, hi);
}

// multiset choices of size <= ell from the interval primes, with coefficient
// alpha^Omega / w and the index carried in factored form
void enumerate_interval(const std::vector<std::uint64_t>& primes, unsigned ell, double alpha,
                        std::vector<std::pair<arith::FactoredInt, double>>& out) {
    out.push_back({arith::FactoredInt::one(), 1.0});
    std::size_t begin = 0, end = 1;
    // breadth by total Omega: extend each index by primes >= its largest
    for (unsigned depth = 1; depth <= ell; ++depth) {
        std::size_t next_begin = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            const arith::FactoredInt n = out[i].first;
            double coeff = out[i].second;
            std::uint64_t min_p = n.factors.empty() ? 0 : n.factors.back().first;
            for (std::uint64_t p : primes) {
                if (p < min_p) continue;
                arith::FactoredInt ext = n.times(arith::FactoredInt::prime_power(p, 1));
                // w(n) gains the new exponent as a factor
                double new_coeff = coeff * alpha / static_cast<double>(ext.exponent_of(p));
                out.push_back({std::move(ext), new_coeff});
            }
        }
        begin = next_begin;
        end = out.size();
    }
}

} // namespace

double pj(const hecke::Eigenform& f, const MollifierParams& params, std::size_t j) {
    auto primes = interval_primes(params, j);
    if (!primes.empty() && primes.back() > f.coverage)
        throw coverage_error("pj: interval exceeds lambda coverage", primes.back());
    arith::CompensatedSum<long double> acc;
    for (std::uint64_t p : primes)
        acc.add(static_cast<long double>(f.lambda_d(p * p)) /
                sqrtl(static_cast<long double>(p)));
    return static_cast<double>(acc.value());
}

double nj(const hecke::Eigenform& f, const MollifierParams& params, std::size_t j,
          double alpha) {
    return static_cast<double>(
        arith::truncated_exp(params.ells[j - 1], alpha * pj(f, params, j)));
}

double n_total(const hecke::Eigenform& f, const MollifierParams& params, double alpha) {
    long double prod = 1;
    for (std::size_t j = 1; j <= params.J; ++j)
        prod *= arith::truncated_exp(params.ells[j - 1],
                                     static_cast<long double>(alpha) * pj(f, params, j));
    return static_cast<double>(prod);
}

double qj_from_p(const MollifierParams& params, std::size_t j, double p_value) {
    int r = params.require_r_k();
    unsigned ell = params.ells[j - 1];
    if (p_value == 0.0) return 0.0;
    long double base = fabsl(static_cast<long double>(params.c_k) * p_value / ell);
    long double log_q = static_cast<long double>(r) * ell * logl(base);
    return static_cast<double>(expl(log_q));
}

double qj(const hecke::Eigenform& f, const MollifierParams& params, std::size_t j) {
    return qj_from_p(params, j, pj(f, params, j));
}

double DirichletPolynomial::evaluate(const hecke::Eigenform& f) const {
    arith::CompensatedSum<long double> acc;
    for (auto& [n, coeff] : terms) {
        long double lt = 1;
        for (auto& [p, e] : n.factors) {
            long double lp2 = f.lambda_d(p * p);
            for (std::uint32_t i = 0; i < e; ++i) lt *= lp2;
        }
        acc.add(coeff * lt);
    }
    return static_cast<double>(acc.value());
}

DirichletPolynomial expand_polynomial(const MollifierParams& params, double alpha,
                                      std::uint64_t support_cap) {
    // support estimate before enumerating: prod_j C(pi_j + ell_j, ell_j)
    long double log_count = 0;
    std::vector<std::vector<std::uint64_t>> primes(params.J);
    for (std::size_t j = 1; j <= params.J; ++j) {
        primes[j - 1] = interval_primes(params, j);
        long double npr = static_cast<long double>(primes[j - 1].size());
        for (unsigned i = 1; i <= params.ells[j - 1]; ++i)
            log_count += logl((npr + i) / i);
    }
    if (log_count > logl(static_cast<long double>(support_cap)))
        throw budget_error("expand_polynomial: support bound exceeds cap (log-count " +
                           std::to_string(static_cast<double>(log_count)) + ")");

    std::vector<std::vector<std::pair<arith::FactoredInt, double>>> per_interval(params.J);
    for (std::size_t j = 1; j <= params.J; ++j)
        enumerate_interval(primes[j - 1], params.ells[j - 1], alpha, per_interval[j - 1]);

    // cross product over intervals (coprime supports)
    std::vector<std::pair<arith::FactoredInt, double>> acc{{arith::FactoredInt::one(), 1.0}};
    for (auto& iv : per_interval) {
        if (iv.size() == 1) continue;
        std::vector<std::pair<arith::FactoredInt, double>> next;
        next.reserve(acc.size() * iv.size());
        for (auto& [n1, c1] : acc)
            for (auto& [n2, c2] : iv)
                next.push_back({n1.times(n2), c1 * c2});
        acc = std::move(next);
        if (acc.size() > support_cap)
            throw budget_error("expand_polynomial: support exceeded cap while enumerating");
    }

    DirichletPolynomial poly;
    poly.terms = std::move(acc);
    for (auto& [n, coeff] : poly.terms)
        coeff /= std::sqrt(static_cast<double>(n.value));
    std::sort(poly.terms.begin(), poly.terms.end(),
              [](const auto& a, const auto& b) { return a.first.value < b.first.value; });
    return poly;
}

double LambdaBasisPolynomial::evaluate(const hecke::Eigenform& f) const {
    arith::CompensatedSum<long double> acc;
    for (auto& [tval, entry] : terms) {
        long double lam = 1;
        if (tval > 1) lam = static_cast<long double>(f.lambda_d(tval * tval));
        acc.add(entry.second * lam);
    }
    return static_cast<double>(acc.value());
}

LambdaBasisPolynomial to_lambda_basis(const DirichletPolynomial& poly) {
    LambdaBasisPolynomial out;
    for (auto& [n, coeff] : poly.terms) {
        arith::SquareExpansion exp = arith::square_expand(n);
        for (auto& [tval, c] : exp.terms) {
            double contribution = coeff * c.get_d();
            auto it = out.terms.find(tval);
            if (it == out.terms.end()) {
                // reconstruct t's factorization from n's primes
                arith::FactoredInt t;
                t.value = tval;
                std::uint64_t rest = tval;
                for (auto& [p, e] : n.factors) {
                    std::uint32_t cnt = 0;
                    while (rest % p == 0) { rest /= p; ++cnt; }
                    if (cnt) t.factors.emplace_back(p, cnt);
                }
                out.terms.emplace(tval, std::make_pair(std::move(t), contribution));
            } else {
                it->second.second += contribution;
            }
        }
    }
    return out;
}

} // namespace symsq::mollifier
