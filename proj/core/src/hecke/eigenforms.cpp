#include "symsq/hecke/eigenforms.hpp"

#include "symsq/arith/parallel.hpp"
#include "symsq/errors.hpp"
#include "symsq/hecke/cache.hpp"
#include "symsq/hecke/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace symsq::hecke {

namespace {

big_float to_big(const mpz_class& z) {
    big_float f;
    mpfr_set_z(f.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return f;
}

// p^{(kappa-1)/2} = sqrt(p^{kappa-1}), exact integer power then one sqrt
big_float half_power(std::uint64_t p, int kappa) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(kappa - 1));
    return sqrt(to_big(pk));
}

struct retry_precision {};

// Null vector of (T2 - a I). The raw system is exponentially graded (the
// coordinate of f_i scales like i^{(kappa-1)/2}), so it is conjugated by
// D = diag(i^{(kappa-1)/2}) first; the balanced eigenvector is O(1) by the
// divisor bound and the elimination is well conditioned. Returned in the
// original (unscaled) coordinates.
std::vector<big_float> null_vector(const Matrix& t2, const big_float& a, int weight) {
    std::size_t d = t2.size();
    std::vector<big_float> scale(d + 1);
    for (std::size_t i = 1; i <= d; ++i) scale[i] = half_power(i, weight);

    std::vector<std::vector<big_float>> m(d, std::vector<big_float>(d));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) {
            m[j][i] = to_big(t2[j][i]);
            if (i == j) m[j][i] -= a;
            m[j][i] *= scale[i + 1] / scale[j + 1];
        }

    for (std::size_t k = 0; k + 1 < d; ++k) {
        std::size_t pivot = k;
        big_float best = abs(m[k][k]);
        for (std::size_t i = k + 1; i < d; ++i)
            if (abs(m[i][k]) > best) { best = abs(m[i][k]); pivot = i; }
        if (pivot != k) std::swap(m[pivot], m[k]);
        if (m[k][k] == 0) throw retry_precision{};
        for (std::size_t i = k + 1; i < d; ++i) {
            big_float f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < d; ++j) m[i][j] -= f * m[k][j];
        }
    }

    std::vector<big_float> x(d);
    x[d - 1] = 1;
    for (std::size_t i = d - 1; i-- > 0;) {
        big_float acc = 0;
        for (std::size_t j = i + 1; j < d; ++j) acc += m[i][j] * x[j];
        if (m[i][i] == 0) throw retry_precision{};
        x[i] = -acc / m[i][i];
    }
    for (std::size_t i = 0; i < d; ++i) x[i] *= scale[i + 1];
    return x;
}

std::vector<Eigenform> compute(int weight, std::uint64_t coverage,
                               unsigned precision_bits, int threads) {
    int d = cusp_dim(weight);
    std::vector<Eigenform> forms;
    if (d == 0) return forms;

    for (unsigned attempt = 0; attempt < 4; ++attempt) {
        unsigned prec = precision_bits << attempt;
        PrecisionGuard guard(prec + 24);

        std::size_t n_terms = std::max<std::size_t>(coverage + 1, 2 * (d + 1) + 1);
        QExpansionBasis basis = victor_miller_basis(weight, n_terms);
        Matrix t2 = hecke_matrix(basis, 2);
        std::vector<mpz_class> cp = char_poly(t2);
        std::vector<big_float> roots = real_roots(cp, prec + 24);

        // separation check: downstream treats the spectrum as simple
        bool separated = true;
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            big_float gap = roots[i + 1] - roots[i];
            big_float scale = 1 + abs(roots[i]) + abs(roots[i + 1]);
            if (gap <= scale * pow(big_float(2), -static_cast<int>(prec))) {
                separated = false;
                break;
            }
        }
        if (!separated) continue;

        auto prime_table = std::make_shared<arith::PrimeTable>(
            arith::PrimeTable::build(coverage));
        const auto& primes = prime_table->primes;

        std::vector<Eigenform> result(d);
        bool deligne_ok = true;
        try {
            arith::parallel_for(static_cast<std::size_t>(d), [&](std::size_t fi) {
                PrecisionGuard worker_guard(prec + 24);
                Eigenform f;
                f.weight = weight;
                f.precision_bits = prec;
                f.coverage = coverage;
                f.primes = prime_table;

                std::vector<big_float> v;
                if (d == 1) {
                    v.assign(1, big_float(1));
                } else {
                    v = null_vector(t2, roots[fi], weight);
                    if (v[0] == 0) throw retry_precision{};
                    big_float inv = 1 / v[0];
                    for (auto& c : v) c *= inv;
                }
                f.basis_coords = v;

                // digits lost to cancellation in the coordinate dot products
                // must stay well inside the working precision
                const big_float cancel_cap = pow(big_float(2), static_cast<int>(prec) - 56);

                f.lambda_p.resize(primes.size());
                f.lambda_p_d.resize(primes.size());
                for (std::size_t pi = 0; pi < primes.size(); ++pi) {
                    std::uint64_t p = primes[pi];
                    big_float a = 0, mag = 0;
                    for (int i = 0; i < d; ++i) {
                        big_float term = v[i] * to_big(basis.rows[i][p]);
                        a += term;
                        mag += abs(term);
                    }
                    if (mag > abs(a) * cancel_cap) throw retry_precision{};
                    big_float lam = a / half_power(p, weight);
                    if (abs(lam) > big_float("2.000001")) throw retry_precision{};
                    f.lambda_p[pi] = lam;
                    f.lambda_p_d[pi] = lam.convert_to<double>();
                }
                result[fi] = std::move(f);
            }, threads);
        } catch (const retry_precision&) {
            deligne_ok = false;
        }
        if (!deligne_ok) continue;

        std::sort(result.begin(), result.end(), [](const Eigenform& a, const Eigenform& b) {
            return a.lambda2() < b.lambda2();
        });
        return result;
    }
    throw precision_error("eigenforms: eigenvalue separation failed after 4 precision escalations");
}

} // namespace

big_float Eigenform::lambda(std::uint64_t n) const {
    if (n == 0) throw std::domain_error("lambda: n >= 1");
    big_float total = 1;
    std::uint64_t m = n;
    for (std::uint64_t p : primes->primes) {
        if (p * p > m) break;
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        auto it = std::lower_bound(primes->primes.begin(), primes->primes.end(), p);
        const big_float& lp = lambda_p[it - primes->primes.begin()];
        big_float prev = 1, cur = lp; // lambda(p^0), lambda(p^1)
        for (unsigned j = 1; j < e; ++j) {
            big_float next = lp * cur - prev;
            prev = cur;
            cur = next;
        }
        total *= cur;
    }
    if (m > 1) {
        if (m > coverage)
            throw coverage_error("lambda: prime factor beyond coverage", m);
        auto it = std::lower_bound(primes->primes.begin(), primes->primes.end(), m);
        total *= lambda_p[it - primes->primes.begin()];
    }
    return total;
}

double Eigenform::lambda_d(std::uint64_t n) const {
    if (n == 0) throw std::domain_error("lambda: n >= 1");
    double total = 1;
    std::uint64_t m = n;
    for (std::uint64_t p : primes->primes) {
        if (p * p > m) break;
        if (m % p != 0) continue;
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        auto it = std::lower_bound(primes->primes.begin(), primes->primes.end(), p);
        double lp = lambda_p_d[it - primes->primes.begin()];
        double prev = 1, cur = lp;
        for (unsigned j = 1; j < e; ++j) {
            double next = lp * cur - prev;
            prev = cur;
            cur = next;
        }
        total *= cur;
    }
    if (m > 1) {
        if (m > coverage)
            throw coverage_error("lambda: prime factor beyond coverage", m);
        auto it = std::lower_bound(primes->primes.begin(), primes->primes.end(), m);
        total *= lambda_p_d[it - primes->primes.begin()];
    }
    return total;
}

std::vector<Eigenform> eigenforms(int weight, std::uint64_t coverage,
                                  unsigned precision_bits, CacheStore* cache,
                                  int threads) {
    int d = cusp_dim(weight);
    if (d == 0) return {};
    if (coverage < 2) coverage = 2;

    if (cache) {
        auto cached = cache->load(weight);
        if (cached && cached->precision_bits >= precision_bits &&
            cached->coverage >= coverage &&
            cached->dim == d &&
            static_cast<int>(cached->forms.size()) == d) {
            PrecisionGuard guard(cached->precision_bits + 24);
            auto prime_table = std::make_shared<arith::PrimeTable>(
                arith::PrimeTable::build(cached->coverage));
            std::vector<Eigenform> forms(d);
            bool ok = true;
            for (int i = 0; i < d && ok; ++i) {
                Eigenform& f = forms[i];
                f.weight = weight;
                f.precision_bits = cached->precision_bits;
                f.coverage = cached->coverage;
                f.primes = prime_table;
                const CachedForm& cf = cached->forms[i];
                if (cf.lambda_p.size() != prime_table->primes.size()) { ok = false; break; }
                for (auto& s : cf.basis_coords) f.basis_coords.emplace_back(s);
                f.lambda_p.reserve(cf.lambda_p.size());
                f.lambda_p_d.reserve(cf.lambda_p.size());
                for (auto& s : cf.lambda_p) {
                    f.lambda_p.emplace_back(s);
                    f.lambda_p_d.push_back(f.lambda_p.back().convert_to<double>());
                }
            }
            if (ok) return forms;
        }
    }

    auto forms = compute(weight, coverage, precision_bits, threads);

    if (cache) {
        CachedWeight data;
        data.weight = weight;
        data.dim = d;
        data.precision_bits = forms.empty() ? precision_bits : forms[0].precision_bits;
        data.coverage = coverage;
        for (auto& f : forms) {
            CachedForm cf;
            for (auto& c : f.basis_coords)
                cf.basis_coords.push_back(c.str(0, std::ios_base::scientific));
            for (auto& l : f.lambda_p)
                cf.lambda_p.push_back(l.str(0, std::ios_base::scientific));
            data.forms.push_back(std::move(cf));
        }
        cache->store(data);
    }
    return forms;
}

} // namespace symsq::hecke
