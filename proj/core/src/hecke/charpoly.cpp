#include "symsq/hecke/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symsq::hecke {

std::vector<mpz_class> char_poly(const Matrix& a) {
    std::size_t d = a.size();
    std::vector<mpz_class> coeff(d + 1, mpz_class(0));
    coeff[d] = 1;
    if (d == 0) return coeff;

    Matrix m = a;
    for (std::size_t k = 1; k <= d; ++k) {
        // c_{d-k} = -tr(M)/k, exact division
        mpz_class tr = 0;
        for (std::size_t i = 0; i < d; ++i) tr += m[i][i];
        mpz_class ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        ck = -ck;
        coeff[d - k] = ck;
        if (k == d) break;
        // M <- A (M + ck I)
        for (std::size_t i = 0; i < d; ++i) m[i][i] += ck;
        Matrix next(d, std::vector<mpz_class>(d, mpz_class(0)));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l) {
                if (a[i][l] == 0) continue;
                for (std::size_t j = 0; j < d; ++j)
                    mpz_addmul(next[i][j].get_mpz_t(), a[i][l].get_mpz_t(), m[l][j].get_mpz_t());
            }
        m = std::move(next);
    }
    return coeff;
}

namespace {

// ---------------------------------------------------------------------------
// exact helpers on integer polynomials (ascending coefficients)

// sign of p(a / 2^t): evaluate sum c_i a^i 2^{t(d-i)} in integers
int sign_at_dyadic(const std::vector<mpz_class>& p, const mpz_class& a, unsigned t) {
    mpz_class acc = 0;
    mpz_class pow2 = 1;
    // Horner from the top: acc = acc * a + c_i * 2^{t(d-i)}
    for (std::size_t i = p.size(); i-- > 0;) {
        acc *= a;
        acc += p[i] * pow2;
        if (i > 0) pow2 <<= t;
    }
    return mpz_sgn(acc.get_mpz_t());
}

struct Dyadic {
    mpz_class num;
    unsigned exp = 0; // value = num / 2^exp

    Dyadic() = default;
    Dyadic(mpz_class n, unsigned e) : num(std::move(n)), exp(e) {}

    void match(unsigned e) {
        num <<= (e - exp);
        exp = e;
    }
};

Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp, b.exp);
    mpz_class na = a.num << (e - a.exp);
    mpz_class nb = b.num << (e - b.exp);
    return Dyadic(na + nb, e + 1);
}

big_float to_big_float(const Dyadic& d) {
    big_float v;
    mpfr_set_z(v.backend().data(), d.num.get_mpz_t(), MPFR_RNDN);
    return v / pow(big_float(2), static_cast<int>(d.exp));
}

// ---------------------------------------------------------------------------
// Sturm fallback: exact chain over Q; used when the fast certification fails
// (close roots, repeated roots). Correct for any squarefree input.

using Poly = std::vector<mpq_class>;

Poly trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return trim(d);
}

Poly poly_rem(Poly a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        a = trim(std::move(a));
    }
    return a;
}

Poly normalize(Poly p) {
    if (p.empty()) return p;
    mpz_class den_lcm = 1;
    for (auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class content = 0;
    std::vector<mpz_class> ints;
    ints.reserve(p.size());
    for (auto& c : p) {
        mpz_class v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (content == 0) content = 1;
    Poly out;
    out.reserve(p.size());
    for (auto& v : ints) out.emplace_back(mpq_class(v / content));
    return out;
}

int sign_at(const Poly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return mpq_sgn(acc.get_mpq_t());
}

struct SturmChain {
    std::vector<Poly> chain;

    explicit SturmChain(const Poly& p) {
        chain.push_back(normalize(p));
        Poly d = derivative(p);
        if (!d.empty()) chain.push_back(normalize(d));
        while (chain.back().size() > 1) {
            Poly r = poly_rem(chain[chain.size() - 2], chain.back());
            if (r.empty()) break; // positive-degree gcd: repeated root
            for (auto& c : r) c = -c;
            chain.push_back(normalize(std::move(r)));
        }
    }

    bool squarefree() const { return chain.back().size() == 1; }

    int variations(const mpq_class& x) const {
        int count = 0, prev = 0;
        for (auto& p : chain) {
            int s = sign_at(p, x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }
};

std::vector<big_float> roots_by_sturm(const std::vector<mpz_class>& poly_z,
                                      unsigned precision_bits, bool require_all_real) {
    Poly p;
    p.reserve(poly_z.size());
    for (auto& c : poly_z) p.emplace_back(mpq_class(c));
    p = trim(std::move(p));

    SturmChain sturm(p);
    if (!sturm.squarefree())
        throw std::runtime_error("real_roots: repeated eigenvalue (polynomial not squarefree)");

    mpz_class maxc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        mpz_class v = abs(p[i].get_num());
        if (v > maxc) maxc = v;
    }
    mpz_class lead = abs(p.back().get_num());
    mpz_class bound_z = maxc / lead + 2;
    mpq_class lo_all(-bound_z), hi_all(bound_z);

    struct Interval { mpq_class lo, hi; int count; };
    std::vector<Interval> pending{{lo_all, hi_all,
                                   sturm.variations(lo_all) - sturm.variations(hi_all)}};
    std::vector<std::pair<mpq_class, mpq_class>> isolated;
    std::vector<mpq_class> exact;

    while (!pending.empty()) {
        Interval iv = pending.back();
        pending.pop_back();
        if (iv.count <= 0) continue;
        if (iv.count == 1) {
            isolated.emplace_back(iv.lo, iv.hi);
            continue;
        }
        mpq_class mid = (iv.lo + iv.hi) / 2;
        if (sign_at(sturm.chain[0], mid) == 0) {
            exact.push_back(mid);
            // shrink both sides just past the exact root; eps must not swallow
            // a neighbouring root, so shrink until the counts add up
            mpq_class eps = (iv.hi - iv.lo) / 1024;
            for (;;) {
                int left = sturm.variations(iv.lo) - sturm.variations(mid - eps);
                int right = sturm.variations(mid + eps) - sturm.variations(iv.hi);
                if (left + right + 1 == iv.count) {
                    pending.push_back({iv.lo, mid - eps, left});
                    pending.push_back({mid + eps, iv.hi, right});
                    break;
                }
                eps /= 1024;
            }
        } else {
            int left = sturm.variations(iv.lo) - sturm.variations(mid);
            pending.push_back({iv.lo, mid, left});
            pending.push_back({mid, iv.hi, iv.count - left});
        }
    }

    const Poly& p0 = sturm.chain[0];
    std::vector<big_float> roots;
    auto to_big = [](const mpq_class& q) {
        return big_float(q.get_num().get_str()) / big_float(q.get_den().get_str());
    };
    for (auto& q : exact) roots.push_back(to_big(q));

    for (auto& [lo0, hi0] : isolated) {
        mpq_class lo = lo0, hi = hi0;
        int sign_lo = sign_at(p0, lo);
        if (sign_lo == 0) {
            roots.push_back(to_big(lo));
            continue;
        }
        mpq_class width = hi - lo;
        mpq_class scale = abs(lo) + abs(hi) + 1;
        mpq_class eps = scale;
        for (unsigned i = 0; i < precision_bits + 8; ++i) eps /= 2;
        bool exact_hit = false;
        while (width > eps) {
            mpq_class mid = (lo + hi) / 2;
            int s = sign_at(p0, mid);
            if (s == 0) {
                roots.push_back(to_big(mid));
                exact_hit = true;
                break;
            }
            if (s == sign_lo) lo = mid; else hi = mid;
            width = hi - lo;
        }
        if (!exact_hit) roots.push_back(to_big((lo + hi) / 2));
    }

    std::sort(roots.begin(), roots.end());
    if (require_all_real && roots.size() + 1 != p.size())
        throw std::runtime_error("real_roots: expected all roots real");
    return roots;
}

// ---------------------------------------------------------------------------
// fast path: isolate approximately in long double on a scaled variable, then
// certify the brackets with exact integer sign alternation

struct FastFailure {};

std::vector<big_float> roots_fast(const std::vector<mpz_class>& poly,
                                  unsigned precision_bits) {
    std::size_t d = poly.size() - 1;

    // dyadic root bound 2^m via Fujiwara: |x| <= 2 max_i |c_{d-i}/c_d|^{1/i};
    // tracks the root scale itself (a plain Cauchy bound overshoots by the
    // d-th power for characteristic polynomials and would sink the scaled
    // long double coefficients below underflow)
    std::size_t lead_bits = mpz_sizeinbase(poly[d].get_mpz_t(), 2);
    unsigned m = 2;
    for (std::size_t i = 1; i <= d; ++i) {
        if (poly[d - i] == 0) continue;
        std::size_t bits = mpz_sizeinbase(poly[d - i].get_mpz_t(), 2);
        std::size_t excess = bits > lead_bits ? bits - lead_bits : 0;
        unsigned mi = static_cast<unsigned>((excess + i - 1) / i) + 2;
        m = std::max(m, mi);
    }

    // scaled coefficients gamma_i = c_i 2^{m(i-d)} are O(binom(d,i)) because
    // all roots lie inside |x| < 2^m; safe in long double
    std::vector<long double> gamma(d + 1);
    {
        PrecisionGuard guard(128);
        for (std::size_t i = 0; i <= d; ++i) {
            big_float v;
            mpfr_set_z(v.backend().data(), poly[i].get_mpz_t(), MPFR_RNDN);
            v /= pow(big_float(2), static_cast<int>(m * (d - i)));
            gamma[i] = v.convert_to<long double>();
        }
    }
    auto q = [&](long double y) {
        long double acc = 0;
        for (std::size_t i = d + 1; i-- > 0;) acc = acc * y + gamma[i];
        return acc;
    };

    // approximate roots of q in [-1,1] from grid sign changes
    std::vector<long double> approx;
    for (std::size_t grid = 16 * d;; grid *= 4) {
        approx.clear();
        long double prev_y = -1.0L, prev_v = q(prev_y);
        for (std::size_t i = 1; i <= grid; ++i) {
            long double y = -1.0L + 2.0L * i / grid;
            long double v = q(y);
            if (prev_v == 0.0L) approx.push_back(prev_y);
            else if ((prev_v < 0) != (v < 0)) {
                long double lo = prev_y, hi = y;
                for (int it = 0; it < 80; ++it) {
                    long double mid = (lo + hi) / 2;
                    long double vm = q(mid);
                    if (vm == 0.0L) { lo = hi = mid; break; }
                    if ((q(lo) < 0) != (vm < 0)) hi = mid; else lo = mid;
                }
                approx.push_back((lo + hi) / 2);
            }
            prev_y = y;
            prev_v = v;
        }
        if (approx.size() == d) break;
        if (grid > (std::size_t(1) << 14) * d) throw FastFailure{}; // close pair: Sturm
    }

    // exact certification: d+1 alternation points -B = s_0 < s_1 < ... < s_d = B
    // with sign(p(s_i)) = (leading sign) * (-1)^{d-i}; every gap then holds
    // exactly one root
    std::vector<Dyadic> seps(d + 1);
    seps[0] = Dyadic(mpz_class(-1) << m, 0);
    seps[d] = Dyadic(mpz_class(1) << m, 0);
    const unsigned sep_bits = 24;
    for (std::size_t i = 1; i < d; ++i) {
        long double mid = (approx[i - 1] + approx[i]) / 2; // in (-1,1)
        mpz_class num(static_cast<long>(std::floor((double)(mid * (1l << 24)))));
        seps[i] = Dyadic(num << m, sep_bits); // value = mid-ish * 2^m
    }
    int lead_sign = mpz_sgn(poly[d].get_mpz_t());
    for (std::size_t i = 0; i <= d; ++i) {
        Dyadic s = seps[i];
        int sign = sign_at_dyadic(poly, s.num, s.exp);
        int expect = ((d - i) % 2 == 0) ? lead_sign : -lead_sign;
        if (sign != expect) throw FastFailure{};
    }

    // exact dyadic bisection per bracket, then Newton at full precision
    std::vector<big_float> roots(d);
    for (std::size_t i = 0; i < d; ++i) {
        Dyadic lo = seps[i], hi = seps[i + 1];
        int sign_lo = ((d - i) % 2 == 0) ? lead_sign : -lead_sign;
        // bring to a common grid
        unsigned e = std::max(lo.exp, hi.exp);
        lo.match(e);
        hi.match(e);
        bool exact_hit = false;
        for (unsigned step = 0; step < 64 + m; ++step) {
            Dyadic mid = midpoint(lo, hi);
            int s = sign_at_dyadic(poly, mid.num, mid.exp);
            if (s == 0) { lo = hi = mid; exact_hit = true; break; }
            if (s == sign_lo) lo = mid; else hi = mid;
            lo.match(mid.exp);
            hi.match(mid.exp);
        }
        big_float x = to_big_float(midpoint(lo, hi));
        if (!exact_hit) {
            // Newton: quadratic convergence from a 2^-60-wide bracket; stays
            // certified because the residual is checked against the bracket
            big_float blo = to_big_float(lo), bhi = to_big_float(hi);
            for (int it = 0; it < 6; ++it) {
                big_float val = 0, der = 0;
                for (std::size_t j = d + 1; j-- > 0;) {
                    big_float cj;
                    mpfr_set_z(cj.backend().data(), poly[j].get_mpz_t(), MPFR_RNDN);
                    der = der * x + val;
                    val = val * x + cj;
                }
                if (der == 0) break;
                big_float nx = x - val / der;
                if (nx < blo || nx > bhi) break;
                if (nx == x) break;
                x = nx;
            }
        }
        roots[i] = x;
    }
    (void)precision_bits;
    return roots;
}

} // namespace

std::vector<big_float> real_roots(const std::vector<mpz_class>& poly_in,
                                  unsigned precision_bits, bool require_all_real) {
    std::vector<mpz_class> p = poly_in;
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.size() <= 1) return {};
    if (p.size() == 2) { // linear: exact rational root
        PrecisionGuard guard(precision_bits + 24);
        big_float num, den;
        mpfr_set_z(num.backend().data(), p[0].get_mpz_t(), MPFR_RNDN);
        mpfr_set_z(den.backend().data(), p[1].get_mpz_t(), MPFR_RNDN);
        return {-num / den};
    }
    try {
        PrecisionGuard guard(precision_bits + 24);
        return roots_fast(p, precision_bits);
    } catch (const FastFailure&) {
        return roots_by_sturm(p, precision_bits, require_all_real);
    }
}

} // namespace symsq::hecke
