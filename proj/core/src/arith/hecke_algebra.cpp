#include "symsq/arith/hecke_algebra.hpp"

#include <algorithm>

namespace symsq::arith {

LambdaSquareSpan LambdaSquareSpan::one() {
    LambdaSquareSpan s;
    s.add_term(FactoredInt::one(), 1);
    return s;
}

LambdaSquareSpan LambdaSquareSpan::lambda_sq(const FactoredInt& t) {
    LambdaSquareSpan s;
    s.add_term(t, 1);
    return s;
}

void LambdaSquareSpan::add_term(const FactoredInt& t, const mpz_class& coeff) {
    auto it = terms_.find(t.value);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(t.value, std::make_pair(t, coeff));
        return;
    }
    it->second.second += coeff;
    if (it->second.second == 0) terms_.erase(it);
}

// lambda(p^2) * lambda(t^2) = lambda((pt)^2)            if p does not divide t
//                           = lambda((pt)^2) + lambda(t^2) + lambda((t/p)^2)  otherwise
LambdaSquareSpan LambdaSquareSpan::times_lambda_p2(std::uint64_t p) const {
    LambdaSquareSpan out;
    for (auto& [tval, entry] : terms_) {
        const FactoredInt& t = entry.first;
        const mpz_class& coeff = entry.second;
        std::uint32_t e = t.exponent_of(p);
        out.add_term(t.times(FactoredInt::prime_power(p, 1)), coeff);
        if (e > 0) {
            out.add_term(t, coeff);
            FactoredInt reduced;
            reduced.value = t.value / p;
            for (auto& [q, a] : t.factors) {
                std::uint32_t na = (q == p) ? a - 1 : a;
                if (na > 0) reduced.factors.emplace_back(q, na);
            }
            out.add_term(reduced, coeff);
        }
    }
    return out;
}

LambdaSquareSpan LambdaSquareSpan::times(const LambdaSquareSpan& other) const {
    LambdaSquareSpan out;
    for (auto& [sval, se] : terms_) {
        const FactoredInt& s = se.first;
        for (auto& [tval, te] : other.terms_) {
            const FactoredInt& t = te.first;
            mpz_class coeff = se.second * te.second;

            // divisors d of gcd(s^2, t^2); term (s t / d)^2 for each
            FactoredInt g;
            g.value = 1;
            for (auto& [p, a] : s.factors) {
                std::uint32_t b = t.exponent_of(p);
                if (b == 0) continue;
                std::uint32_t e = std::min(2 * a, 2 * b);
                g.factors.emplace_back(p, e);
                for (std::uint32_t i = 0; i < e; ++i) g.value *= p;
            }
            FactoredInt st = s.times(t);
            for (const FactoredInt& d : divisors(g)) {
                FactoredInt q;
                q.value = st.value / d.value;
                for (auto& [p, a] : st.factors) {
                    std::uint32_t sub = d.exponent_of(p);
                    if (a > sub) q.factors.emplace_back(p, a - sub);
                }
                out.add_term(q, coeff);
            }
        }
    }
    return out;
}

mpz_class LambdaSquareSpan::coefficient_sum() const {
    mpz_class total = 0;
    for (auto& [tval, entry] : terms_) total += entry.second;
    return total;
}

mpz_class LambdaSquareSpan::abs_coefficient_sum() const {
    mpz_class total = 0;
    for (auto& [tval, entry] : terms_) total += abs(entry.second);
    return total;
}

mpz_class SquareExpansion::coefficient_sum() const {
    mpz_class total = 0;
    for (auto& [t, c] : terms) total += c;
    return total;
}

mpz_class FourthPowerExpansion::abs_coefficient_sum() const {
    mpz_class total = 0;
    for (auto& [t, c] : terms) total += abs(c);
    return total;
}

LambdaSquareSpan square_expand_span(const FactoredInt& n) {
    LambdaSquareSpan span = LambdaSquareSpan::one();
    for (auto& [p, e] : n.factors)
        for (std::uint32_t i = 0; i < e; ++i) span = span.times_lambda_p2(p);
    return span;
}

LambdaSquareSpan fourth_power_expand_span(const FactoredInt& n) {
    LambdaSquareSpan total = LambdaSquareSpan::one();
    for (auto& [p, e] : n.factors) {
        LambdaSquareSpan eta_p;
        eta_p.add_term(FactoredInt::prime_power(p, 2), 1);  // lambda(p^4)
        eta_p.add_term(FactoredInt::prime_power(p, 1), -1); // -lambda(p^2)
        LambdaSquareSpan power = eta_p;
        for (std::uint32_t i = 1; i < e; ++i) power = power.times(eta_p);
        total = total.times(power); // coprime supports: plain term-by-term product
    }
    return total;
}

SquareExpansion square_expand(const FactoredInt& n) {
    SquareExpansion out;
    out.n = n;
    LambdaSquareSpan span = square_expand_span(n);
    for (auto& [tval, entry] : span.terms())
        out.terms[tval] = entry.second;
    return out;
}

FourthPowerExpansion fourth_power_expand(const FactoredInt& n) {
    FourthPowerExpansion out;
    out.n = n;
    LambdaSquareSpan span = fourth_power_expand_span(n);
    for (auto& [tval, entry] : span.terms())
        out.terms[tval] = entry.second;
    return out;
}

} // namespace symsq::arith
