#pragma once

#include "symsq/arith/factored.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>

namespace symsq::arith {

// Formal integer combination  sum_t  coeff(t) * lambda(t^2)  in the Hecke
// algebra.  Products reduce through the multiplicative relation
//
//   lambda(m) lambda(n) = sum_{d | (m,n)} lambda(m n / d^2),
//
// which for square arguments closes on square arguments: every divisor d of
// gcd(s^2, t^2) divides s t, so s^2 t^2 / d^2 = (s t / d)^2.
class LambdaSquareSpan {
  public:
    // keyed by the value of t; the factorization rides along for gcds
    using Terms = std::map<std::uint64_t, std::pair<FactoredInt, mpz_class>>;

    static LambdaSquareSpan one();
    static LambdaSquareSpan lambda_sq(const FactoredInt& t); // single term, coefficient 1

    void add_term(const FactoredInt& t, const mpz_class& coeff);

    LambdaSquareSpan times_lambda_p2(std::uint64_t p) const;
    LambdaSquareSpan times(const LambdaSquareSpan& other) const;

    const Terms& terms() const { return terms_; }

    mpz_class coefficient_sum() const;
    mpz_class abs_coefficient_sum() const;

    // sum_t coeff(t) * lambda_sq(t), for any callable t -> lambda(t^2)
    template <typename F>
    auto evaluate(F&& lambda_sq_of) const {
        using R = decltype(lambda_sq_of(std::declval<const FactoredInt&>()));
        R total = 0;
        for (auto& [tval, entry] : terms_)
            total += static_cast<R>(entry.second.get_d()) * lambda_sq_of(entry.first);
        return total;
    }

  private:
    Terms terms_;
};

// Expansion of the completely multiplicative lambda-tilde at n:
//   prod_{p^a || n} lambda(p^2)^a = sum_{t | n} c_n(t) lambda(t^2),
// with c_n(t) >= 0 and sum_t c_n(t) <= 3^Omega(n).
struct SquareExpansion {
    FactoredInt n;
    std::map<std::uint64_t, mpz_class> terms; // t -> c_n(t), every t divides n

    mpz_class coefficient_sum() const;
};

// Expansion of eta(n) = prod_{p^a || n} (lambda(p^4) - lambda(p^2))^a:
//   eta(n) = sum_{t | n^2} d_n(t) lambda(t^2),  sum_t |d_n(t)| <= 8^Omega(n).
struct FourthPowerExpansion {
    FactoredInt n;
    std::map<std::uint64_t, mpz_class> terms; // t -> d_n(t), every t divides n^2

    mpz_class abs_coefficient_sum() const;
};

SquareExpansion square_expand(const FactoredInt& n);
FourthPowerExpansion fourth_power_expand(const FactoredInt& n);

// The same data as a span element, for callers that keep multiplying.
LambdaSquareSpan square_expand_span(const FactoredInt& n);
LambdaSquareSpan fourth_power_expand_span(const FactoredInt& n);

} // namespace symsq::arith
