#pragma once

#include "symsq/arith/factored.hpp"
#include "symsq/hecke/eigenforms.hpp"
#include "symsq/mollifier/params.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace symsq::mollifier {

// P_j(f) = sum_{p in P_j} lambda_f(p^2) / sqrt(p)
double pj(const hecke::Eigenform& f, const MollifierParams& params, std::size_t j);

// N_j(f, alpha) = E_{ell_j}(alpha P_j(f)), positive for the even ell_j used here
double nj(const hecke::Eigenform& f, const MollifierParams& params, std::size_t j,
          double alpha);

// N(f, alpha) = prod_j N_j(f, alpha) > 0
double n_total(const hecke::Eigenform& f, const MollifierParams& params, double alpha);

// Q_j(f, 2k) = (c_k P_j(f) / ell_j)^{r_k ell_j}, non-negative (even exponent)
double qj_from_p(const MollifierParams& params, std::size_t j, double p_value);
double qj(const hecke::Eigenform& f, const MollifierParams& params, std::size_t j);

// N(f, alpha) as a short Dirichlet polynomial: term n carries its coefficient
// x_n / sqrt(n) with x_n = prod_j alpha^{Omega(n_j)} / w(n_j) over the unique
// splitting of n into interval-supported parts n_j with Omega(n_j) <= ell_j.
struct DirichletPolynomial {
    std::vector<std::pair<arith::FactoredInt, double>> terms; // (n, x_n/sqrt n), ascending n

    double evaluate(const hecke::Eigenform& f) const; // sum x_n/sqrt(n) lambdatilde(n)
};

// Enumerates the support; throws budget_error when it would exceed
// support_cap terms.
DirichletPolynomial expand_polynomial(const MollifierParams& params, double alpha,
                                      std::uint64_t support_cap);

// Pushes the polynomial through lambdatilde(n) = sum_{t|n} c_n(t) lambda(t^2):
// coefficient of lambda(t^2) is sum_n (x_n/sqrt n) c_n(t).
struct LambdaBasisPolynomial {
    std::map<std::uint64_t, std::pair<arith::FactoredInt, double>> terms;

    double evaluate(const hecke::Eigenform& f) const; // sum coeff_t lambda(t^2)
};

LambdaBasisPolynomial to_lambda_basis(const DirichletPolynomial& poly);

} // namespace symsq::mollifier
