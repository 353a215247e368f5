#pragma once

#include "symsq/hecke/power_series.hpp"

#include <cstdint>
#include <vector>

namespace symsq::hecke {

// Exact integer q-expansions spanning the cusp space of one weight, in
// echelon form: row i (1-based) has a_i(j) = delta_{ij} for 1 <= i,j <= dim.
struct QExpansionBasis {
    int weight = 0;
    int dim = 0;
    std::size_t n_terms = 0;           // coefficients 0 .. n_terms-1 per row
    std::vector<Series> rows;          // rows[i-1] = q-expansion of f_i
};

// Dimension of the level-one cusp space. Throws std::domain_error for odd
// weight.
int cusp_dim(int weight);

// Echelonized exact basis with at least n_terms coefficients per row.
// Throws std::domain_error for odd weight or weight < 12 (empty space).
QExpansionBasis victor_miller_basis(int weight, std::size_t n_terms);

using Matrix = std::vector<std::vector<mpz_class>>;

// Exact matrix of the unnormalized Hecke operator T_n in the given basis.
// Requires n_terms >= n*(dim+1); otherwise throws std::length_error naming
// the needed truncation.
Matrix hecke_matrix(const QExpansionBasis& basis, std::uint64_t n);

} // namespace symsq::hecke
