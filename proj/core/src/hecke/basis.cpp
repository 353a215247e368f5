#include "symsq/hecke/basis.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace symsq::hecke {

int cusp_dim(int weight) {
    if (weight % 2 != 0) throw std::domain_error("cusp_dim: odd weight");
    if (weight < 12) return 0;
    int d = weight / 12;
    if (weight % 12 == 2) d -= 1;
    return d;
}

QExpansionBasis victor_miller_basis(int weight, std::size_t n_terms) {
    if (weight % 2 != 0 || weight < 12)
        throw std::domain_error("victor_miller_basis: cusp space is empty below weight 12");
    QExpansionBasis basis;
    basis.weight = weight;
    basis.dim = cusp_dim(weight);
    basis.n_terms = n_terms;
    if (basis.dim == 0) return basis;
    if (n_terms < static_cast<std::size_t>(basis.dim) + 1)
        throw std::length_error("victor_miller_basis: need n_terms >= dim + 1");

    // f_i = Delta^i E4^{a_i} E6^b with 4 a_i + 6 b = weight - 12 i; the
    // residue of the weight mod 4 fixes b once and for all.
    int b = (weight % 4 == 2) ? 1 : 0;

    Series delta = delta_series(n_terms);
    Series e4 = eisenstein_e4(n_terms);
    Series e6 = b ? eisenstein_e6(n_terms) : Series{};
    Series e4_cubed = mul(mul(e4, e4, n_terms), e4, n_terms);

    int d = basis.dim;
    int a_min = (weight - 12 * d - 6 * b) / 4;
    if (a_min < 0 || (weight - 12 * d - 6 * b) % 4 != 0)
        throw std::logic_error("victor_miller_basis: no monomial of the required weight");

    // E4 powers climb in steps of 3 as the Delta exponent drops
    std::vector<Series> e4_pow(d); // e4_pow[i] = E4^{a_min + 3i}
    e4_pow[0] = pow(e4, static_cast<unsigned>(a_min), n_terms);
    for (int i = 1; i < d; ++i) e4_pow[i] = mul(e4_pow[i - 1], e4_cubed, n_terms);

    std::vector<Series> delta_pow(d + 1);
    delta_pow[1] = delta;
    for (int i = 2; i <= d; ++i) delta_pow[i] = mul(delta_pow[i - 1], delta, n_terms);

    basis.rows.resize(d);
    for (int i = 1; i <= d; ++i) {
        Series row = mul(delta_pow[i], e4_pow[d - i], n_terms);
        if (b) row = mul(row, e6, n_terms);
        basis.rows[i - 1] = std::move(row);
    }

    // Echelonize; every pivot is 1 (rows start q^i + ...), so the reduction
    // stays integral.
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            mpz_class factor = basis.rows[i][j + 1]; // coefficient of q^{j+1}
            if (factor == 0) continue;
            Series& target = basis.rows[i];
            const Series& src = basis.rows[j];
            for (std::size_t t = 0; t < n_terms; ++t)
                mpz_submul(target[t].get_mpz_t(), factor.get_mpz_t(), src[t].get_mpz_t());
        }
    }
    return basis;
}

Matrix hecke_matrix(const QExpansionBasis& basis, std::uint64_t n) {
    int d = basis.dim;
    Matrix out(d, std::vector<mpz_class>(d, mpz_class(0)));
    if (d == 0) return out;
    std::uint64_t needed = n * static_cast<std::uint64_t>(d + 1);
    if (basis.n_terms < needed + 1)
        throw std::length_error("hecke_matrix: basis truncation too short, need n_terms >= " +
                                std::to_string(needed + 1));

    int kappa = basis.weight;
    // (T_n f)(q^j) = sum_{e | gcd(j,n)} e^{kappa-1} a_f(j n / e^2)
    for (int i = 0; i < d; ++i) {
        const Series& f = basis.rows[i];
        for (int j = 1; j <= d; ++j) {
            mpz_class acc = 0;
            std::uint64_t g = std::gcd(static_cast<std::uint64_t>(j), n);
            for (std::uint64_t e = 1; e <= g; ++e) {
                if (g % e != 0) continue;
                mpz_class ek;
                mpz_ui_pow_ui(ek.get_mpz_t(), e, static_cast<unsigned long>(kappa - 1));
                std::uint64_t idx = (static_cast<std::uint64_t>(j) / e) * (n / e);
                acc += ek * f[idx];
            }
            out[j - 1][i] = acc;
        }
    }
    return out;
}

} // namespace symsq::hecke
