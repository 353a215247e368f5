#include "symsq/mollifier/params.hpp"

#include <cmath>
#include <stdexcept>

namespace symsq::mollifier {

int MollifierParams::require_r_k() const {
    if (!r_k) throw std::domain_error("r_k undefined: " + r_k_note);
    return *r_k;
}

MollifierParams build_params(double k, std::uint64_t kappa, int M, double A,
                             bool allow_desk_scale) {
    if (k < 0) throw std::domain_error("build_params: k >= 0 required");
    if (kappa < 4) throw std::domain_error("build_params: kappa too small");
    double loglog = std::log(std::log(static_cast<double>(kappa)));
    if (loglog <= 1.0 && !allow_desk_scale)
        throw std::domain_error(
            "build_params: log log kappa <= 1; pass allow_desk_scale to run the clamped J=1 pack");
    if (loglog <= 0.0)
        throw std::domain_error("build_params: kappa <= e^e is below any usable scale");

    MollifierParams p;
    p.k = k;
    p.kappa = kappa;
    p.M = M;
    p.A = A;

    double denom = loglog * loglog;
    double threshold = std::pow(10.0, -M);

    // J = 1 + max{j >= 1 : alpha_j <= 10^-M}; empty set clamps to J = 1
    std::size_t j_max = 0;
    for (std::size_t j = 1;; ++j) {
        double alpha = std::pow(20.0, static_cast<double>(j - 1)) / denom;
        if (alpha <= threshold) j_max = j; else break;
    }
    p.J = j_max + 1;
    p.desk_scale = (j_max == 0);

    p.alphas.resize(p.J);
    p.ells.resize(p.J);
    p.intervals.resize(p.J);
    double prev_alpha = 0.0;
    for (std::size_t j = 1; j <= p.J; ++j) {
        double alpha = std::pow(20.0, static_cast<double>(j - 1)) / denom;
        p.alphas[j - 1] = alpha;
        double ell_raw = std::exp(A) * std::pow(alpha, -0.75);
        p.ells[j - 1] = 2 * static_cast<unsigned>(std::ceil(ell_raw));
        p.intervals[j - 1] = {std::pow(static_cast<double>(kappa), prev_alpha),
                              std::pow(static_cast<double>(kappa), alpha)};
        prev_alpha = alpha;
    }

    p.c_k = 64.0 * std::max(1.0, 2 * k);
    if (2 * k > 1.0) {
        if (k == 1.0) {
            p.r_k_note = "k/(k-1) is undefined at k = 1; the k -> 1+ limit diverges "
                         "(r_k = 4 would be the k -> infinity value)";
        } else if (k < 1.0) {
            p.r_k_note = "2 ceil(k/(k-1)) is non-positive for 1/2 < k < 1";
        } else {
            p.r_k = 2 * static_cast<int>(std::ceil(k / (k - 1.0)));
        }
    } else if (2 * k < 1.0) {
        p.r_k = 2 * static_cast<int>(std::ceil((2 - 3 * k) / (1 - 2 * k))) + 2;
    } else {
        p.r_k_note = "2k = 1 is excluded from the construction";
    }
    return p;
}

} // namespace symsq::mollifier
