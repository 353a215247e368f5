#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symsq::mollifier {

// Parameter pack of the mollifier construction:
//   alpha_j = 20^{j-1} / (log log kappa)^2,
//   J = 1 + max{ j : alpha_j <= 10^{-M} }   (J = 1 when that set is empty),
//   ell_j = 2 ceil(e^A alpha_j^{-3/4}),
//   c_k = 64 max(1, 2k),
//   r_k = 2 ceil(k/(k-1))            for 2k > 1 (defined only for k > 1),
//       = 2 ceil((2-3k)/(1-2k)) + 2  for 2k < 1,
//   P_j = (kappa^{alpha_{j-1}}, kappa^{alpha_j}].
struct MollifierParams {
    double k = 0;
    std::uint64_t kappa = 0;
    int M = 1;
    double A = 1.0;
    std::size_t J = 1;
    std::vector<double> alphas;                      // alpha_1 .. alpha_J
    std::vector<unsigned> ells;                      // ell_1 .. ell_J, all even
    double c_k = 0;
    std::optional<int> r_k;                          // empty when the formula breaks down
    std::string r_k_note;                            // why, when empty
    std::vector<std::pair<double, double>> intervals;// P_j = (lo, hi]
    bool desk_scale = false;                         // J clamped to 1 at finite kappa

    // r_k or a domain error explaining the breakdown (k = 1, 2k = 1, or
    // 1/2 < k < 1 where the stated formula is non-positive).
    int require_r_k() const;
};

// Builds the pack. kappa < 16 (log log kappa <= 1) is a domain error unless
// allow_desk_scale is set, mirroring how every finite-kappa run of the
// construction must opt in to the clamped J = 1 regime.
MollifierParams build_params(double k, std::uint64_t kappa, int M, double A,
                             bool allow_desk_scale = false);

} // namespace symsq::mollifier
