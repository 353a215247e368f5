#pragma once

#include "symsq/hecke/eigenforms.hpp"
#include "symsq/mollifier/params.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace symsq::mollifier {

// Thresholds of the classification sets; defaults are the construction's
// constants. Overridable so desk-scale runs can reach every branch.
struct ClassifyThresholds {
    double m_divisor_primary = 1e3; // |M_{m,l}| <= ell_m / this  = "clean"
    double m_divisor_loud = 200;    // the violation level quoted for S(j), j >= 1
    double p_decay_base = 2.0;      // |P_m| compared against base^{-m/10}
};

struct ClassifyReport {
    // M_{l,j}(f) = sum_{p in P_l} lambda(p^2)/sqrt(p) s(p, kappa^{alpha_j}),
    // row-major [l-1][j-1] for 1 <= l <= j <= J (entries with l > j unused)
    std::vector<std::vector<double>> m_lj;
    std::vector<double> p_m;              // P_m(f), m = 0 .. m_max
    double p1 = 0;                        // P_1(f) prime sum
    bool in_t = false;                    // |P_1(f)| <= ell_1 / 10^3

    // partition class: smallest level whose cleanliness fails (0 if level 1
    // already fails, J if every level is clean at ell_m/10^3)
    std::size_t s_class = 0;
    // the quoted S(j) definitions carry a second, louder threshold for the
    // violating level; recorded separately since the two-threshold version
    // does not partition the family
    std::optional<std::size_t> s_class_strict;

    std::optional<std::size_t> p_class;   // maximal m with |P_m| > 2^{-m/10}, if any
};

ClassifyReport classify(const hecke::Eigenform& f, const MollifierParams& params,
                        const ClassifyThresholds& thresholds = {});

} // namespace symsq::mollifier
