#pragma once

#include "symsq/hecke/eigenforms.hpp"
#include "symsq/lfun/lvalue.hpp"

#include <cstdint>

namespace symsq::lfun {

// The unique positive root of e^{-x} = x + x^2/2, = 0.4912...
double lambda0();

// s(p,x) = p^{-lambda0/log x} * log(x/p)/log x, defined for 2 <= p < x;
// values lie in (0,1). p >= x is a domain error.
double smoothing_weight(std::uint64_t p, double x);

enum class GrhVariant {
    simplified, // keeps the fourth-power prime sum over p <= log kappa
    coarse,     // drops it (it is O(log log log kappa))
};

// One conditional upper-bound instance: the explicit terms of
//   log|L(1/2)| <= sum_{p<=x} lambda(p^2) p^{-(1/2+lambda0/log x)} log(x/p)/log x
//                  [+ sum_{p<=log k} (lambda(p^4)-lambda(p^2))/(2p)]
//                  + (1/2) log log x + (1+lambda0) log kappa / log x + O(...)
// against the computed left side. The unspecified O(.) terms are omitted, so
// the margin is reported, never asserted as a strict inequality.
struct GrhBoundReport {
    double x = 0;
    GrhVariant variant = GrhVariant::coarse;
    double lhs = 0;          // log|L(1/2)|; -inf when indeterminate
    double rhs_explicit = 0; // displayed terms only
    double margin = 0;       // rhs_explicit - lhs
    bool indeterminate = false; // |L(1/2)| below its error bound
};

GrhBoundReport grh_bound_report(const hecke::Eigenform& f, double x, GrhVariant variant);

} // namespace symsq::lfun
