#pragma once

#include "symsq/bigfloat.hpp"
#include "symsq/hecke/basis.hpp"

#include <vector>

namespace symsq::hecke {

// Characteristic polynomial of an exact integer matrix, coefficients in
// ascending degree order (c[0] + c[1] x + ... + x^d). Faddeev-LeVerrier:
// all intermediate divisions are exact over the integers.
std::vector<mpz_class> char_poly(const Matrix& m);

// All real roots of a squarefree integer polynomial, ascending, each accurate
// to ~2^-(precision_bits) relative. Isolation is exact (Sturm chains over Q,
// dyadic bisection with exact sign evaluation), so close roots cannot be
// merged or lost. Throws std::runtime_error if the polynomial has a repeated
// root or if fewer real roots exist than the degree demands and
// require_all_real is set.
std::vector<big_float> real_roots(const std::vector<mpz_class>& poly,
                                  unsigned precision_bits,
                                  bool require_all_real = true);

} // namespace symsq::hecke
