#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace symsq {

// Variable-precision real; precision is set per-thread through
// big_float::default_precision (decimal digits).
using big_float = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                                 boost::multiprecision::et_off>;

inline unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 4;
}

// Scoped default-precision change for the current thread.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned bits)
        : saved_(big_float::default_precision()) {
        big_float::default_precision(digits10_for_bits(bits));
    }
    ~PrecisionGuard() { big_float::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

} // namespace symsq
