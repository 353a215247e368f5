#pragma once

#include <cmath>
#include <cstddef>

namespace symsq::arith {

// Neumaier variant of Kahan summation: the correction also catches the case
// where the incoming term is larger than the running sum.
template <typename T = long double>
struct CompensatedSum {
    T sum = 0;
    T correction = 0;

    void add(T term) {
        T t = sum + term;
        if (std::fabs(sum) >= std::fabs(term))
            correction += (sum - t) + term;
        else
            correction += (term - t) + sum;
        sum = t;
    }

    T value() const { return sum + correction; }
};

// E_ell(x) = sum_{j=0}^{ell} x^j / j!
inline long double truncated_exp(unsigned ell, long double x) {
    CompensatedSum<long double> acc;
    long double term = 1.0L;
    acc.add(term);
    for (unsigned j = 1; j <= ell; ++j) {
        term *= x / static_cast<long double>(j);
        acc.add(term);
    }
    return acc.value();
}

} // namespace symsq::arith
