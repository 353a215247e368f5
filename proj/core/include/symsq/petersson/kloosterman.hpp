#pragma once

#include <cstdint>

namespace symsq::petersson {

// Complete Kloosterman sum S(m,n;c) = sum_{h mod c, (h,c)=1} e((mh + n hbar)/c).
// Real by the h <-> -h symmetry; computed by direct enumeration of the units
// with batched modular inverses (one extended gcd per call, three mulmods per
// unit).
double kloosterman(std::int64_t m, std::int64_t n, std::uint64_t c);

} // namespace symsq::petersson
