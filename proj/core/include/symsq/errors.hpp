#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symsq {

// Requested data lies beyond the computed lambda / basis range.
struct coverage_error : std::runtime_error {
    std::uint64_t needed;
    coverage_error(const std::string& what, std::uint64_t needed_)
        : std::runtime_error(what + " (need coverage >= " + std::to_string(needed_) + ")"),
          needed(needed_) {}
};

// Eigenvalue separation (or a linear solve) failed at the working precision
// even after escalation.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mollifier expansion would exceed the configured support budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace symsq
