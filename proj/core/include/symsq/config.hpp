#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace symsq {

// Runtime configuration: plain key=value file, CLI flags override, and the
// single environment override CACHE_DIR for the cache directory.
struct Config {
    std::string cache_dir = "cache";
    unsigned precision_bits = 128;
    int mollifier_M = 1;
    double mollifier_A = 1.0;
    std::uint64_t support_cap = 2'000'000;
    int thread_count = 0; // 0 = auto
    std::string output_format = "csv";
    double classify_m_divisor_primary = 1e3;
    double classify_m_divisor_loud = 200;
    double classify_p_decay_base = 2.0;

    // Parses the file when it exists, applies CACHE_DIR, validates ranges.
    // Throws std::runtime_error on malformed keys or invalid values.
    static Config load(const std::string& path);
    void validate() const;
};

} // namespace symsq
