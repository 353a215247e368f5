#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symsq::hecke {

// On-disk eigen data, one JSON file per weight. A schema_version field guards
// the layout; precision and coverage below the request invalidate the entry.
struct CachedForm {
    std::vector<std::string> basis_coords; // decimal strings
    std::vector<std::string> lambda_p;     // decimal strings, one per prime <= coverage
};

struct CachedWeight {
    int weight = 0;
    int dim = 0;
    unsigned precision_bits = 0;
    std::uint64_t coverage = 0;
    std::vector<CachedForm> forms;
};

class CacheStore {
  public:
    explicit CacheStore(std::string dir);

    std::optional<CachedWeight> load(int weight) const;
    void store(const CachedWeight& data) const;

    const std::string& dir() const { return dir_; }
    static constexpr int schema_version = 1;

  private:
    std::string path_for(int weight) const;
    std::string dir_;
};

} // namespace symsq::hecke
