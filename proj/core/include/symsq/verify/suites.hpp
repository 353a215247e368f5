#pragma once

#include "symsq/config.hpp"
#include "symsq/family.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symsq::verify {

struct CheckResult {
    std::string name;
    double measured = 0;
    double bound = 0;
    double margin = 0; // bound - measured for upper bounds; sign chosen so pass = margin >= 0
    bool pass = false;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0;
    bool informational = false; // scan: reported, never asserted

    bool pass() const {
        if (informational) return true;
        for (auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
    int failures() const {
        int n = 0;
        for (auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

// Shares eigen data and central values across suites; coverage is the max any
// participating suite needs for that weight.
class FamilyPool {
  public:
    FamilyPool(const Config& cfg, hecke::CacheStore* cache) : cfg_(cfg), cache_(cache) {}
    const Family& get(int weight, std::uint64_t coverage);
    const Config& config() const { return cfg_; }
    hecke::CacheStore* cache() const { return cache_; }

  private:
    Config cfg_;
    hecke::CacheStore* cache_;
    std::map<int, Family> families_;
};

// Suite runners mirror the acceptance criteria; every tolerance is pinned
// here. `weights`, when non-empty, intersects the suite's default weight set.
SuiteReport run_hecke_suite(FamilyPool& pool, const std::vector<int>& weights = {});
SuiteReport run_petersson_suite(FamilyPool& pool, bool extended,
                                const std::vector<int>& weights = {});
SuiteReport run_afe_suite(FamilyPool& pool, const std::vector<int>& weights = {});
SuiteReport run_mollifier_suite(FamilyPool& pool, const std::vector<int>& weights = {});
SuiteReport run_holder_suite(FamilyPool& pool, const std::vector<int>& weights = {});
SuiteReport run_oracle_suite(FamilyPool& pool, const std::vector<int>& weights = {});
SuiteReport run_twisted_suite(FamilyPool& pool, const std::vector<int>& weights = {});
SuiteReport run_grh_suite(FamilyPool& pool, const std::vector<int>& weights = {});
SuiteReport run_scan_suite(FamilyPool& pool, bool extended);

std::vector<SuiteReport> run_suites(const std::string& which, FamilyPool& pool,
                                    bool extended, const std::vector<int>& weights = {});

} // namespace symsq::verify
