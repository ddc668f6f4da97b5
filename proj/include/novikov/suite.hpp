#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nov {

struct SuiteOptions {
    uint64_t seed_start = 0;
    size_t seeds = 100;
    size_t max_dim = 0; // 0: the property's default size
};

struct SuiteSummary {
    std::string prop;
    size_t runs = 0, passed = 0;
    size_t hypothesis = 0, assertion = 0, input = 0;
    std::map<std::string, size_t> tallies;  // property-specific counters
    std::vector<std::string> failures;      // first few, "seed N: message"
    double seconds = 0;
    bool clean() const { return passed == runs; }
};

// separation, deformation-basic, deformation, snf, root-bounds, lsv,
// bottleneck, precision.
const std::vector<std::string>& suite_properties();

// Runs one seeded check per seed. Every error is tallied by class; nothing throws
// except for an unknown property (FormatError).
SuiteSummary run_suite(const std::string& prop, const SuiteOptions& opt);

// Default sizes per property.
size_t default_max_dim(const std::string& prop);

} // namespace nov
