// Invariant battery behind `ccr check`.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ccr/tensor.hpp"

namespace ccr {

inline constexpr std::uint64_t kDefaultSeed = 20200515;

/// Measures used by the complementarity suites; swappable so the battery can
/// be pointed at a deliberately broken implementation.
struct MeasureSet {
    double (*predictability)(const DensityMatrix&);
    double (*coherence)(const DensityMatrix&);
    double (*entropy)(const DensityMatrix&);

    static MeasureSet standard();
};

struct SuiteResult {
    std::string name;
    bool passed;
    double measured;    // worst case found by the suite
    double limit;
    bool upper_bound;   // pass iff measured <= limit (true) or measured > limit (false)
    std::string detail;
};

std::vector<SuiteResult> run_checks(std::uint64_t seed = kDefaultSeed, const MeasureSet& measures = MeasureSet::standard());

bool all_passed(const std::vector<SuiteResult>& results);

void print_results(std::ostream& out, const std::vector<SuiteResult>& results);

}  // namespace ccr
