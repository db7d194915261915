#pragma once

#include "omwis/random.hpp"

#include <functional>
#include <string>

namespace omwis {

// Randomised property suites shared by the acceptance binary and
// `omwis selftest`. Each counts trials and violations; a suite passes when it
// ran at least one trial and saw no violation.
struct SuiteResult {
    std::string name;
    long trials = 0;
    long violations = 0;
    std::string note; // first violation, or a measurement
    double millis = 0.0;
    auto pass() const -> bool { return trials > 0 && violations == 0; }
};

struct Suite {
    std::string name;
    int criterion; // acceptance criterion it belongs to
    long trials;   // full-scale trial count
    std::function<SuiteResult(long trials, Rng &rng)> run;
};

// Criteria 1-6. Performance guards are separate because they do not scale.
auto property_suites() -> std::vector<Suite>;

struct PerfResult {
    std::string name;
    int n = 0;
    double millis = 0.0, limit_millis = 0.0;
    bool correct = false; // equal to solve_generic
    auto pass() const -> bool { return correct && millis < limit_millis; }
};

auto performance_guards(Rng &rng) -> std::vector<PerfResult>;

// Runs one suite with timing; exceptions count as a violation.
auto run_suite(const Suite &s, long trials, std::uint64_t seed) -> SuiteResult;

} // namespace omwis
