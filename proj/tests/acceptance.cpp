// One PASS/FAIL line per acceptance criterion; details for each suite follow
// on indented lines. Exit status 0 only when every criterion passes.
#include "omwis/suites.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

using namespace omwis;

namespace {

const std::map<int, std::string> titles = {
    {1, "specialised solvers agree with the exhaustive oracle"},
    {2, "structural properties hold on random instances"},
    {3, "double subdivision raises alpha by exactly one"},
    {4, "hardness reductions preserve yes/no and avoid their patterns"},
    {5, "gadgets are interchangeable with their linear forests"},
    {6, "classifier spot checks and monotonicity"},
    {7, "performance guards"},
};

} // namespace

int main(int argc, char **argv)
{
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20261018;
    std::map<int, std::vector<SuiteResult>> by_criterion;
    std::uint64_t i = 0;
    for (const auto &s : property_suites())
        by_criterion[s.criterion].push_back(run_suite(s, s.trials, seed + 7919 * ++i));

    bool all = true;
    for (const auto &[c, results] : by_criterion) {
        bool ok = true;
        long trials = 0;
        for (const auto &r : results) {
            ok = ok && r.pass();
            trials += r.trials;
        }
        all = all && ok;
        std::printf("%s criterion %d: %s (%zu suites, %ld trials)\n", ok ? "PASS" : "FAIL", c, titles.at(c).c_str(),
                    results.size(), trials);
        for (const auto &r : results)
            std::printf("    %-4s %-48s trials=%-7ld violations=%-4ld %8.0f ms  %s\n", r.pass() ? "ok" : "bad",
                        r.name.c_str(), r.trials, r.violations, r.millis, r.note.c_str());
    }

    Rng rng(seed);
    bool perf = true;
    auto guards = performance_guards(rng);
    for (const auto &g : guards)
        perf = perf && g.pass();
    all = all && perf;
    std::printf("%s criterion 7: %s\n", perf ? "PASS" : "FAIL", titles.at(7).c_str());
    for (const auto &g : guards)
        std::printf("    %-4s %-12s n=%-4d %10.1f ms (limit %.0f ms) %s\n", g.pass() ? "ok" : "bad", g.name.c_str(), g.n,
                    g.millis, g.limit_millis, g.correct ? "matches generic" : "WRONG");
    std::fflush(stdout);
    return all ? 0 : 1;
}
