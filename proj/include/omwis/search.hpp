#pragma once

#include "omwis/core.hpp"

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>

namespace omwis {

// One JSON object per line: {"node":..,"parent":..,"action":..,"credit":..}
class Tracer {
public:
    explicit Tracer(std::ostream &out) : out_(out) {}
    auto open(long parent, const std::string &action, std::int64_t credit) -> long;

private:
    std::ostream &out_;
    long next_ = 0;
};

struct SolveOptions {
    Tracer *trace = nullptr;
    bool memo = false;           // transposition cache (aabb only)
    std::optional<int> tau;      // abbak degree threshold override
    bool check_structure = true; // assert structural claims that the algorithms rely on
};

// Per-run bookkeeping shared by the branching solvers.
class Search {
public:
    explicit Search(const SolveOptions &opt) : opt_(opt), start_(std::chrono::steady_clock::now()) {}

    auto node(long parent, const char *action, std::int64_t credit = 0) -> long
    {
        ++nodes_;
        if (opt_.trace != nullptr)
            return opt_.trace->open(parent, action, credit);
        return 0;
    }
    auto nodes() const -> std::uint64_t { return nodes_; }
    auto options() const -> const SolveOptions & { return opt_; }
    auto finish(Sol s, const Weights &w) const -> Solution
    {
        auto out = to_solution(std::move(s), w);
        out.nodes = nodes_;
        out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        return out;
    }

private:
    const SolveOptions &opt_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

} // namespace omwis
