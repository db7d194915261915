#pragma once

#include "omwis/core.hpp"
#include "omwis/pattern.hpp"

#include <cstdint>
#include <limits>

namespace omwis {

// SplitMix64; satisfies UniformRandomBitGenerator and can be split into
// independent streams.
class Rng {
public:
    using result_type = std::uint64_t;
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    static constexpr auto min() -> result_type { return 0; }
    static constexpr auto max() -> result_type { return std::numeric_limits<result_type>::max(); }
    auto operator()() -> result_type
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    auto split() -> Rng { return Rng((*this)() ^ 0x5851f42d4c957f2dULL); }
    auto below(std::uint64_t n) -> std::uint64_t { return (*this)() % n; }
    auto uniform() -> double { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
    auto chance(double p) -> bool { return uniform() < p; }

private:
    std::uint64_t state_;
};

// p/q with small p, q so that scaling is exercised
auto random_weights(int n, Rng &rng) -> Weights;
auto random_graph(int n, double p, Rng &rng) -> OrderedGraph;

// Random graph avoiding every pattern in `forbidden`. Pairs are visited in
// random order; each is tried with probability p and kept only when no copy
// of a forbidden pattern passes through it.
auto random_free_graph(int n, double p, const std::vector<OrderedGraph> &forbidden, Rng &rng,
                       MatchMode mode = MatchMode::Induced) -> OrderedGraph;

} // namespace omwis
