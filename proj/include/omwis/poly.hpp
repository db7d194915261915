#pragma once

#include "omwis/core.hpp"
#include "omwis/search.hpp"

namespace omwis {

// p3-free: maximum-weight antichain of the poset u < v iff u before v and
// uv an edge, via minimum flow with lower bounds.
auto solve_p3free(const OrderedGraph &g, const Weights &w, const SolveOptions &opt = {}) -> Solution;

// chord-free (the ordering is a perfect elimination ordering): two-pass
// greedy. mirrored = true handles chordrev-free graphs.
auto solve_chordfree(const OrderedGraph &g, const Weights &w, bool mirrored = false, const SolveOptions &opt = {})
    -> Solution;

// oneedge(k)-free: table indexed by the last k solution vertices.
auto solve_oneedgek(const OrderedGraph &g, const Weights &w, int k, const SolveOptions &opt = {}) -> Solution;

} // namespace omwis
