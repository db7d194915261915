#pragma once

#include "omwis/core.hpp"

namespace omwis {

constexpr int default_oracle_cap = 24;

// Exhaustive include-first search. Returns the lexicographically least
// optimum. Throws std::length_error when g.n() > cap (hard limit 64).
auto alpha_brute(const OrderedGraph &g, const Weights &w, int cap = default_oracle_cap) -> Solution;

// Unweighted independence number by branch-and-reduce (degree 0/1/2 rules
// with folding, domination, components). Meant for large sparse graphs
// such as reduction outputs; value only.
auto alpha_unit(const OrderedGraph &g) -> std::int64_t;

} // namespace omwis
